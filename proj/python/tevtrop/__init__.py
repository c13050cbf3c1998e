"""Exact tropical Tevelev degrees.

Three independent routes to the same integers: closed-form formulas,
combinatorial grid enumeration, and explicit tropical covers whose
multiplicities are verified factor by factor. All arithmetic is exact.
"""

from tevtrop._core import (
    DomainError,
    OracleRangeError,
    count_at_least,
    count_exact,
    covers,
    deg,
    deg_info,
    grid,
    hurwitz,
    l2_feasible,
    validate,
)

__version__ = "1.0.0"

__all__ = [
    "DomainError",
    "OracleRangeError",
    "count_at_least",
    "count_exact",
    "covers",
    "deg",
    "deg_info",
    "grid",
    "hurwitz",
    "l2_feasible",
    "validate",
]
