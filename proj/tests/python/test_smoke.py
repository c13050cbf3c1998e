"""Smoke tests for the tevtrop extension module.

The heavy verification lives in the C++ unit and acceptance suites; these
tests only confirm that the Python surface is wired up and returns exact
Python integers and fractions.
"""

from fractions import Fraction

import pytest

import tevtrop


def test_classical_degrees_are_powers_of_two():
    assert tevtrop.deg(0, 0) == 1
    assert tevtrop.deg(3, 0) == 8
    assert tevtrop.deg(10, 0) == 1024
    assert isinstance(tevtrop.deg(10, 0), int)


def test_excess_and_deficit():
    assert tevtrop.deg(1, 1) == 2
    assert tevtrop.deg(4, -1) == 11
    assert tevtrop.deg(4, -2) == 2


def test_provenance_labels():
    assert tevtrop.deg_info(5, 0)["provenance"] == "classical"
    assert tevtrop.deg_info(2, -1)["provenance"] == "negative-deficit"
    assert tevtrop.deg_info(2, 1)["provenance"] == "positive-excess"


def test_general_profiles_and_magnitude_invariance():
    assert tevtrop.deg(2, 0, [[1, 1], [1], [1], [1]]) == 3
    assert tevtrop.deg(3, 0, [[2, 1], [1], [1], [1]]) == 4
    # Only the magnitudes matter, not the partitions realizing them.
    assert tevtrop.deg(2, 0, [[2], [2], [1]]) == tevtrop.deg(
        2, 0, [[1, 1], [2], [1]]
    )


def test_grid_matches_formula():
    cells = tevtrop.grid(3, 0)
    assert len(cells) == 8
    assert {c["word"] for c in cells} == {"UU", "UD", "DU"}
    assert all(c["merge_size"] == 1 for c in cells)
    assert len(tevtrop.grid(2, 0, [[1, 1], [1], [1], [1]])) == 3


def test_covers_have_multiplicity_one():
    entries = tevtrop.covers(1, 1)
    assert len(entries) == 2
    for entry in entries:
        assert entry["multiplicity"] == Fraction(1)
        assert entry["determinant"] == 2
    assert len({e["fingerprint"] for e in entries}) == 2


def test_hurwitz_is_exact():
    assert tevtrop.hurwitz(3, [[3], [3], [1, 1, 1]], marked=False) == Fraction(1, 3)
    assert tevtrop.hurwitz(3, [[3], [3], [1, 1, 1]], marked=True) == 1
    assert tevtrop.hurwitz(4, [[4], [2, 1, 1], [3, 1]]) == 1


def test_word_counts():
    assert tevtrop.count_exact(4, 0) == 1
    assert tevtrop.count_exact(4, 1) == 3
    assert tevtrop.count_at_least(4, 2) == 6


def test_l2_feasibility():
    assert not tevtrop.l2_feasible(8, 1, 1, 3, 2, 1)
    assert tevtrop.l2_feasible(10, 0, 0, 0, 4, 4)


def test_invalid_instances_raise():
    with pytest.raises(tevtrop.DomainError):
        tevtrop.deg(0, -1)
    with pytest.raises(ValueError):
        tevtrop.deg(1, 0, [[2], [1], [1], [1], [1]])
    assert tevtrop.validate(0, -1) != []
    assert tevtrop.validate(3, 0) == []
