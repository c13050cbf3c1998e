#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tevtrop/core.hpp"

namespace tevtrop {

// A local branched-cover counting problem at a trivalent vertex: three
// ramification profiles (cycle types) over a common local degree d.
//
// The marked flag selects the counting convention for vertices that carry a
// marked strand.  Queries are canonically reordered before evaluation: the
// transposition profile (2,1,...,1), if present, becomes the second slot, and
// of the remaining two the profile with the most unit parts (ties broken by
// part count, then lexicographically) becomes the third slot.  With
// marked == false the count is the number of transitive triples
// (s1, s2, s3) of permutations of the given cycle types with s1*s2*s3 = id,
// weighted by 1/d!.  With marked == true each triple is weighted by the
// number of fixed points of s3, modelling a marked end lying on one of the
// degree-one strands of the third direction.
struct LocalHurwitzQuery {
    int d = 1;
    std::array<Profile, 3> profiles{};
    bool marked = false;
};

// Closed-form catalog.  Returns nullopt when the (shape, flag) pair is not
// catalogued.  Catalogued shapes (after canonical reordering; a = smaller,
// b = larger non-unit head part):
//   1. d == 1                                   -> 1            (both flags)
//   2. ((d), (d), (1^d)), d >= 2                -> marked ? 1 : 1/d
//   3. ((d), (2,1^{d-2}), (d-1,1)), d >= 3      -> 1            (both flags)
//   4. ((d), (2,1^{d-2}), (c,d-c)), 2<=c<d-c    -> 1            (unmarked)
//   5. ((d), (b,1^*), (a,1^*)), a+b == d+1      -> 1            (unmarked)
//   6. ((d-1,1), (b,1^*), (a,1^*)), a+b == d+2  -> 1            (unmarked)
std::optional<BigRat> local_hurwitz_catalog(const LocalHurwitzQuery& q);

// Exhaustive permutation-triple count.  Throws OracleRangeError for d > 7.
BigRat local_hurwitz_oracle(const LocalHurwitzQuery& q);

// Catalog value when available, otherwise the oracle (d <= 7).
// Throws OracleRangeError for uncatalogued shapes with d > 7.
BigRat local_hurwitz(const LocalHurwitzQuery& q);

// All partitions of d in descending part order, largest-first ordering.
// Utility for sweeping query shapes.
std::vector<std::vector<int>> partitions_of(int d);

} // namespace tevtrop
