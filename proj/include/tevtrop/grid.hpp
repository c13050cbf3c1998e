#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tevtrop/core.hpp"

namespace tevtrop {

// One equivalence class of grid cells.  For simple profiles every class is a
// single cell (merge_size == 1); for general profiles a class may collect a
// block of consecutive cells of one row (merge_size > 1), anchored at the
// lowest column index of the block.
struct GridCell {
    std::string word;    // genus word over {U, D}; empty for g == 0
    int j = 0;           // fragment/column index, 1 <= j <= n - 2
    int delta = 0;       // final degree of the word: g + 1 - 2 * (#D)
    int joined_ends = 0; // m = (#D) + ell
    int merge_size = 1;  // number of underlying cells in this class

    bool operator==(const GridCell&) const = default;
};

struct Grid {
    int g = 0;
    int ell = 0;
    std::vector<GridCell> cells;
};

// Grid for simple profiles: one row per genus word with at least max(0, -ell)
// letters D, one cell per column j in the row band [m + 1, n - 2 - m].
// Rows are ordered lexicographically (U < D), cells by ascending j.
Grid build_grid(int g, int ell);

// Grid of cell classes for an arbitrary valid profile tuple.  The class count
// always equals tev_general(params).  For all-simple profiles this returns
// exactly build_grid(g, ell).
Grid build_grid_general(const Params& params);

// The generalized fragment attached to classical fragment index j: the marks
// are split into three consecutive groups by the profile containing column j.
// Columns falling into the first or last profile's range have no valid
// fragment (nullopt).
struct FragmentClass {
    int profile_index = 0;                // h, 1-based; 1 < h < k
    std::pair<int, int> right_marks;      // marks 1 .. P_{h-1}
    std::pair<int, int> middle_marks;     // marks P_{h-1}+1 .. P_h
    std::pair<int, int> left_marks;       // marks P_h+1 .. n

    bool operator==(const FragmentClass&) const = default;
};

std::optional<FragmentClass> transform_fragment(int j, const Params& params);

// Feasibility of a middle-fragment datum (d, j1, j2, L1, L2, L3) together
// with an explicit decomposition of L1 + 1:
//   (1) j1 + j2 <= floor((d - 1) / 2)
//   (2) d - 2 * (j1 + j2) > 0
//   (3) L1 + L2 + L3 == d - 2
//   (4) L3 >= L2
//   (5) the decomposition is a list of at most d - j1 - j2 parts, each in
//       [1, L2 + 1], summing to L1 + 1.
bool l2_feasibility(int d, int j1, int j2, int L1, int L2, int L3,
                    const std::vector<int>& decomposition);

// True iff some decomposition satisfying hypothesis (5) exists, i.e. iff
// ceil((L1 + 1) / (L2 + 1)) <= d - j1 - j2 (and (1)-(4) hold).
bool l2_decomposition_exists(int d, int j1, int j2, int L1, int L2, int L3);

} // namespace tevtrop
