#include "tevtrop/grid.hpp"

#include <algorithm>
#include <stdexcept>

#include "tevtrop/formulas.hpp"
#include "tevtrop/paths.hpp"

namespace tevtrop {

namespace {

// Rows of the grid: the genus words together with their D-counts, in
// lexicographic order.  g == 0 contributes the single empty row when no
// joined ends are forced (min_d_count == 0).
struct Row {
    std::string word;
    int d_count = 0;
};

std::vector<Row> grid_rows(int g, int min_d_count) {
    std::vector<Row> rows;
    if (g == 0) {
        if (min_d_count <= 0) rows.push_back({std::string{}, 0});
        return rows;
    }
    for (auto& word : enumerate_words(g, min_d_count)) {
        const int i = word_d_count(word);
        rows.push_back({std::move(word), i});
    }
    return rows;
}

} // namespace

Grid build_grid(int g, int ell) {
    require_valid(Params::all_simple(g, ell));
    const int n = g + 3 + 2 * ell;
    Grid grid{g, ell, {}};
    for (const auto& row : grid_rows(g, std::max(0, -ell))) {
        const int m = row.d_count + ell;
        const int delta = g + 1 - 2 * row.d_count;
        for (int j = m + 1; j <= n - 2 - m; ++j)
            grid.cells.push_back({row.word, j, delta, m, 1});
    }
    return grid;
}

Grid build_grid_general(const Params& params) {
    require_valid(params);
    const int g = params.g();
    const int ell = params.ell();
    const int n = params.n();
    const int k = static_cast<int>(params.profiles().size());

    // Partial sums of magnitudes: profile h (1-based) owns the column range
    // [P_{h-1}, P_h - 1].
    std::vector<int> partial(k + 1, 0);
    for (int h = 1; h <= k; ++h)
        partial[h] = partial[h - 1] + params.profiles()[h - 1].magnitude();

    Grid grid{g, ell, {}};
    for (const auto& row : grid_rows(g, std::max(0, -ell))) {
        const int m = row.d_count + ell;
        const int delta = g + 1 - 2 * row.d_count;
        const int band_lo = m + 1;
        const int band_hi = n - 2 - m;
        for (int h = 1; h <= k; ++h) {
            const int lo = std::max(band_lo, partial[h - 1]);
            const int hi = std::min(band_hi, partial[h] - 1);
            if (lo > hi) continue;
            if (h == 1 || h == k) continue; // boundary profiles: cells removed
            const int mag = params.profiles()[h - 1].magnitude();
            const int block = std::max(1, mag - m);
            if (block > hi - lo + 1)
                throw ConstructionFault(
                    "grid merge block exceeds available cells in row '" +
                    row.word + "' profile " + std::to_string(h));
            int j = lo;
            if (block > 1) {
                grid.cells.push_back({row.word, lo, delta, m, block});
                j = lo + block;
            }
            for (; j <= hi; ++j)
                grid.cells.push_back({row.word, j, delta, m, 1});
        }
    }
    return grid;
}

std::optional<FragmentClass> transform_fragment(int j, const Params& params) {
    require_valid(params);
    const int n = params.n();
    if (j < 1 || j > n - 2)
        throw DomainError("fragment index j=" + std::to_string(j) +
                          " outside [1, " + std::to_string(n - 2) + "]");
    const int k = static_cast<int>(params.profiles().size());
    int partial = 0;
    for (int h = 1; h <= k; ++h) {
        const int next = partial + params.profiles()[h - 1].magnitude();
        if (j >= partial && j <= next - 1) {
            if (h == 1 || h == k) return std::nullopt;
            return FragmentClass{h,
                                 {1, partial},
                                 {partial + 1, next},
                                 {next + 1, n}};
        }
        partial = next;
    }
    throw ConstructionFault("fragment index not covered by profile ranges");
}

bool l2_feasibility(int d, int j1, int j2, int L1, int L2, int L3,
                    const std::vector<int>& decomposition) {
    if (d < 1 || j1 < 0 || j2 < 0 || L1 < 0 || L2 < 0 || L3 < 0)
        throw DomainError("l2_feasibility expects nonnegative data, d >= 1");
    if (j1 + j2 > (d - 1) / 2) return false;
    if (d - 2 * (j1 + j2) <= 0) return false;
    if (L1 + L2 + L3 != d - 2) return false;
    if (L3 < L2) return false;
    if (static_cast<int>(decomposition.size()) > d - j1 - j2) return false;
    int sum = 0;
    for (int part : decomposition) {
        if (part < 1 || part > L2 + 1) return false;
        sum += part;
    }
    return sum == L1 + 1;
}

bool l2_decomposition_exists(int d, int j1, int j2, int L1, int L2, int L3) {
    // Greedy witness: parts of size L2 + 1, remainder folded in.  Such a
    // decomposition exists iff ceil((L1 + 1) / (L2 + 1)) parts fit.
    if (d < 1 || j1 < 0 || j2 < 0 || L1 < 0 || L2 < 0 || L3 < 0)
        throw DomainError("l2_decomposition_exists expects nonnegative data");
    if (j1 + j2 > (d - 1) / 2) return false;
    if (d - 2 * (j1 + j2) <= 0) return false;
    if (L1 + L2 + L3 != d - 2) return false;
    if (L3 < L2) return false;
    const int needed = (L1 + 1 + L2) / (L2 + 1); // ceil((L1+1)/(L2+1))
    return needed <= d - j1 - j2;
}

} // namespace tevtrop
