#include "tevtrop/grid.hpp"

#include "tevtrop/formulas.hpp"
#include "tevtrop/paths.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

using namespace tevtrop;

namespace {

Params make(int g, int ell, std::vector<std::vector<int>> parts) {
  std::vector<Profile> mus;
  for (auto& p : parts) mus.emplace_back(std::move(p));
  return Params(g, ell, std::move(mus));
}

GridCell cell(std::string word, int j, int delta, int m, int merge = 1) {
  GridCell c;
  c.word = std::move(word);
  c.j = j;
  c.delta = delta;
  c.joined_ends = m;
  c.merge_size = merge;
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("grid");

TEST_CASE("frozen grid for genus 3, ell 0") {
  const Grid g = build_grid(3, 0);
  const std::vector<GridCell> expected = {
      cell("UU", 1, 4, 0), cell("UU", 2, 4, 0), cell("UU", 3, 4, 0),
      cell("UU", 4, 4, 0), cell("UD", 2, 2, 1), cell("UD", 3, 2, 1),
      cell("DU", 2, 2, 1), cell("DU", 3, 2, 1)};
  CHECK(g.cells == expected);
}

TEST_CASE("frozen grid for genus 1, ell 1") {
  const Grid g = build_grid(1, 1);
  const std::vector<GridCell> expected = {cell("", 2, 2, 1),
                                          cell("", 3, 2, 1)};
  CHECK(g.cells == expected);
}

TEST_CASE("frozen grid for genus 2, ell -1") {
  const Grid g = build_grid(2, -1);
  const std::vector<GridCell> expected = {cell("D", 1, 1, 0)};
  CHECK(g.cells == expected);
}

TEST_CASE("genus 0 grid is a single empty row for ell >= 0") {
  const Grid g = build_grid(0, 1);
  CHECK(g.cells == std::vector<GridCell>{cell("", 2, 1, 1)});
  CHECK(build_grid(0, 0).cells.size() == 1);
}

TEST_CASE("boundary columns force zero joined ends") {
  // j = 1 and j = n-2 lie outside every band with m >= 1.
  for (int g = 1; g <= 8; ++g) {
    for (int ell = -2; ell <= 2; ++ell) {
      const int d = g + 1 + ell;
      const int n = g + 3 + 2 * ell;
      if (d < 1 || n < 3) continue;
      for (const GridCell& c : build_grid(g, ell).cells) {
        CAPTURE(g);
        CAPTURE(ell);
        CAPTURE(c.word);
        CAPTURE(c.j);
        CHECK(c.j >= c.joined_ends + 1);
        CHECK(c.j <= n - 2 - c.joined_ends);
        if (c.j == 1 || c.j == n - 2) CHECK(c.joined_ends == 0);
        CHECK(c.delta == g + 1 - 2 * word_d_count(c.word));
        CHECK(c.joined_ends == word_d_count(c.word) + ell);
        CHECK(c.merge_size == 1);
      }
    }
  }
}

TEST_CASE("cell count equals the closed formula across the sweep") {
  for (int g = 1; g <= 10; ++g) {
    for (int ell = -3; ell <= 3; ++ell) {
      const int d = g + 1 + ell;
      const int n = g + 3 + 2 * ell;
      if (d < 1 || n < 3) continue;
      CAPTURE(g);
      CAPTURE(ell);
      CHECK(BigInt(build_grid(g, ell).cells.size()) ==
            tev_ell(g, ell).value);
    }
  }
}

TEST_CASE("general grid: frozen class lists") {
  // ((1,1),(1),(1),(1)) at g=2, ell=0: the first profile absorbs column 1.
  const Grid a = build_grid_general(make(2, 0, {{1, 1}, {1}, {1}, {1}}));
  const std::vector<GridCell> expected_a = {cell("U", 2, 3, 0),
                                            cell("U", 3, 3, 0),
                                            cell("D", 2, 1, 1)};
  CHECK(a.cells == expected_a);

  // ((1,1,1),(1),(1)) at g=2, ell=0 leaves a single class.
  const Grid b = build_grid_general(make(2, 0, {{1, 1, 1}, {1}, {1}}));
  CHECK(b.cells.size() == 1);

  // ((1,1,1),(1),(1),(1)) at g=1, ell=1 leaves a single class.
  const Grid c = build_grid_general(make(1, 1, {{1, 1, 1}, {1}, {1}, {1}}));
  CHECK(c.cells.size() == 1);

  // ((2),(2),(1)) at g=2, ell=0: a merged middle block plus a D-row cell.
  const Grid d = build_grid_general(make(2, 0, {{2}, {2}, {1}}));
  const std::vector<GridCell> expected_d = {cell("U", 2, 3, 0, 2),
                                            cell("D", 2, 1, 1, 1)};
  CHECK(d.cells == expected_d);
}

TEST_CASE("general grid reduces to the classical grid on simple profiles") {
  for (int g = 1; g <= 8; ++g) {
    for (int ell = -2; ell <= 2; ++ell) {
      const int d = g + 1 + ell;
      const int n = g + 3 + 2 * ell;
      if (d < 1 || n < 3) continue;
      Params p = Params::all_simple(g, ell);
      CAPTURE(g);
      CAPTURE(ell);
      CHECK(build_grid_general(p).cells == build_grid(g, ell).cells);
    }
  }
}

TEST_CASE("general class count equals the general formula") {
  // Single-part profiles of every descending magnitude tuple.
  for (int g = 1; g <= 6; ++g) {
    for (int ell = -2; ell <= 2; ++ell) {
      const int d = g + 1 + ell;
      const int n = g + 3 + 2 * ell;
      if (d < 1 || n < 3) continue;
      // Enumeration of descending tuples summing to n, parts <= d.
      std::vector<int> tuple;
      const std::function<void(int, int)> recurse = [&](int left, int cap) {
        if (left == 0) {
          if (tuple.size() < 3) return;
          std::vector<std::vector<int>> parts;
          for (int m : tuple) parts.push_back({m});
          Params p = make(g, ell, parts);
          CAPTURE(g);
          CAPTURE(ell);
          CHECK(BigInt(build_grid_general(p).cells.size()) ==
                tev_general(p).value);
          return;
        }
        for (int m = std::min(cap, left); m >= 1; --m) {
          tuple.push_back(m);
          recurse(left - m, m);
          tuple.pop_back();
        }
      };
      recurse(n, d);
    }
  }
}

TEST_CASE("merged blocks conserve the underlying cell count") {
  // Summing merge sizes over a row reproduces the classical band width
  // minus the removed end-profile columns.
  Params p = make(3, 0, {{2}, {2}, {1}, {1}});
  const Grid general = build_grid_general(p);
  const Grid classical = build_grid(3, 0);
  long long merged_total = 0;
  for (const GridCell& c : general.cells) merged_total += c.merge_size;
  long long classical_in_middle = 0;
  for (const GridCell& c : classical.cells) {
    // First profile occupies columns up to 1; the last profile's range is
    // {5}; middle columns are 2..4.
    if (c.j >= 2 && c.j <= 4) ++classical_in_middle;
  }
  CHECK(merged_total == classical_in_middle);
}

TEST_CASE("transform_fragment locates the owning profile") {
  Params p = make(2, 0, {{2}, {2}, {1}});
  // Prefix sums: P1 = 2, P2 = 4, P3 = 5 (n = 5).
  CHECK_FALSE(transform_fragment(1, p).has_value());  // first profile
  // j = 4 exceeds the fragment domain [1, n - 2] = [1, 3] entirely.
  CHECK_THROWS_AS((void)transform_fragment(4, p), DomainError);
  const auto f2 = transform_fragment(2, p);
  REQUIRE(f2.has_value());
  CHECK(f2->profile_index == 2);
  CHECK(f2->right_marks == std::pair<int, int>{1, 2});
  CHECK(f2->middle_marks == std::pair<int, int>{3, 4});
  CHECK(f2->left_marks == std::pair<int, int>{5, 5});
  const auto f3 = transform_fragment(3, p);
  REQUIRE(f3.has_value());
  CHECK(f3->profile_index == 2);

  // With all magnitudes >= 2 the last profile owns in-range columns: for
  // ((2),(2),(2)) at (3,0), n = 6 and the last profile covers columns 4..5,
  // so j = 4 is a valid index with no generalized fragment.
  Params q = make(3, 0, {{2}, {2}, {2}});
  CHECK_FALSE(transform_fragment(4, q).has_value());
  const auto f2q = transform_fragment(2, q);
  REQUIRE(f2q.has_value());
  CHECK(f2q->profile_index == 2);
  CHECK(f2q->middle_marks == std::pair<int, int>{3, 4});
  CHECK(f2q->left_marks == std::pair<int, int>{5, 6});
}

TEST_CASE("l2 feasibility: explicit decompositions") {
  // d=6, j1=j2=1, lengths (2,1,1): L1+1 = 3 split as 2+1 with parts <= 2.
  CHECK(l2_feasibility(6, 1, 1, 2, 1, 1, {2, 1}));
  // Part exceeding L2+1 is rejected.
  CHECK_FALSE(l2_feasibility(6, 1, 1, 2, 1, 1, {3}));
  // Wrong sum.
  CHECK_FALSE(l2_feasibility(6, 1, 1, 2, 1, 1, {1, 1}));
  // Too many parts: need <= d - j1 - j2.
  CHECK_FALSE(l2_feasibility(6, 2, 0, 3, 0, 1, {1, 1, 1, 1, 1}));
  CHECK(l2_feasibility(6, 1, 0, 3, 0, 1, {1, 1, 1, 1}));
  // Hypothesis (1): j1 + j2 too large.
  CHECK_FALSE(l2_feasibility(4, 1, 1, 0, 1, 1, {1}));
  // Hypothesis (3): lengths must sum to d - 2.
  CHECK_FALSE(l2_feasibility(6, 0, 0, 1, 1, 1, {1, 1}));
  // Hypothesis (4): L3 >= L2.
  CHECK_FALSE(l2_feasibility(6, 0, 0, 1, 2, 1, {1, 1}));
}

TEST_CASE("l2 shortcut agrees with brute-force decomposition search") {
  for (int d = 2; d <= 12; ++d) {
    for (int j1 = 0; j1 <= d / 2; ++j1) {
      for (int j2 = 0; j2 <= d / 2; ++j2) {
        for (int L1 = 0; L1 <= d - 2; ++L1) {
          for (int L2 = 0; L1 + L2 <= d - 2; ++L2) {
            const int L3 = d - 2 - L1 - L2;
            // Brute force: descending part lists over [1, L2+1] with at
            // most d-j1-j2 parts summing to L1+1.
            bool found = false;
            const int max_parts = d - j1 - j2;
            std::vector<int> parts;
            const std::function<void(int, int)> search = [&](int left,
                                                             int cap) {
              if (found) return;
              if (left == 0) {
                found = l2_feasibility(d, j1, j2, L1, L2, L3, parts);
                return;
              }
              if (static_cast<int>(parts.size()) >= max_parts) return;
              for (int q = std::min(cap, left); q >= 1; --q) {
                parts.push_back(q);
                search(left - q, q);
                parts.pop_back();
                if (found) return;
              }
            };
            if (max_parts > 0) search(L1 + 1, L2 + 1);
            CAPTURE(d);
            CAPTURE(j1);
            CAPTURE(j2);
            CAPTURE(L1);
            CAPTURE(L2);
            CHECK(l2_decomposition_exists(d, j1, j2, L1, L2, L3) == found);
          }
        }
      }
    }
  }
}

TEST_CASE("large middle lengths first become feasible at degree 10") {
  // For d <= 9 no tuple with L2 >= 4 satisfies the length budget at all;
  // at d = 10 the tuple (0,4,4) with one singleton part is feasible.
  for (int d = 2; d <= 9; ++d) {
    for (int j1 = 0; 2 * j1 <= d - 1; ++j1) {
      for (int j2 = 0; 2 * (j1 + j2) <= d - 1; ++j2) {
        for (int L2 = 4; L2 <= d - 2; ++L2) {
          for (int L3 = L2; L2 + L3 <= d - 2; ++L3) {
            const int L1 = d - 2 - L2 - L3;
            CAPTURE(d);
            CHECK_FALSE(l2_decomposition_exists(d, j1, j2, L1, L2, L3));
          }
        }
      }
    }
  }
  CHECK(l2_decomposition_exists(10, 0, 0, 0, 4, 4));
  CHECK(l2_feasibility(10, 0, 0, 0, 4, 4, {1}));
}

TEST_SUITE_END();
