#include "tevtrop/formulas.hpp"

#include "tevtrop/paths.hpp"

#include <doctest.h>

#include <vector>

using namespace tevtrop;

namespace {

Params make(int g, int ell, std::vector<std::vector<int>> parts) {
  std::vector<Profile> mus;
  for (auto& p : parts) mus.emplace_back(std::move(p));
  return Params(g, ell, std::move(mus));
}

}  // namespace

TEST_SUITE_BEGIN("formulas");

TEST_CASE("classical degrees are 2^g") {
  for (int g = 0; g <= 20; ++g) {
    CAPTURE(g);
    const DegreeValue dv = tev_classical(g);
    CHECK(dv.value == BigInt(1) << g);
    CHECK(dv.provenance == Provenance::Classical);
    CHECK(tev_ell(g, 0).value == dv.value);
  }
}

TEST_CASE("frozen excess and deficit values") {
  CHECK(tev_ell(1, 1).value == 2);
  CHECK(tev_ell(2, 1).value == 4);
  CHECK(tev_ell(1, 2).value == 2);
  CHECK(tev_ell(2, -1).value == 1);
  CHECK(tev_ell(3, -1).value == 4);
  CHECK(tev_ell(4, -1).value == 11);
  CHECK(tev_ell(4, -2).value == 2);
  CHECK(tev_ell(6, -3).value == 5);
}

TEST_CASE("provenance tags track the formula that answered") {
  CHECK(tev_ell(3, 0).provenance == Provenance::Classical);
  CHECK(tev_ell(3, 2).provenance == Provenance::PositiveExcess);
  CHECK(tev_ell(3, -1).provenance == Provenance::NegativeDeficit);
  CHECK(tev_ell(0, 1).provenance == Provenance::Extrapolated);
  CHECK(tev_ell(0, 1).value == 1);
  CHECK(to_string(Provenance::Classical) == "classical");
  CHECK(to_string(Provenance::PositiveExcess) == "positive-excess");
  CHECK(to_string(Provenance::NegativeDeficit) == "negative-deficit");
  CHECK(to_string(Provenance::GeneralProfiles) == "general-profiles");
  CHECK(to_string(Provenance::Extrapolated) == "extrapolated");
}

TEST_CASE("positive excess is constant in ell for g >= 1") {
  for (int g = 1; g <= 10; ++g) {
    for (int ell = 1; ell <= 5; ++ell) {
      CAPTURE(g);
      CAPTURE(ell);
      CHECK(tev_ell(g, ell).value == BigInt(1) << g);
    }
  }
}

TEST_CASE("deficit formula agrees with the word-count expansion") {
  // 2^g minus the weighted words cut off by the deficit: for ell < 0 the
  // value equals sum over i >= -ell of count_exact(g,i) * (g+1-2i), i.e.
  // only words with at least -ell descents survive.
  for (int g = 1; g <= 14; ++g) {
    for (int ell = -5; ell < 0; ++ell) {
      if (g + 1 + ell < 1 || g + 3 + 2 * ell < 3) continue;
      BigInt surviving = 0;
      for (int i = -ell; 2 * i <= g; ++i) {
        surviving += count_exact(g, i) * (g + 1 - 2 * i);
      }
      CAPTURE(g);
      CAPTURE(ell);
      CHECK(tev_ell(g, ell).value == surviving);
    }
  }
}

TEST_CASE("domain errors outside the valid window") {
  CHECK_THROWS_AS(tev_ell(-1, 0), DomainError);
  CHECK_THROWS_AS(tev_ell(0, -1), DomainError);  // d = 0
  CHECK_THROWS_AS(tev_ell(1, -1), DomainError);  // n = 2
  CHECK_THROWS_AS(tev_ell(5, -3), DomainError);  // n = 2
}

TEST_CASE("frozen general-profile values") {
  CHECK(tev_general(make(2, 0, {{1, 1}, {1}, {1}, {1}})).value == 3);
  CHECK(tev_general(make(2, 0, {{1, 1, 1}, {1}, {1}})).value == 1);
  CHECK(tev_general(make(1, 1, {{1, 1, 1}, {1}, {1}, {1}})).value == 1);
  CHECK(tev_general(make(2, 0, {{2}, {2}, {1}})).value == 2);
  CHECK(tev_general(make(3, 0, {{2, 1}, {1}, {1}, {1}})).value == 4);
  CHECK(tev_general(make(2, 0, {{1, 1}, {1}, {1}, {1}})).provenance ==
        Provenance::GeneralProfiles);
}

TEST_CASE("general formula depends only on profile magnitudes") {
  // (3) vs (2,1) vs (1,1,1) in the first slot.
  const BigInt a = tev_general(make(3, 1, {{3}, {1}, {1}, {1}, {1}, {1}})).value;
  const BigInt b =
      tev_general(make(3, 1, {{2, 1}, {1}, {1}, {1}, {1}, {1}})).value;
  const BigInt c =
      tev_general(make(3, 1, {{1, 1, 1}, {1}, {1}, {1}, {1}, {1}})).value;
  CHECK(a == b);
  CHECK(b == c);
  // Middle slot: (2) vs (1,1) at position 2 of three profiles.
  const BigInt e = tev_general(make(2, 0, {{2}, {2}, {1}})).value;
  const BigInt f = tev_general(make(2, 0, {{2}, {1, 1}, {1}})).value;
  CHECK(e == f);
}

TEST_CASE("general formula reduces to the all-simple formula") {
  for (int g = 0; g <= 8; ++g) {
    for (int ell = -3; ell <= 3; ++ell) {
      const int d = g + 1 + ell;
      const int n = g + 3 + 2 * ell;
      if (d < 1 || n < 3) continue;
      Params p = Params::all_simple(g, ell);
      CAPTURE(g);
      CAPTURE(ell);
      CHECK(tev_general(p).value == tev_ell(g, ell).value);
    }
  }
}

TEST_CASE("general values never exceed 2^g") {
  // Every correction term removes words; the classical count is an upper
  // bound. Swept over single-part magnitude tuples.
  for (int g = 1; g <= 7; ++g) {
    for (int ell = -2; ell <= 2; ++ell) {
      const int d = g + 1 + ell;
      const int n = g + 3 + 2 * ell;
      if (d < 1 || n < 3) continue;
      // Tuples (m1 >= m2 >= m3) with m1+m2+m3 = n, m1 <= d, padded by 1s.
      for (int m1 = 1; m1 <= std::min(d, n - 2); ++m1) {
        for (int m2 = 1; m2 <= m1; ++m2) {
          const int rest = n - m1 - m2;
          if (rest < 1 || rest > m2) continue;
          Params p = make(g, ell, {{m1}, {m2}, {rest}});
          if (!validate(p).ok) continue;
          const BigInt v = tev_general(p).value;
          CAPTURE(g);
          CAPTURE(ell);
          CAPTURE(m1);
          CAPTURE(m2);
          CHECK(v >= 0);
          CHECK(v <= BigInt(1) << g);
        }
      }
    }
  }
}

TEST_CASE("validation failures propagate") {
  CHECK_THROWS_AS(tev_general(make(2, 0, {{1}, {1}, {1}})), DomainError);
  CHECK_THROWS_AS(tev_general(make(2, 0, {{5}, {1}, {1}})), DomainError);
}

TEST_SUITE_END();
