#include "tevtrop/paths.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

using namespace tevtrop;

namespace {

// Independent enumeration: all 2^(g-1) letter strings, filtered by the
// running-degree rule directly.
std::vector<std::string> brute_words(int g, int min_d) {
  std::vector<std::string> out;
  const int len = g - 1;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::string word;
    int degree = 2;
    int d_count = 0;
    bool ok = true;
    for (int t = 0; t < len; ++t) {
      const bool is_d = (mask >> t) & 1u;
      word += is_d ? 'D' : 'U';
      degree += is_d ? -1 : 1;
      d_count += is_d ? 1 : 0;
      if (degree < 1) {
        ok = false;
        break;
      }
    }
    if (ok && d_count >= min_d) out.push_back(word);
  }
  std::sort(out.begin(), out.end(), [](const std::string& a,
                                       const std::string& b) {
    // lexicographic with U before D
    for (std::size_t t = 0; t < a.size() && t < b.size(); ++t) {
      if (a[t] != b[t]) return a[t] == 'U';
    }
    return a.size() < b.size();
  });
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("paths");

TEST_CASE("frozen word lists for small genus") {
  CHECK(enumerate_words(1, 0) == std::vector<std::string>{""});
  CHECK(enumerate_words(2, 0) == std::vector<std::string>{"U", "D"});
  CHECK(enumerate_words(3, 0) == std::vector<std::string>{"UU", "UD", "DU"});
  CHECK(enumerate_words(4, 0) ==
        std::vector<std::string>{"UUU", "UUD", "UDU", "UDD", "DUU", "DUD"});
  CHECK(enumerate_words(3, 1) == std::vector<std::string>{"UD", "DU"});
  CHECK(enumerate_words(3, 2) == std::vector<std::string>{});
  CHECK(enumerate_words(1, 1) == std::vector<std::string>{});
}

TEST_CASE("word statistics") {
  CHECK(word_d_count("UDUDD") == 3);
  CHECK(word_d_count("") == 0);
  CHECK(word_final_degree(1, "") == 2);
  CHECK(word_final_degree(4, "UDD") == 1);
  CHECK(word_final_degree(4, "UUU") == 5);
}

TEST_CASE("enumeration matches the brute-force filter up to genus 16") {
  for (int g = 1; g <= 16; ++g) {
    for (int min_d : {0, 1, 2}) {
      CAPTURE(g);
      CAPTURE(min_d);
      CHECK(enumerate_words(g, min_d) == brute_words(g, min_d));
    }
  }
}

TEST_CASE("count_exact and count_at_least match exhaustive histograms") {
  for (int g = 1; g <= 16; ++g) {
    std::map<int, BigInt> histogram;
    for (const std::string& w : brute_words(g, 0)) ++histogram[word_d_count(w)];
    BigInt running = 0;
    for (int i = 0; 2 * i <= g; ++i) {
      const BigInt exact = histogram.count(i) ? histogram[i] : BigInt(0);
      running += exact;
      CAPTURE(g);
      CAPTURE(i);
      CHECK(count_exact(g, i) == exact);
      CHECK(count_at_least(g, i) == running);
    }
    // Outside the band no words exist.
    CHECK(count_exact(g, g / 2 + 1) == 0);
    CHECK(count_exact(g, -1) == 0);
  }
}

TEST_CASE("count_at_least rejects out-of-band indices") {
  CHECK_THROWS_AS(count_at_least(4, 3), DomainError);
  CHECK_THROWS_AS(count_at_least(4, -1), DomainError);
  CHECK(count_at_least(4, 2) == binomial(4, 2));
}

TEST_CASE("weighted final-degree identity") {
  // Sum over i of count_exact(g, i) * (g + 1 - 2i) telescopes to 2^g.
  for (int g = 1; g <= 16; ++g) {
    BigInt sum = 0;
    for (int i = 0; 2 * i <= g; ++i) {
      sum += count_exact(g, i) * (g + 1 - 2 * i);
    }
    CAPTURE(g);
    CHECK(sum == BigInt(1) << g);
  }
}

TEST_SUITE_END();
