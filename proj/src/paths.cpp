#include "tevtrop/paths.hpp"

#include <algorithm>

namespace tevtrop {

namespace {

void extend(std::string& word, int degree, int remaining, int min_d_count,
            std::vector<std::string>& out) {
  if (remaining == 0) {
    if (word_d_count(word) >= min_d_count) out.push_back(word);
    return;
  }
  word.push_back('U');
  extend(word, degree + 1, remaining - 1, min_d_count, out);
  word.back() = 'D';
  if (degree - 1 >= 1) extend(word, degree - 1, remaining - 1, min_d_count, out);
  word.pop_back();
}

}  // namespace

std::vector<std::string> enumerate_words(int g, int min_d_count) {
  if (g < 1) throw DomainError("enumerate_words: g must be at least 1");
  std::vector<std::string> out;
  std::string word;
  extend(word, 2, g - 1, min_d_count, out);
  return out;
}

int word_d_count(const std::string& word) {
  return static_cast<int>(std::count(word.begin(), word.end(), 'D'));
}

int word_final_degree(int g, const std::string& word) {
  return g + 1 - 2 * word_d_count(word);
}

BigInt count_exact(int g, int i) {
  if (g < 1) throw DomainError("count_exact: g must be at least 1");
  if (i < 0 || 2 * i > g) return 0;
  return binomial(g, i) - binomial(g, i - 1);
}

BigInt count_at_least(int g, int i) {
  if (g < 1) throw DomainError("count_at_least: g must be at least 1");
  if (i < 0 || 2 * i > g) {
    throw DomainError("count_at_least: need 0 <= i <= g/2, got i = " +
                      std::to_string(i) + ", g = " + std::to_string(g));
  }
  return binomial(g, i);
}

}  // namespace tevtrop
