#pragma once
// Genus words: U/D sequences tracking the running degree of the active edge.
//
// A genus word for genus g has length g-1. The running degree starts at 2;
// each U raises it by 1, each D lowers it by 1, and it must stay >= 1 after
// every letter. The number of D's is written i; the final degree is g+1-2i.

#include "tevtrop/core.hpp"

#include <string>
#include <vector>

namespace tevtrop {

// All valid genus words for genus g with at least min_d_count D's,
// lexicographically ordered with U before D. g = 1 yields {""}.
std::vector<std::string> enumerate_words(int g, int min_d_count);

// Number of D letters in a word.
int word_d_count(const std::string& word);

// Final degree of the active edge after the word: g+1-2i.
int word_final_degree(int g, const std::string& word);

// Number of valid genus words with exactly i D's: C(g,i) - C(g,i-1),
// clamped to 0 outside 0 <= i <= g/2 (no valid words exist there).
BigInt count_exact(int g, int i);

// Number of valid genus words with at most i D's (equivalently, final
// degree at least g+1-2i): equals C(g,i). Requires 0 <= i <= g/2.
BigInt count_at_least(int g, int i);

}  // namespace tevtrop
