#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace grt {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Orders words by length first, then lexicographically. This is the
// (degree, word) order used for printing and for pivot selection.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Plain lexicographic order where a proper prefix is smaller.
inline bool lex_less(std::span<const Letter> a, std::span<const Letter> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_lyndon(std::span<const Letter> w);

// Position where the longest proper Lyndon suffix starts; w = w[0,k) w[k,n).
// Requires a Lyndon word of length >= 2.
std::size_t standard_split(std::span<const Letter> w);

// All Lyndon words of exactly `degree` letters over {0, .., alphabet_size-1},
// lexicographically sorted (Duval's algorithm).
std::vector<Word> lyndon_basis(int alphabet_size, int degree);
// Same enumeration without storing the words.
std::uint64_t count_lyndon_words(int alphabet_size, int degree);

// Necklace count (1/d) sum_{e|d} mu(e) k^{d/e}.
std::uint64_t witt_dimension(int alphabet_size, int degree);

}  // namespace grt
