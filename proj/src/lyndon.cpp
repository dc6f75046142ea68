#include "grt/lyndon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grt {

bool is_lyndon(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    // compare w with its rotation starting at r
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = w[i];
      Letter b = w[(r + i) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: not primitive
    }
  }
  return true;
}

std::size_t standard_split(std::span<const Letter> w) {
  if (w.size() < 2) throw std::invalid_argument("standard_split: word of length < 2");
  for (std::size_t k = 1; k < w.size(); ++k)
    if (is_lyndon(w.subspan(k))) return k;
  throw std::logic_error("standard_split: no Lyndon suffix");  // unreachable for Lyndon w
}

namespace {

// Duval's generation of all Lyndon words of length <= degree in
// lexicographic order; `emit` sees the ones of length exactly degree.
template <class Emit>
void duval(int alphabet_size, int degree, const char* who, Emit emit) {
  if (degree < 1) throw std::invalid_argument(std::string(who) + ": degree must be >= 1");
  if (alphabet_size < 1 || alphabet_size > 255)
    throw std::invalid_argument(std::string(who) + ": alphabet size out of range");
  const auto n = static_cast<std::size_t>(degree);
  const auto top = static_cast<Letter>(alphabet_size - 1);
  Word w{0};
  while (!w.empty()) {
    if (w.size() == n) emit(w);
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top) w.pop_back();
    if (!w.empty()) ++w.back();
  }
}

}  // namespace

std::vector<Word> lyndon_basis(int alphabet_size, int degree) {
  std::vector<Word> out;
  duval(alphabet_size, degree, "lyndon_basis", [&](const Word& w) { out.push_back(w); });
  return out;
}

std::uint64_t count_lyndon_words(int alphabet_size, int degree) {
  std::uint64_t count = 0;
  duval(alphabet_size, degree, "count_lyndon_words", [&](const Word&) { ++count; });
  return count;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::uint64_t witt_dimension(int alphabet_size, int degree) {
  if (degree < 1) throw std::invalid_argument("witt_dimension: degree must be >= 1");
  std::int64_t sum = 0;
  for (int e = 1; e <= degree; ++e) {
    if (degree % e) continue;
    std::int64_t power = 1;
    for (int i = 0; i < degree / e; ++i) power *= alphabet_size;
    sum += mobius(e) * power;
  }
  return static_cast<std::uint64_t>(sum / degree);
}

}  // namespace grt
