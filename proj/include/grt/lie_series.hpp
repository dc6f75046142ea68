#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grt/lyndon.hpp"
#include "grt/rational.hpp"

namespace grt {

// Raised when two operands live in different algebras (alphabet or
// truncation order differ) or a substitution is incomplete.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coordinates in the Lyndon basis, ordered by (degree, word).
using Terms = std::map<Word, Rational, DegLexLess>;

// The free Lie algebra on a finite ordered alphabet, truncated above
// max_degree. Values of this type are immutable; the only internal state is
// a memo of basis-element brackets, which is guarded by a mutex.
class FreeLie {
 public:
  static std::shared_ptr<const FreeLie> create(std::vector<std::string> alphabet,
                                               int max_degree);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int max_degree() const { return max_degree_; }
  int rank() const { return static_cast<int>(alphabet_.size()); }
  std::optional<Letter> letter_of(std::string_view name) const;

  // Same alphabet (names and order) and same truncation.
  bool same_shape(const FreeLie& other) const {
    return max_degree_ == other.max_degree_ && alphabet_ == other.alphabet_;
  }

  // [P_u, P_v] for Lyndon words u, v expressed in the Lyndon basis, without
  // truncation. The returned reference stays valid for the algebra's lifetime.
  const Terms& basis_bracket(const Word& u, const Word& v) const;

  // Letters of a word concatenated, e.g. "xxy" or "t12t23".
  std::string word_string(const Word& w) const;

 private:
  FreeLie(std::vector<std::string> alphabet, int max_degree);
  Terms compute_bracket(const Word& u, const Word& v) const;

  std::vector<std::string> alphabet_;
  int max_degree_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Word, Word>, Terms> cache_;
};

using FreeLiePtr = std::shared_ptr<const FreeLie>;

class LieSeries {
 public:
  explicit LieSeries(FreeLiePtr algebra);
  LieSeries(FreeLiePtr algebra, Terms terms);

  static LieSeries generator(FreeLiePtr algebra, std::string_view name);
  static LieSeries generator(FreeLiePtr algebra, Letter letter);
  // Basis element P_w; throws if w is not a Lyndon word over the alphabet.
  static LieSeries basis_element(FreeLiePtr algebra, const Word& w);

  const FreeLie& algebra() const { return *algebra_; }
  const FreeLiePtr& algebra_ptr() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  int max_degree() const { return algebra_->max_degree(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const;
  // Smallest degree carrying a nonzero term; 0 for the zero series.
  int min_degree() const;

  LieSeries& operator+=(const LieSeries& other);
  LieSeries& operator-=(const LieSeries& other);
  LieSeries& operator*=(const Rational& c);
  // this += c * other, without materialising c * other.
  LieSeries& add_scaled(const Rational& c, const LieSeries& other);

  friend LieSeries operator+(LieSeries a, const LieSeries& b) { return a += b; }
  friend LieSeries operator-(LieSeries a, const LieSeries& b) { return a -= b; }
  friend LieSeries operator-(LieSeries a) { return a *= Rational(-1); }
  friend LieSeries operator*(const Rational& c, LieSeries a) { return a *= c; }

  // Equal iff same algebra shape and identical coordinates.
  friend bool operator==(const LieSeries& a, const LieSeries& b);

 private:
  void check_compatible(const LieSeries& other, const char* op) const;

  FreeLiePtr algebra_;
  Terms terms_;
};

LieSeries bracket(const LieSeries& a, const LieSeries& b);
LieSeries add(const LieSeries& a, const LieSeries& b);
LieSeries scale(const Rational& c, const LieSeries& s);
LieSeries homogeneous_component(const LieSeries& s, int degree);
bool equals(const LieSeries& a, const LieSeries& b);

// The Lie homomorphism sending letter i of s's alphabet to images[i],
// applied to s and truncated in the images' algebra.
LieSeries substitute(const LieSeries& s, const std::vector<LieSeries>& images);
LieSeries substitute(const LieSeries& s, const std::map<std::string, LieSeries>& images);

// The derivation of s's algebra determined by its values on the letters.
LieSeries apply_derivation(const LieSeries& s, const std::vector<LieSeries>& letter_values);

}  // namespace grt
