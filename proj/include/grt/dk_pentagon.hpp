#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grt/lie_series.hpp"
#include "grt/linalg.hpp"

namespace grt {

// "t12", "t13", ..., "t(n-1)n" in lexicographic (i, j) order; 2 <= n <= 9.
std::vector<std::string> dk_generator_names(int n);

// "t21" -> "t12"; anything else is returned unchanged.
std::string canonical_dk_name(std::string_view name);

// Free Lie algebra on the t_ij of a given n.
FreeLiePtr dk_free_algebra(int n, int max_degree);

// Defining relations of t_n: [t_ij, t_kl] for disjoint pairs and
// [t_ij, t_ik + t_jk] for each pair {i,j} and third index k, deduplicated.
// `free` must be the algebra returned by dk_free_algebra(n, d), d >= 2.
std::vector<LieSeries> dk_relations(int n, const FreeLiePtr& free);
std::vector<LieSeries> dk_relations(int n);

class PresentedLieAlgebra;
using PresentedPtr = std::shared_ptr<const PresentedLieAlgebra>;

// Coordinates in the quotient basis, keyed by (degree, index).
class QuotientElement {
 public:
  using Key = std::pair<int, int>;

  explicit QuotientElement(PresentedPtr algebra) : algebra_(std::move(algebra)) {}
  QuotientElement(PresentedPtr algebra, std::map<Key, Rational> coords);

  const PresentedLieAlgebra& algebra() const { return *algebra_; }
  const PresentedPtr& algebra_ptr() const { return algebra_; }
  const std::map<Key, Rational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  QuotientElement& operator+=(const QuotientElement& other);
  QuotientElement& operator*=(const Rational& c);
  friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) { return a += b; }
  friend QuotientElement operator*(const Rational& c, QuotientElement a) { return a *= c; }
  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
  }

 private:
  PresentedPtr algebra_;
  std::map<Key, Rational> coords_;
};

// A graded quotient L / I of a truncated free Lie algebra by the ideal
// generated by homogeneous relations. Per degree d it stores the ideal
// component I_d in reduced row echelon form over the Lyndon basis of L_d;
// the non-pivot Lyndon words form the quotient basis.
class PresentedLieAlgebra : public std::enable_shared_from_this<PresentedLieAlgebra> {
 public:
  static PresentedPtr build(FreeLiePtr free, std::vector<LieSeries> relations);

  const FreeLiePtr& free_algebra() const { return free_; }
  const std::vector<LieSeries>& relations() const { return relations_; }
  int max_degree() const { return free_->max_degree(); }

  int dimension(int degree) const;
  std::vector<int> dimensions() const;  // degrees 1..max_degree
  int ideal_dimension(int degree) const;
  // True when one extra round of brackets [I_k, L_{d-k}] for every k left the
  // ideal dimension unchanged.
  bool saturated(int degree) const;
  // Lyndon words whose basis elements represent the quotient basis.
  const std::vector<Word>& quotient_words(int degree) const;

  QuotientElement reduce(const LieSeries& s) const;
  LieSeries lift(const QuotientElement& q) const;
  QuotientElement bracket(const QuotientElement& a, const QuotientElement& b) const;

  // Free-algebra coordinates of a homogeneous piece.
  SparseVector coordinates(const LieSeries& s, int degree) const;

 private:
  struct Degree {
    std::vector<Word> words;
    std::map<Word, int> index;
    RowEchelon ideal{0};
    std::vector<Word> quotient_words;
    std::map<int, int> quotient_index;  // free column -> quotient index
    bool saturated = true;
  };

  PresentedLieAlgebra(FreeLiePtr free, std::vector<LieSeries> relations);
  void compute();
  const Degree& at(int degree) const;
  SparseVector bracket_coords(int deg_a, const SparseVector& a, const Word& b) const;

  FreeLiePtr free_;
  std::vector<LieSeries> relations_;
  std::vector<Degree> degrees_;  // index 0 is degree 1
};

// t_n truncated at max_degree.
PresentedPtr drinfeld_kohno(int n, int max_degree);

// Left minus right side of the pentagon equation in t_4:
//   phi(t12, t23+t24) + phi(t13+t23, t34)
//     - phi(t23, t34) - phi(t12+t13, t24+t34) - phi(t12, t23).
// Throws MismatchError if phi has terms above t4's truncation.
QuotientElement pentagon_residual(const PresentedLieAlgebra& t4, const LieSeries& phi);

}  // namespace grt
