#include "grt/dk_pentagon.hpp"

#include <set>
#include <stdexcept>

#include "grt/lie_text.hpp"

namespace grt {

namespace {

std::string dk_name(int i, int j) {
  if (i > j) std::swap(i, j);
  return "t" + std::to_string(i) + std::to_string(j);
}

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("Drinfeld-Kohno: n must be >= 2");
  if (n > 9) throw std::invalid_argument("Drinfeld-Kohno: n must be <= 9");
}

}  // namespace

std::vector<std::string> dk_generator_names(int n) {
  check_n(n);
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) names.push_back(dk_name(i, j));
  return names;
}

std::string canonical_dk_name(std::string_view name) {
  if (name.size() == 3 && name[0] == 't' && std::isdigit(static_cast<unsigned char>(name[1])) &&
      std::isdigit(static_cast<unsigned char>(name[2])) && name[1] > name[2])
    return std::string{'t', name[2], name[1]};
  return std::string(name);
}

FreeLiePtr dk_free_algebra(int n, int max_degree) {
  return FreeLie::create(dk_generator_names(n), max_degree);
}

std::vector<LieSeries> dk_relations(int n, const FreeLiePtr& free) {
  const auto names = dk_generator_names(n);
  if (free->alphabet() != names) throw MismatchError("dk_relations: algebra is not on the t_ij");
  if (free->max_degree() < 2) throw MismatchError("dk_relations: max_degree must be >= 2");
  auto t = [&](int i, int j) { return LieSeries::generator(free, dk_name(i, j)); };

  std::vector<LieSeries> out;
  std::set<std::string> seen;
  auto emit = [&](LieSeries r) {
    if (r.is_zero()) return;
    r *= 1 / r.terms().begin()->second;  // leading coefficient 1
    if (seen.insert(format_lie(r)).second) out.push_back(std::move(r));
  };

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (k != j && l != j && (k > i))
            emit(bracket(t(i, j), t(k, l)));

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (k != i && k != j) emit(bracket(t(i, j), t(i, k) + t(k, j)));
  return out;
}

std::vector<LieSeries> dk_relations(int n) { return dk_relations(n, dk_free_algebra(n, 2)); }

// ----------------------------------------------------------- QuotientElement

QuotientElement::QuotientElement(PresentedPtr algebra, std::map<Key, Rational> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  std::erase_if(coords_, [](const auto& e) { return e.second == 0; });
}

QuotientElement& QuotientElement::operator+=(const QuotientElement& other) {
  if (algebra_ != other.algebra_) throw MismatchError("quotient add: different algebras");
  for (const auto& [k, c] : other.coords_) {
    auto [it, inserted] = coords_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coords_.erase(it);
    }
  }
  return *this;
}

QuotientElement& QuotientElement::operator*=(const Rational& c) {
  if (c == 0) coords_.clear();
  for (auto& [k, v] : coords_) v *= c;
  return *this;
}

// ------------------------------------------------------ PresentedLieAlgebra

PresentedLieAlgebra::PresentedLieAlgebra(FreeLiePtr free, std::vector<LieSeries> relations)
    : free_(std::move(free)), relations_(std::move(relations)) {}

PresentedPtr PresentedLieAlgebra::build(FreeLiePtr free, std::vector<LieSeries> relations) {
  for (const auto& r : relations) {
    if (!r.algebra().same_shape(*free)) throw MismatchError("build: relation in a different algebra");
    if (r.is_zero()) continue;
    const auto deg = r.terms().begin()->first.size();
    for (const auto& [w, c] : r.terms())
      if (w.size() != deg) throw std::invalid_argument("build: relation is not homogeneous");
  }
  std::shared_ptr<PresentedLieAlgebra> out(
      new PresentedLieAlgebra(std::move(free), std::move(relations)));
  out->compute();
  return out;
}

const PresentedLieAlgebra::Degree& PresentedLieAlgebra::at(int degree) const {
  if (degree < 1 || degree > max_degree())
    throw std::out_of_range("degree " + std::to_string(degree) + " outside truncation");
  return degrees_[static_cast<std::size_t>(degree - 1)];
}

SparseVector PresentedLieAlgebra::coordinates(const LieSeries& s, int degree) const {
  const Degree& d = at(degree);
  SparseVector v;
  for (const auto& [w, c] : s.terms())
    if (static_cast<int>(w.size()) == degree) v.emplace_back(d.index.at(w), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

SparseVector PresentedLieAlgebra::bracket_coords(int deg_a, const SparseVector& a,
                                                 const Word& b) const {
  const Degree& target = at(deg_a + static_cast<int>(b.size()));
  const Degree& source = at(deg_a);
  std::map<int, Rational> acc;
  for (const auto& [col, c] : a)
    for (const auto& [w, c2] : free_->basis_bracket(source.words[static_cast<std::size_t>(col)], b))
      acc[target.index.at(w)] += c * c2;
  SparseVector out;
  for (auto& [col, c] : acc)
    if (c != 0) out.emplace_back(col, std::move(c));
  return out;
}

void PresentedLieAlgebra::compute() {
  const int top = max_degree();
  const int rank = free_->rank();
  degrees_.resize(static_cast<std::size_t>(top));
  for (int d = 1; d <= top; ++d) {
    Degree& deg = degrees_[static_cast<std::size_t>(d - 1)];
    deg.words = lyndon_basis(rank, d);
    for (std::size_t i = 0; i < deg.words.size(); ++i) deg.index.emplace(deg.words[i], static_cast<int>(i));
    deg.ideal = RowEchelon(static_cast<int>(deg.words.size()));

    for (const auto& r : relations_)
      if (!r.is_zero() && static_cast<int>(r.terms().begin()->first.size()) == d)
        deg.ideal.insert(coordinates(r, d));

    if (d >= 2) {
      // ad(generator) applied to I_{d-1}
      const Degree& prev = degrees_[static_cast<std::size_t>(d - 2)];
      for (const auto& [pivot, row] : prev.ideal.rows())
        for (int g = 0; g < rank; ++g) deg.ideal.insert(bracket_coords(d - 1, row, Word{static_cast<Letter>(g)}));
      // relations against complementary basis elements
      for (const auto& r : relations_) {
        if (r.is_zero()) continue;
        const int k = static_cast<int>(r.terms().begin()->first.size());
        if (k >= d) continue;
        const SparseVector rv = coordinates(r, k);
        for (const auto& w : degrees_[static_cast<std::size_t>(d - k - 1)].words)
          deg.ideal.insert(bracket_coords(k, rv, w));
      }
      // certificate: every [I_k, L_{d-k}] must already lie in I_d
      const int before = deg.ideal.rank();
      for (int k = 1; k < d; ++k) {
        const Degree& ik = degrees_[static_cast<std::size_t>(k - 1)];
        const Degree& lk = degrees_[static_cast<std::size_t>(d - k - 1)];
        for (const auto& [pivot, row] : ik.ideal.rows())
          for (const auto& w : lk.words) deg.ideal.insert(bracket_coords(k, row, w));
      }
      deg.saturated = deg.ideal.rank() == before;
    }

    for (int col : deg.ideal.free_columns()) {
      deg.quotient_index.emplace(col, static_cast<int>(deg.quotient_words.size()));
      deg.quotient_words.push_back(deg.words[static_cast<std::size_t>(col)]);
    }
  }
}

int PresentedLieAlgebra::dimension(int degree) const {
  return static_cast<int>(at(degree).quotient_words.size());
}

std::vector<int> PresentedLieAlgebra::dimensions() const {
  std::vector<int> out;
  for (int d = 1; d <= max_degree(); ++d) out.push_back(dimension(d));
  return out;
}

int PresentedLieAlgebra::ideal_dimension(int degree) const { return at(degree).ideal.rank(); }

bool PresentedLieAlgebra::saturated(int degree) const { return at(degree).saturated; }

const std::vector<Word>& PresentedLieAlgebra::quotient_words(int degree) const {
  return at(degree).quotient_words;
}

QuotientElement PresentedLieAlgebra::reduce(const LieSeries& s) const {
  if (!s.algebra().same_shape(*free_)) throw MismatchError("reduce: series in a different algebra");
  std::map<QuotientElement::Key, Rational> coords;
  for (int d = 1; d <= max_degree(); ++d) {
    const Degree& deg = at(d);
    SparseVector v = coordinates(s, d);
    if (v.empty()) continue;
    for (auto& [col, c] : deg.ideal.reduce(v)) coords.emplace(QuotientElement::Key{d, deg.quotient_index.at(col)}, std::move(c));
  }
  return QuotientElement(shared_from_this(), std::move(coords));
}

LieSeries PresentedLieAlgebra::lift(const QuotientElement& q) const {
  if (q.algebra_ptr().get() != this) throw MismatchError("lift: element of a different algebra");
  Terms t;
  for (const auto& [key, c] : q.coords())
    t.emplace(at(key.first).quotient_words[static_cast<std::size_t>(key.second)], c);
  return LieSeries(free_, std::move(t));
}

QuotientElement PresentedLieAlgebra::bracket(const QuotientElement& a,
                                             const QuotientElement& b) const {
  return reduce(grt::bracket(lift(a), lift(b)));
}

PresentedPtr drinfeld_kohno(int n, int max_degree) {
  auto free = dk_free_algebra(n, max_degree);
  std::vector<LieSeries> relations;
  if (max_degree >= 2) relations = dk_relations(n, free);
  return PresentedLieAlgebra::build(free, std::move(relations));
}

QuotientElement pentagon_residual(const PresentedLieAlgebra& t4, const LieSeries& phi) {
  if (phi.algebra().rank() != 2) throw MismatchError("pentagon: expected a series in two generators");
  if (t4.free_algebra()->alphabet() != dk_generator_names(4))
    throw MismatchError("pentagon: target algebra is not t4");
  if (!phi.is_zero() && static_cast<int>(phi.terms().rbegin()->first.size()) > t4.max_degree())
    throw MismatchError("pentagon: series has terms above the t4 truncation");
  const auto& free = t4.free_algebra();
  auto t = [&](const char* name) { return LieSeries::generator(free, name); };
  auto at = [&](const LieSeries& a, const LieSeries& b) {
    return substitute(phi, std::vector<LieSeries>{a, b});
  };
  LieSeries lhs = at(t("t12"), t("t23") + t("t24")) + at(t("t13") + t("t23"), t("t34"));
  LieSeries rhs = at(t("t23"), t("t34")) + at(t("t12") + t("t13"), t("t24") + t("t34")) +
                  at(t("t12"), t("t23"));
  return t4.reduce(lhs - rhs);
}

}  // namespace grt
