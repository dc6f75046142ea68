#include "grt/lie_series.hpp"

#include <algorithm>

namespace grt {

namespace {

void add_into(Terms& acc, const Word& w, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- FreeLie

FreeLie::FreeLie(std::vector<std::string> alphabet, int max_degree)
    : alphabet_(std::move(alphabet)), max_degree_(max_degree) {}

std::shared_ptr<const FreeLie> FreeLie::create(std::vector<std::string> alphabet,
                                               int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("FreeLie: max_degree must be >= 1");
  if (alphabet.empty() || alphabet.size() > 255)
    throw std::invalid_argument("FreeLie: alphabet size must be in [1, 255]");
  auto sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("FreeLie: duplicate generator name");
  return std::shared_ptr<const FreeLie>(new FreeLie(std::move(alphabet), max_degree));
}

std::optional<Letter> FreeLie::letter_of(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

std::string FreeLie::word_string(const Word& w) const {
  std::string out;
  for (Letter l : w) out += alphabet_.at(l);
  return out;
}

const Terms& FreeLie::basis_bracket(const Word& u, const Word& v) const {
  auto key = std::make_pair(u, v);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Terms value = compute_bracket(u, v);
  std::lock_guard lock(cache_mutex_);
  return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

// Lyndon rewriting. For Lyndon u < v the word uv is Lyndon, and its standard
// factorization is (u, v) exactly when u is a letter or u's right standard
// factor is >= v. Otherwise u = (u1, u2) and Jacobi gives
//   [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]].
Terms FreeLie::compute_bracket(const Word& u, const Word& v) const {
  Terms out;
  if (u == v) return out;
  if (lex_less(v, u)) {
    for (const auto& [w, c] : basis_bracket(v, u)) out.emplace(w, -c);
    return out;
  }
  if (u.size() == 1) {
    out.emplace(concat(u, v), 1);
    return out;
  }
  const std::size_t k = standard_split(u);
  Word u1(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
  Word u2(u.begin() + static_cast<std::ptrdiff_t>(k), u.end());
  if (!lex_less(u2, v)) {
    out.emplace(concat(u, v), 1);
    return out;
  }
  for (const auto& [w, c] : basis_bracket(u2, v))
    for (const auto& [w2, c2] : basis_bracket(u1, w)) add_into(out, w2, c * c2);
  for (const auto& [w, c] : basis_bracket(u1, v))
    for (const auto& [w2, c2] : basis_bracket(u2, w)) add_into(out, w2, -(c * c2));
  return out;
}

// --------------------------------------------------------------- LieSeries

LieSeries::LieSeries(FreeLiePtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("LieSeries: null algebra");
}

LieSeries::LieSeries(FreeLiePtr algebra, Terms terms)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  if (!algebra_) throw std::invalid_argument("LieSeries: null algebra");
  for (auto it = terms_.begin(); it != terms_.end();) {
    const Word& w = it->first;
    if (!is_lyndon(w)) throw std::invalid_argument("LieSeries: term is not a Lyndon word");
    for (Letter l : w)
      if (l >= algebra_->rank()) throw std::invalid_argument("LieSeries: letter outside alphabet");
    if (it->second == 0 || static_cast<int>(w.size()) > algebra_->max_degree())
      it = terms_.erase(it);
    else
      ++it;
  }
}

LieSeries LieSeries::generator(FreeLiePtr algebra, std::string_view name) {
  auto letter = algebra->letter_of(name);
  if (!letter) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return generator(std::move(algebra), *letter);
}

LieSeries LieSeries::generator(FreeLiePtr algebra, Letter letter) {
  return basis_element(std::move(algebra), Word{letter});
}

LieSeries LieSeries::basis_element(FreeLiePtr algebra, const Word& w) {
  Terms t;
  t.emplace(w, 1);
  return LieSeries(std::move(algebra), std::move(t));
}

Rational LieSeries::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LieSeries::min_degree() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
}

void LieSeries::check_compatible(const LieSeries& other, const char* op) const {
  if (algebra_ != other.algebra_ && !algebra_->same_shape(*other.algebra_))
    throw MismatchError(std::string(op) + ": operands belong to different algebras");
}

LieSeries& LieSeries::operator+=(const LieSeries& other) {
  check_compatible(other, "add");
  for (const auto& [w, c] : other.terms_) add_into(terms_, w, c);
  return *this;
}

LieSeries& LieSeries::operator-=(const LieSeries& other) {
  check_compatible(other, "subtract");
  for (const auto& [w, c] : other.terms_) add_into(terms_, w, -c);
  return *this;
}

LieSeries& LieSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

LieSeries& LieSeries::add_scaled(const Rational& c, const LieSeries& other) {
  check_compatible(other, "add");
  if (c == 0) return *this;
  for (const auto& [w, coeff] : other.terms_) add_into(terms_, w, c * coeff);
  return *this;
}

bool operator==(const LieSeries& a, const LieSeries& b) {
  if (a.algebra_ != b.algebra_ && !a.algebra_->same_shape(*b.algebra_)) return false;
  return a.terms_ == b.terms_;
}

// ------------------------------------------------------------- operations

LieSeries bracket(const LieSeries& a, const LieSeries& b) {
  if (&a.algebra() != &b.algebra() && !a.algebra().same_shape(b.algebra()))
    throw MismatchError("bracket: operands belong to different algebras");
  const FreeLie& alg = a.algebra();
  const auto max = static_cast<std::size_t>(alg.max_degree());
  Terms acc;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      if (u.size() + v.size() > max) break;  // b's terms are degree-sorted
      const Rational cuv = cu * cv;
      for (const auto& [w, c] : alg.basis_bracket(u, v)) add_into(acc, w, cuv * c);
    }
  }
  return LieSeries(a.algebra_ptr(), std::move(acc));
}

LieSeries add(const LieSeries& a, const LieSeries& b) { return a + b; }

LieSeries scale(const Rational& c, const LieSeries& s) { return c * s; }

LieSeries homogeneous_component(const LieSeries& s, int degree) {
  Terms t;
  for (const auto& [w, c] : s.terms())
    if (static_cast<int>(w.size()) == degree) t.emplace(w, c);
  return LieSeries(s.algebra_ptr(), std::move(t));
}

bool equals(const LieSeries& a, const LieSeries& b) {
  if (!a.algebra().same_shape(b.algebra()))
    throw MismatchError("equals: operands belong to different algebras");
  return a == b;
}

LieSeries substitute(const LieSeries& s, const std::vector<LieSeries>& images) {
  const int rank = s.algebra().rank();
  if (static_cast<int>(images.size()) != rank)
    throw MismatchError("substitute: expected one image per generator");
  const FreeLiePtr& target = images.front().algebra_ptr();
  for (const auto& img : images)
    if (!img.algebra().same_shape(*target))
      throw MismatchError("substitute: images belong to different algebras");

  std::vector<int> low(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) low[i] = images[i].min_degree();

  std::map<Word, LieSeries, DegLexLess> memo;
  auto image_of = [&](auto&& self, const Word& w) -> const LieSeries& {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    LieSeries value(target);
    if (w.size() == 1) {
      value = images[w[0]];
    } else {
      const std::size_t k = standard_split(w);
      Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      Word right(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
      value = bracket(self(self, left), self(self, right));
    }
    return memo.emplace(w, std::move(value)).first->second;
  };

  LieSeries out(target);
  for (const auto& [w, c] : s.terms()) {
    int bound = 0;
    bool vanishes = false;
    for (Letter l : w) {
      if (low[l] == 0) vanishes = true;
      bound += low[l];
    }
    if (vanishes || bound > target->max_degree()) continue;
    out.add_scaled(c, image_of(image_of, w));
  }
  return out;
}

LieSeries substitute(const LieSeries& s, const std::map<std::string, LieSeries>& images) {
  std::vector<LieSeries> ordered;
  ordered.reserve(s.algebra().alphabet().size());
  for (const auto& name : s.algebra().alphabet()) {
    auto it = images.find(name);
    if (it == images.end()) throw MismatchError("substitute: no image for generator '" + name + "'");
    ordered.push_back(it->second);
  }
  return substitute(s, ordered);
}

LieSeries apply_derivation(const LieSeries& s, const std::vector<LieSeries>& letter_values) {
  if (static_cast<int>(letter_values.size()) != s.algebra().rank())
    throw MismatchError("derivation: expected one value per generator");
  for (const auto& v : letter_values)
    if (!v.algebra().same_shape(s.algebra()))
      throw MismatchError("derivation: values belong to a different algebra");
  const FreeLiePtr& alg = s.algebra_ptr();

  std::map<Word, LieSeries, DegLexLess> memo;
  auto image_of = [&](auto&& self, const Word& w) -> const LieSeries& {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    LieSeries value(alg);
    if (w.size() == 1) {
      value = letter_values[w[0]];
    } else {
      const std::size_t k = standard_split(w);
      Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      Word right(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
      value = bracket(self(self, left), LieSeries::basis_element(alg, right));
      value += bracket(LieSeries::basis_element(alg, left), self(self, right));
    }
    return memo.emplace(w, std::move(value)).first->second;
  };

  LieSeries out(alg);
  for (const auto& [w, c] : s.terms()) out.add_scaled(c, image_of(image_of, w));
  return out;
}

}  // namespace grt
