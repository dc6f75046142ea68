#include "grt/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace grt {

namespace {

int parse_positive(std::string_view text, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0)
    throw GroupError("bad number '" + std::string(text) + "' in " + std::string(context));
  return value;
}

std::string strip_parens(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

std::size_t checked_power(int base, int arity) {
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) {
    n *= static_cast<std::size_t>(base);
    if (n > (std::size_t{1} << 26)) throw GroupError("domain too large for a table");
  }
  return n;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<int> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  order_ = static_cast<int>(labels_.size());
  const int n = order_;
  if (n == 0) throw GroupError(name_ + ": empty group");
  if (table_.size() != static_cast<std::size_t>(n) * n)
    throw GroupError(name_ + ": Cayley table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= n) throw GroupError(name_ + ": table entry out of range");

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw GroupError(name_ + ": no identity element");

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw GroupError(name_ + ": element " + labels_[static_cast<std::size_t>(a)] +
                       " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw GroupError(name_ + ": table is not associative");
    }

  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a)
    for (int b = a + 1; b < n && abelian_; ++b) abelian_ = mul(a, b) == mul(b, a);
}

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m <= 0) throw GroupError("cyclic group order must be positive");
  std::vector<std::string> labels;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a * m + b)] = (a + b) % m;
  }
  FiniteGroup g("Z" + std::to_string(m), std::move(labels), std::move(table));
  g.cyclic_factors_ = {m};
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw GroupError("symmetric group degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const int order = static_cast<int>(perms.size());
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += static_cast<char>('1' + v);
    labels.push_back(s);
  }
  // (a b)(i) = a(b(i))
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<int> ab(static_cast<std::size_t>(n));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i)
        ab[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      const auto it = std::lower_bound(perms.begin(), perms.end(), ab);
      table[static_cast<std::size_t>(a * order + b)] = static_cast<int>(it - perms.begin());
    }
  return FiniteGroup("S" + std::to_string(n), std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      labels.push_back("(" + strip_parens(a.label(i)) + "," + strip_parens(b.label(j)) + ")");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x * n + y)] =
          a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  FiniteGroup g(a.name() + "x" + b.name(), std::move(labels), std::move(table));
  if (!a.cyclic_factors_.empty() && !b.cyclic_factors_.empty()) {
    g.cyclic_factors_ = a.cyclic_factors_;
    g.cyclic_factors_.insert(g.cyclic_factors_.end(), b.cyclic_factors_.begin(),
                             b.cyclic_factors_.end());
  }
  return g;
}

FiniteGroup FiniteGroup::from_spec(std::string_view spec) {
  if (spec.empty()) throw GroupError("empty group spec");
  std::vector<FiniteGroup> factors;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('x', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view part = spec.substr(start, end - start);
    int power = 1;
    if (auto caret = part.find('^'); caret != std::string_view::npos) {
      power = parse_positive(part.substr(caret + 1), spec);
      part = part.substr(0, caret);
    }
    if (part.size() < 2) throw GroupError("bad group spec '" + std::string(spec) + "'");
    const int k = parse_positive(part.substr(1), spec);
    for (int i = 0; i < power; ++i) {
      if (part[0] == 'Z') factors.push_back(cyclic(k));
      else if (part[0] == 'S') factors.push_back(symmetric(k));
      else throw GroupError("unknown group factor '" + std::string(part) + "'");
    }
    start = end + 1;
  }
  if (factors.size() > 6) throw GroupError("too many factors in '" + std::string(spec) + "'");
  FiniteGroup g = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) g = product(g, factors[i]);
  if (g.order() > 1024) throw GroupError("group '" + std::string(spec) + "' is too large");
  g.name_ = std::string(spec);
  return g;
}

int FiniteGroup::pow(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = identity_;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < order_; ++a) {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    e = std::lcm(e, k);
  }
  return e;
}

std::vector<int> FiniteGroup::coordinates(int a) const {
  if (cyclic_factors_.empty()) throw GroupError(name_ + " is not a product of cyclic groups");
  std::vector<int> c(cyclic_factors_.size());
  for (std::size_t i = c.size(); i-- > 0;) {
    c[i] = a % cyclic_factors_[i];
    a /= cyclic_factors_[i];
  }
  return c;
}

int FiniteGroup::from_coordinates(std::span<const int> coords) const {
  if (coords.size() != cyclic_factors_.size())
    throw GroupError(name_ + ": wrong number of coordinates");
  int a = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int m = cyclic_factors_[i];
    a = a * m + ((coords[i] % m) + m) % m;
  }
  return a;
}

GroupPtr make_group(std::string_view spec) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_spec(spec));
}

// ---------------------------------------------------------------- NaryMap

NaryMap::NaryMap(GroupPtr source, int arity, GroupPtr target, std::vector<int> values)
    : NaryMap(source ? source->order() : 0, arity, std::move(target), std::move(values)) {
  source_ = std::move(source);
}

NaryMap::NaryMap(int base, int arity, GroupPtr target, std::vector<int> values)
    : base_(base), arity_(arity), target_(std::move(target)), values_(std::move(values)) {
  if (base_ <= 0 || arity_ < 1) throw GroupError("NaryMap: empty domain");
  if (!target_) throw GroupError("NaryMap: missing target group");
  if (values_.size() != checked_power(base_, arity_))
    throw GroupError("NaryMap: table is not total on the domain");
  for (int v : values_)
    if (v < 0 || v >= target_->order()) throw GroupError("NaryMap: value out of range");
}

NaryMap NaryMap::constant(GroupPtr source, int arity, GroupPtr target, int value) {
  const std::size_t n = checked_power(source->order(), arity);
  return NaryMap(std::move(source), arity, std::move(target), std::vector<int>(n, value));
}

NaryMap NaryMap::random(Rng& rng, GroupPtr source, int arity, GroupPtr target) {
  const std::size_t n = checked_power(source->order(), arity);
  std::vector<int> v(n);
  for (auto& x : v) x = rng.below(target->order());
  return NaryMap(std::move(source), arity, std::move(target), std::move(v));
}

NaryMap NaryMap::random(Rng& rng, int base, int arity, GroupPtr target) {
  const std::size_t n = checked_power(base, arity);
  std::vector<int> v(n);
  for (auto& x : v) x = rng.below(target->order());
  return NaryMap(base, arity, std::move(target), std::move(v));
}

NaryMap NaryMap::random_with(Rng& rng, Symmetry sym, GroupPtr source, int arity, GroupPtr target) {
  if (sym == Symmetry::kNone) return random(rng, std::move(source), arity, std::move(target));
  if (!target->abelian()) throw GroupError("symmetric and skew maps need an abelian target");
  const std::size_t n = checked_power(source->order(), arity);
  NaryMap out(source, arity, target, std::vector<int>(n, target->identity()));
  for (std::size_t i = 0; i < n; ++i) {
    auto args = out.decode(i);
    // Sort by adjacent swaps, counting transpositions.
    int swaps = 0;
    for (std::size_t a = 0; a < args.size(); ++a)
      for (std::size_t b = 0; b + 1 < args.size() - a; ++b) {
        if (args[b] > args[b + 1]) {
          std::swap(args[b], args[b + 1]);
          ++swaps;
        }
      }
    bool repeated = false;
    for (std::size_t b = 0; b + 1 < args.size(); ++b) repeated |= args[b] == args[b + 1];
    const std::size_t sorted = out.encode(args);
    int& slot = out.values_[i];
    if (sym == Symmetry::kSkew && repeated) {
      slot = target->identity();
    } else if (sorted == i) {
      slot = rng.below(target->order());
    } else {
      const int v = out.values_[sorted];
      slot = (sym == Symmetry::kSkew && swaps % 2 == 1) ? target->inv(v) : v;
    }
  }
  return out;
}

std::size_t NaryMap::encode(std::span<const int> args) const {
  std::size_t idx = 0;
  for (int a : args) idx = idx * static_cast<std::size_t>(base_) + static_cast<std::size_t>(a);
  return idx;
}

std::vector<int> NaryMap::decode(std::size_t index) const {
  std::vector<int> args(static_cast<std::size_t>(arity_));
  for (std::size_t i = args.size(); i-- > 0;) {
    args[i] = static_cast<int>(index % static_cast<std::size_t>(base_));
    index /= static_cast<std::size_t>(base_);
  }
  return args;
}

std::vector<std::string> NaryMap::point_labels(std::size_t index) const {
  std::vector<std::string> out;
  for (int a : decode(index))
    out.push_back(source_ ? source_->label(a) : std::to_string(a));
  return out;
}

NaryMap NaryMap::pointwise_inverse() const {
  NaryMap out = *this;
  for (auto& v : out.values_) v = target_->inv(v);
  return out;
}

NaryMap pointwise_mul(const NaryMap& a, const NaryMap& b) {
  if (a.base_ != b.base_ || a.arity_ != b.arity_ || a.target_->order() != b.target_->order())
    throw GroupError("pointwise product of maps on different domains");
  NaryMap out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i)
    out.values_[i] = a.target_->mul(a.values_[i], b.values_[i]);
  return out;
}

NaryMap NaryMap::compose(std::span<const std::size_t> self_map) const {
  if (self_map.size() != values_.size()) throw GroupError("compose: domain size mismatch");
  NaryMap out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[self_map[i]];
  return out;
}

Report check_symmetry(const NaryMap& phi, Symmetry sym) {
  Report r;
  r.construction = sym == Symmetry::kSkew ? "skew-symmetry" : "symmetry";
  r.group = phi.target().name();
  r.arity = phi.arity();
  if (sym == Symmetry::kNone) return r;
  if (sym == Symmetry::kSkew && !phi.target().abelian())
    throw GroupError("skew-symmetry check needs an abelian target");
  const auto& g = phi.target();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    ++r.points_checked;
    auto args = phi.decode(i);
    for (std::size_t s = 0; s + 1 < args.size(); ++s) {
      std::swap(args[s], args[s + 1]);
      const int swapped = phi.at(args);
      std::swap(args[s], args[s + 1]);
      const int expect = sym == Symmetry::kSkew ? g.inv(phi[i]) : phi[i];
      if (swapped != expect)
        r.record({r.construction, phi.point_labels(i),
                  "transposition of slots " + std::to_string(s + 1) + "," + std::to_string(s + 2)});
    }
  }
  return r;
}

// ---------------------------------------------------------- BinaryPairing

BinaryPairing::BinaryPairing(std::string name, GroupPtr group, std::vector<int> table)
    : name_(std::move(name)), group_(std::move(group)), table_(std::move(table)) {
  const auto& g = *group_;
  const int n = g.order();
  if (table_.size() != static_cast<std::size_t>(n) * n)
    throw GroupError(name_ + ": pairing table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= n) throw GroupError(name_ + ": pairing value out of range");
  const auto& p = *this;

  bihomomorphic_ = true;
  for (int a = 0; a < n && bihomomorphic_; ++a)
    for (int b = 0; b < n && bihomomorphic_; ++b)
      for (int c = 0; c < n; ++c) {
        if (p(g.mul(a, b), c) != g.mul(p(a, c), p(b, c)) ||
            p(a, g.mul(b, c)) != g.mul(p(a, b), p(a, c))) {
          bihomomorphic_ = false;
          bihom_witness_ = {a, b, c};
          break;
        }
      }

  skew_ = symmetric_ = alternating_ = true;
  for (int a = 0; a < n; ++a) {
    alternating_ = alternating_ && p(a, a) == g.identity();
    for (int b = 0; b < n; ++b) {
      skew_ = skew_ && p(b, a) == g.inv(p(a, b));
      symmetric_ = symmetric_ && p(b, a) == p(a, b);
    }
  }

  lie_ = g.abelian() && bihomomorphic_ && alternating_;
  for (int a = 0; a < n && lie_; ++a)
    for (int b = 0; b < n && lie_; ++b)
      for (int c = 0; c < n && lie_; ++c)
        lie_ = g.mul(g.mul(p(a, p(b, c)), p(b, p(c, a))), p(c, p(a, b))) == g.identity();
}

namespace {

BinaryPairing coordinate_pairing(std::string name, GroupPtr g,
                                 const std::function<std::vector<int>(const std::vector<int>&,
                                                                      const std::vector<int>&)>& f) {
  const int n = g->order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a * n + b)] =
          g->from_coordinates(f(g->coordinates(a), g->coordinates(b)));
  return BinaryPairing(std::move(name), std::move(g), std::move(table));
}

std::string cube_spec(int m) {
  return "Z" + std::to_string(m) + "^3";
}

}  // namespace

BinaryPairing ring_pairing(int m) {
  return coordinate_pairing("ring:" + std::to_string(m), make_group("Z" + std::to_string(m)),
                            [](const auto& a, const auto& b) { return std::vector<int>{a[0] * b[0]}; });
}

BinaryPairing heisenberg_pairing(int m) {
  return coordinate_pairing("heisenberg:" + std::to_string(m), make_group(cube_spec(m)),
                            [](const auto& a, const auto& b) {
                              return std::vector<int>{0, 0, a[0] * b[1] - a[1] * b[0]};
                            });
}

BinaryPairing cross_pairing(int m) {
  return coordinate_pairing("cross:" + std::to_string(m), make_group(cube_spec(m)),
                            [](const auto& a, const auto& b) {
                              return std::vector<int>{a[1] * b[2] - a[2] * b[1],
                                                      a[2] * b[0] - a[0] * b[2],
                                                      a[0] * b[1] - a[1] * b[0]};
                            });
}

BinaryPairing zero_pairing(GroupPtr group) {
  const int n = group->order();
  std::string name = "zero:" + group->name();
  std::vector<int> table(static_cast<std::size_t>(n) * n, group->identity());
  return BinaryPairing(std::move(name), std::move(group), std::move(table));
}

BinaryPairing commutator_pairing(GroupPtr group) {
  const auto& g = *group;
  const int n = g.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a * n + b)] = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
  std::string name = "commutator:" + g.name();
  return BinaryPairing(std::move(name), std::move(group), std::move(table));
}

BinaryPairing z2z4_pairing() {
  return coordinate_pairing("z2z4", make_group("Z2xZ4"), [](const auto& a, const auto& b) {
    return std::vector<int>{a[0] * b[1] + a[1] * b[0], 0};
  });
}

BinaryPairing make_pairing(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : spec.substr(colon + 1);
  auto modulus = [&] {
    const int m = parse_positive(arg, spec);
    if (m < 2 || m > 10) throw GroupError("pairing modulus must be in 2..10");
    return m;
  };
  if (kind == "ring") return ring_pairing(modulus());
  if (kind == "heisenberg") return heisenberg_pairing(modulus());
  if (kind == "cross") return cross_pairing(modulus());
  if (kind == "zero") return zero_pairing(make_group(arg));
  if (kind == "commutator") return commutator_pairing(make_group(arg));
  if (kind == "z2z4" && arg.empty()) return z2z4_pairing();
  throw GroupError("unknown pairing '" + std::string(spec) + "'");
}

}  // namespace grt
