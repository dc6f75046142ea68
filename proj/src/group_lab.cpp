#include "grt/group_lab.hpp"

#include <numeric>
#include <stdexcept>

#include "grt/grt_ops.hpp"

namespace grt {

namespace {

struct Domain {
  int base;
  int arity;
  std::size_t size;

  Domain(int b, int n) : base(b), arity(n), size(1) {
    for (int i = 0; i < n; ++i) size *= static_cast<std::size_t>(b);
  }
  std::vector<int> decode(std::size_t index) const {
    std::vector<int> x(static_cast<std::size_t>(arity));
    for (std::size_t i = x.size(); i-- > 0;) {
      x[i] = static_cast<int>(index % static_cast<std::size_t>(base));
      index /= static_cast<std::size_t>(base);
    }
    return x;
  }
  std::size_t encode(std::span<const int> x) const {
    std::size_t index = 0;
    for (int a : x) index = index * static_cast<std::size_t>(base) + static_cast<std::size_t>(a);
    return index;
  }
};

std::vector<std::string> tuple_labels(const FiniteGroup& g, std::span<const int> x) {
  std::vector<std::string> out;
  for (int a : x) out.push_back(g.label(a));
  return out;
}

std::vector<std::string> point_of(const NaryMap& m, std::size_t i) { return m.point_labels(i); }

Report make_report(std::string construction, const std::string& group, int arity) {
  Report r;
  r.construction = std::move(construction);
  r.group = group;
  r.arity = arity;
  return r;
}

const FiniteGroup& source_group(const NaryMap& phi, const char* op) {
  if (!phi.source()) throw std::invalid_argument(std::string(op) + ": map has no source group");
  return *phi.source();
}

void require_abelian(const FiniteGroup& g, const char* op) {
  if (!g.abelian()) throw std::invalid_argument(std::string(op) + ": " + g.name() + " is not abelian");
}

// ka a + kb b in an abelian target.
NaryMap combine(const NaryMap& a, long ka, const NaryMap& b, long kb) {
  const auto& g = a.target();
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.mul(g.pow(a[i], ka), g.pow(b[i], kb));
  return NaryMap(a.source(), a.arity(), a.target_ptr(), std::move(v));
}

NaryMap with_values(const NaryMap& like, std::vector<int> values) {
  if (like.source()) return NaryMap(like.source(), like.arity(), like.target_ptr(), std::move(values));
  return NaryMap(like.base(), like.arity(), like.target_ptr(), std::move(values));
}

void require_pairing_domain(const NaryMap& psi, const BinaryPairing& p, const char* op) {
  const auto& g = p.group();
  if (!psi.source() || psi.source()->name() != g.name() || psi.target().name() != g.name())
    throw std::invalid_argument(std::string(op) + ": map must go from " + g.name() + "^n to " +
                                g.name());
}

bool symmetric_map(const NaryMap& m) { return check_symmetry(m, Symmetry::kSymmetric).passed(); }
bool skew_map(const NaryMap& m) { return check_symmetry(m, Symmetry::kSkew).passed(); }

}  // namespace

// ------------------------------------------------------------ index maps

IndexMap compose_maps(const IndexMap& outer, const IndexMap& inner) {
  IndexMap out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

IndexMap iterate_map(const IndexMap& f, int k) {
  IndexMap out(f.size());
  std::iota(out.begin(), out.end(), std::size_t{0});
  for (int i = 0; i < k; ++i) out = compose_maps(f, out);
  return out;
}

bool is_identity_map(const IndexMap& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != i) return false;
  return true;
}

IndexMap hexagon_map(const FiniteGroup& g) {
  const Domain d(g.order(), 2);
  IndexMap f(d.size);
  for (std::size_t i = 0; i < d.size; ++i) {
    const auto x = d.decode(i);
    const int img[2] = {x[1], g.inv(g.mul(x[0], x[1]))};
    f[i] = d.encode(img);
  }
  return f;
}

IndexMap hexagon_square_root(const FiniteGroup& g) {
  require_abelian(g, "square root");
  const Domain d(g.order(), 2);
  IndexMap s(d.size);
  for (std::size_t i = 0; i < d.size; ++i) {
    const auto x = d.decode(i);
    const int img[2] = {g.mul(x[0], x[1]), g.inv(x[0])};
    s[i] = d.encode(img);
  }
  return s;
}

Report check_square_root(const FiniteGroup& g) {
  Report r = make_report("square-root", g.name(), 2);
  const Domain d(g.order(), 2);
  const IndexMap f = hexagon_map(g);
  const IndexMap ss = iterate_map(hexagon_square_root(g), 2);
  for (std::size_t i = 0; i < d.size; ++i) {
    ++r.points_checked;
    if (ss[i] != f[i]) r.record({"s o s = f", tuple_labels(g, d.decode(i)), ""});
  }
  return r;
}

// ------------------------------------------------------------ Z3 hexagon

NaryMap z3_hexagon_solve(const NaryMap& phi, const IndexMap& f) {
  if (f.size() != phi.size()) throw std::invalid_argument("z3 hexagon: f is not a self-map of the domain");
  if (!is_identity_map(iterate_map(f, 3))) throw std::invalid_argument("z3 hexagon: f^3 != id");
  const auto& g = phi.target();
  std::vector<int> v(phi.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int a = phi[f[i]], b = phi[f[f[i]]];
    v[i] = g.mul(g.mul(g.inv(a), phi[i]), g.mul(g.inv(b), phi[i]));
  }
  return with_values(phi, std::move(v));
}

Report check_z3_hexagon(const NaryMap& phi, const IndexMap& f) {
  Report r = make_report("z3-hexagon", phi.target().name(), phi.arity());
  const auto& g = phi.target();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    ++r.points_checked;
    const int v = g.mul(g.mul(phi[f[i]], phi[i]), phi[f[f[i]]]);
    if (v != g.identity())
      r.record({"(phi o f) phi (phi o f^2) = e", point_of(phi, i), "value " + g.label(v)});
  }
  return r;
}

// ------------------------------------------------------------ cycle map P

IndexMap cycle_map(const FiniteGroup& g, int n) {
  if (n < 1) throw std::invalid_argument("cycle map: arity must be >= 1");
  const Domain d(g.order(), n);
  IndexMap p(d.size);
  std::vector<int> y(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < d.size; ++i) {
    const auto x = d.decode(i);
    int c = g.identity();
    for (int k = 1; k < n; ++k) c = g.mul(c, g.inv(x[static_cast<std::size_t>(k)]));
    c = g.mul(c, g.inv(x[0]));
    y[0] = c;
    for (int k = 1; k + 1 < n; ++k) y[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k + 1)];
    if (n >= 2) y[static_cast<std::size_t>(n - 1)] = x[0];
    p[i] = d.encode(y);
  }
  return p;
}

Report check_cycle_map(const GroupPtr& gp, int n) {
  const auto& g = *gp;
  Report r = make_report("cycle-map", g.name(), n);
  const Domain d(g.order(), n);
  const IndexMap p = cycle_map(g, n);
  std::vector<IndexMap> powers{iterate_map(p, 0)};
  for (int k = 1; k <= n + 1; ++k) powers.push_back(compose_maps(p, powers.back()));

  // 1-based access into x, with x_c standing for c.
  for (std::size_t i = 0; i < d.size; ++i) {
    ++r.points_checked;
    const auto x = d.decode(i);
    auto xs = [&](int k) { return x[static_cast<std::size_t>(k - 1)]; };
    int c = g.identity();
    for (int k = 2; k <= n; ++k) c = g.mul(c, g.inv(xs(k)));
    c = g.mul(c, g.inv(xs(1)));
    const auto pts = tuple_labels(g, x);

    if (powers[static_cast<std::size_t>(n + 1)][i] != i) r.record({"P^(n+1) = id", pts, ""});

    auto expect = [&](const std::vector<int>& y, int l, const std::string& name) {
      if (powers[static_cast<std::size_t>(l)][i] != d.encode(y)) r.record({name, pts, ""});
    };
    if (n >= 3) {
      std::vector<int> y{xs(2)};
      for (int k = 4; k <= n; ++k) y.push_back(xs(k));
      y.push_back(xs(1));
      y.push_back(c);
      expect(y, 2, "P^2 closed form");
    }
    for (int l = 3; l <= n - 1; ++l) {
      std::vector<int> y{xs(l)};
      for (int k = l + 2; k <= n; ++k) y.push_back(xs(k));
      y.push_back(xs(1));
      y.push_back(c);
      for (int k = 2; k <= l - 1; ++k) y.push_back(xs(k));
      expect(y, l, "P^" + std::to_string(l) + " closed form");
    }
    if (n >= 2) {
      std::vector<int> y{xs(n), c};
      for (int k = 2; k <= n - 1; ++k) y.push_back(xs(k));
      expect(y, n, "P^n closed form");
    } else {
      expect({g.inv(xs(1))}, 1, "P(x) = x^-1");
    }
  }
  return r;
}

CycleMap cycle_rep_P(const GroupPtr& g, int n) {
  CycleMap out{g, n, cycle_map(*g, n), check_cycle_map(g, n)};
  if (!out.certificate.passed()) {
    const auto& v = out.certificate.violations.front();
    throw std::logic_error("cycle map certificate failed on " + g->name() + ": " + v.check);
  }
  return out;
}

// ------------------------------------------------------------ n-ary hexagon

NaryMap slot_sum(const NaryMap& phi) {
  const auto& gs = source_group(phi, "slot sum");
  require_abelian(gs, "slot sum");
  require_abelian(phi.target(), "slot sum");
  const auto& gt = phi.target();
  std::vector<int> v(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    auto x = phi.decode(i);
    int s = gs.identity();
    for (int a : x) s = gs.mul(s, a);
    const int neg = gs.inv(s);
    int acc = gt.identity();
    for (auto& slot : x) {
      const int keep = slot;
      slot = neg;
      acc = gt.mul(acc, phi.at(x));
      slot = keep;
    }
    v[i] = acc;
  }
  return with_values(phi, std::move(v));
}

NaryHexagonSolution nary_hexagon_solve(const NaryMap& phi, Symmetry sym) {
  if (sym == Symmetry::kNone) throw std::invalid_argument("n-ary hexagon: phi must be symmetric or skew");
  require_abelian(source_group(phi, "n-ary hexagon"), "n-ary hexagon");
  require_abelian(phi.target(), "n-ary hexagon");
  if (!check_symmetry(phi, sym).passed())
    throw std::invalid_argument(std::string("n-ary hexagon: phi is not ") +
                                (sym == Symmetry::kSkew ? "skew-symmetric" : "symmetric"));
  const long n = phi.arity();
  const long s = sym == Symmetry::kSymmetric ? 1 : -1;
  const NaryMap sp = slot_sum(phi);
  return {sym, combine(phi, n, sp, -s), combine(phi, 1, sp, s)};
}

Report check_nary_hexagon(const NaryHexagonSolution& sol) {
  const auto& g = sol.hexagon.target();
  const long n = sol.hexagon.arity();
  const long s = sol.symmetry == Symmetry::kSymmetric ? 1 : -1;
  Report r = make_report(sol.symmetry == Symmetry::kSymmetric ? "nary-hexagon-symmetric"
                                                               : "nary-hexagon-skew",
                         source_group(sol.hexagon, "n-ary hexagon").name() + "->" + g.name(),
                         static_cast<int>(n));
  const NaryMap hex = combine(sol.hexagon, 1, slot_sum(sol.hexagon), s);
  const NaryMap anti = combine(sol.antihexagon, n, slot_sum(sol.antihexagon), -s);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    ++r.points_checked;
    if (hex[i] != g.identity())
      r.record({"hexagon", point_of(hex, i), "value " + g.label(hex[i])});
    if (anti[i] != g.identity())
      r.record({"anti-hexagon", point_of(anti, i), "value " + g.label(anti[i])});
  }
  return r;
}

// ------------------------------------------------------------ coefficient solutions

NaryMap coefficient_solve(const NaryMap& phi, std::span<const long> a) {
  const auto& gs = source_group(phi, "coefficient solution");
  require_abelian(phi.target(), "coefficient solution");
  const int n = phi.arity();
  if (a.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("coefficient solution: need n+1 coefficients");
  if (std::accumulate(a.begin(), a.end(), 0L) != 0)
    throw std::invalid_argument("coefficient solution: coefficients must sum to 0");
  const auto& g = phi.target();
  const IndexMap p = cycle_map(gs, n);
  std::vector<int> v(phi.size(), g.identity());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    std::size_t j = i;
    for (long ak : a) {
      v[i] = g.mul(v[i], g.pow(phi[j], ak));
      j = p[j];
    }
  }
  return with_values(phi, std::move(v));
}

Report check_cyclic_sum(const NaryMap& phi) {
  const auto& gs = source_group(phi, "cyclic sum");
  const auto& g = phi.target();
  Report r = make_report("coefficient-solution", gs.name() + "->" + g.name(), phi.arity());
  const IndexMap p = cycle_map(gs, phi.arity());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    ++r.points_checked;
    int acc = g.identity();
    std::size_t j = i;
    for (int k = 0; k <= phi.arity(); ++k) {
      acc = g.mul(acc, phi[j]);
      j = p[j];
    }
    if (acc != g.identity()) r.record({"sum_k phi o P^k = 0", point_of(phi, i), "value " + g.label(acc)});
  }
  return r;
}

// ------------------------------------------------------------ skew and parity

NaryMap skew_solve(const NaryMap& phi) {
  if (phi.arity() != 2) throw std::invalid_argument("skew solution: phi must be binary");
  const auto& g = phi.target();
  std::vector<int> v(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto x = phi.decode(i);
    const int swapped[2] = {x[1], x[0]};
    v[i] = g.mul(phi[i], g.inv(phi.at(swapped)));
  }
  return with_values(phi, std::move(v));
}

NaryMap skew_solve_tilde(const NaryMap& phi) { return skew_solve(phi).pointwise_inverse(); }

Report check_group_skew(const NaryMap& sigma) {
  const auto& g = sigma.target();
  Report r = make_report("group-skew", g.name(), 2);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    ++r.points_checked;
    const auto x = sigma.decode(i);
    const int swapped[2] = {x[1], x[0]};
    if (sigma.at(swapped) != g.inv(sigma[i]))
      r.record({"sigma(y,x) = sigma(x,y)^-1", point_of(sigma, i), ""});
  }
  return r;
}

IndexMap parity_map(const FiniteGroup& g, int n, std::span<const int> slots) {
  std::vector<bool> invert(static_cast<std::size_t>(n), false);
  for (int s : slots) {
    if (s < 1 || s > n) throw std::invalid_argument("parity: slot out of range");
    invert[static_cast<std::size_t>(s - 1)] = true;
  }
  const Domain d(g.order(), n);
  IndexMap f(d.size);
  for (std::size_t i = 0; i < d.size; ++i) {
    auto x = d.decode(i);
    for (std::size_t k = 0; k < x.size(); ++k)
      if (invert[k]) x[k] = g.inv(x[k]);
    f[i] = d.encode(x);
  }
  return f;
}

NaryMap parity_solve(const NaryMap& phi, std::span<const int> slots, ParityForm form) {
  const IndexMap f = parity_map(source_group(phi, "parity"), phi.arity(), slots);
  const auto& g = phi.target();
  std::vector<int> v(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const int other = form == ParityForm::kProduct ? phi[f[i]] : g.inv(phi[f[i]]);
    v[i] = g.mul(phi[i], other);
  }
  return with_values(phi, std::move(v));
}

Report check_parity(const NaryMap& rho, std::span<const int> slots, ParityForm form) {
  const auto& gs = source_group(rho, "parity");
  const auto& g = rho.target();
  Report r = make_report(form == ParityForm::kProduct ? "parity-product" : "parity-quotient",
                         gs.name() + "->" + g.name(), rho.arity());
  std::string m;
  for (int s : slots) m += (m.empty() ? "" : ",") + std::to_string(s);
  r.extra["slots"] = "{" + m + "}";
  const IndexMap f = parity_map(gs, rho.arity(), slots);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    ++r.points_checked;
    const int expect = form == ParityForm::kProduct ? rho[i] : g.inv(rho[i]);
    if (rho[f[i]] != expect)
      r.record({form == ParityForm::kProduct ? "rho o f^M = rho" : "rho o f^M = rho^-1",
                point_of(rho, i), ""});
  }
  return r;
}

NaryMap inverse_parity_solve(const NaryMap& phi) {
  if (phi.arity() != 1) throw std::invalid_argument("inverse parity: phi must be unary");
  const auto& gs = source_group(phi, "inverse parity");
  const auto& g = phi.target();
  std::vector<int> v(phi.size());
  for (int x = 0; x < gs.order(); ++x)
    v[static_cast<std::size_t>(x)] = g.mul(phi[static_cast<std::size_t>(x)],
                                           g.inv(phi[static_cast<std::size_t>(gs.inv(x))]));
  return with_values(phi, std::move(v));
}

Report check_inverse_parity(const NaryMap& rho) {
  const auto& gs = source_group(rho, "inverse parity");
  const auto& g = rho.target();
  Report r = make_report("inverse-parity", gs.name() + "->" + g.name(), 1);
  for (int x = 0; x < gs.order(); ++x) {
    ++r.points_checked;
    if (rho[static_cast<std::size_t>(gs.inv(x))] != g.inv(rho[static_cast<std::size_t>(x)]))
      r.record({"rho(x^-1) = rho(x)^-1", {gs.label(x)}, ""});
  }
  return r;
}

// ------------------------------------------------------------ differentials

NaryMap pointwise_bracket(const NaryMap& a, const NaryMap& b, const BinaryPairing& p) {
  if (a.size() != b.size() || a.target().name() != p.group().name() ||
      b.target().name() != p.group().name())
    throw std::invalid_argument("pointwise bracket: maps must share a domain and take values in " +
                                p.group().name());
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p(a[i], b[i]);
  return with_values(a, std::move(v));
}

namespace {

void require_1d(const NaryMap& psi, const BinaryPairing& p) {
  require_pairing_domain(psi, p, "1D differential");
  require_abelian(p.group(), "1D differential");
  if (!p.bihomomorphic()) throw std::invalid_argument("1D differential: pairing " + p.name() + " is not bihomomorphic");
  if (psi.arity() < 2) throw std::invalid_argument("1D differential: arity must be >= 2");
}

int coordinate_sum(const FiniteGroup& g, std::span<const int> x) {
  int s = g.identity();
  for (int a : x) s = g.mul(s, a);
  return s;
}

}  // namespace

NaryMap diff_1d(const NaryMap& psi, const BinaryPairing& p) {
  require_1d(psi, p);
  const auto& g = p.group();
  const IndexMap f = cycle_map(g, psi.arity());
  std::vector<int> v(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    int acc = g.identity();
    std::size_t j = i;
    for (int k = 0; k <= psi.arity(); ++k) {
      acc = g.mul(acc, psi[j]);
      j = f[j];
    }
    v[i] = p(coordinate_sum(g, psi.decode(i)), acc);
  }
  return with_values(psi, std::move(v));
}

NaryMap diff_1d_slots(const NaryMap& psi, const BinaryPairing& p) {
  require_1d(psi, p);
  const auto& g = p.group();
  const NaryMap s = slot_sum(psi);
  std::vector<int> v(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    v[i] = p(coordinate_sum(g, psi.decode(i)), g.mul(psi[i], s[i]));
  return with_values(psi, std::move(v));
}

Report check_diff_1d(const NaryMap& psi, const BinaryPairing& p) {
  const auto& g = p.group();
  Report r = make_report("prop-1d", p.name(), psi.arity());
  const NaryMap d = diff_1d(psi, p);
  const NaryMap dd = diff_1d(d, p);
  for (std::size_t i = 0; i < dd.size(); ++i) {
    ++r.points_checked;
    if (dd[i] != g.identity()) r.record({"dd psi = 0", point_of(dd, i), "value " + g.label(dd[i])});
  }
  const bool sym = symmetric_map(psi);
  if (sym) {
    const NaryMap ds = diff_1d_slots(psi, p);
    for (std::size_t i = 0; i < d.size(); ++i)
      if (ds[i] != d[i]) r.record({"slot formula = iterate formula", point_of(d, i), ""});
  }
  if (psi.arity() == 2) {
    if (sym && !symmetric_map(d)) r.record({"parity conservation (symmetric)", {}, ""});
    if (skew_map(psi) && !skew_map(d)) r.record({"parity conservation (skew)", {}, ""});
  }
  r.extra["psi_symmetric"] = sym;
  return r;
}

namespace {

void require_2d(const NaryMap& psi, const BinaryPairing& p, bool permissive) {
  require_pairing_domain(psi, p, "2D differential");
  if (psi.arity() != 2) throw std::invalid_argument("2D differential: psi must be binary");
  require_abelian(p.group(), "2D differential");
  if (!p.bihomomorphic()) throw std::invalid_argument("2D differential: pairing " + p.name() + " is not bihomomorphic");
  if (!permissive && !p.alternating() && p.group().exponent() != 3)
    throw std::invalid_argument("2D differential: pairing " + p.name() +
                                " is neither alternating nor on a group of exponent 3");
}

}  // namespace

NaryMap diff_2d(const NaryMap& psi, const BinaryPairing& p, bool permissive) {
  require_2d(psi, p, permissive);
  const auto& g = p.group();
  const IndexMap f = cycle_map(g, 2);  // (-x-y, x)
  const IndexMap ft = hexagon_map(g);  // (y, -x-y)
  std::vector<int> v(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const int a = psi[i], b = psi[f[i]], c = psi[ft[i]];
    v[i] = g.mul(g.mul(p(a, b), p(b, c)), p(c, a));
  }
  return with_values(psi, std::move(v));
}

Report check_diff_2d(const NaryMap& psi, const BinaryPairing& p, bool permissive) {
  const auto& g = p.group();
  Report r = make_report("prop-2d", p.name(), 2);
  const NaryMap d = diff_2d(psi, p, permissive);
  const NaryMap dd = diff_2d(d, p, permissive);
  const IndexMap f = cycle_map(g, 2);
  for (std::size_t i = 0; i < d.size(); ++i) {
    ++r.points_checked;
    if (dd[i] != g.identity()) r.record({"dd psi = 0", point_of(dd, i), "value " + g.label(dd[i])});
    if (d[f[i]] != d[i]) r.record({"(d psi) o f = d psi", point_of(d, i), ""});
  }
  return r;
}

Report search_diff_2d_counterexample(const BinaryPairing& p, Rng& rng, int trials) {
  const auto& gp = p.group_ptr();
  Report r = make_report("prop-2d-search", p.name(), 2);
  int t = 0;
  for (; t < trials && r.passed(); ++t) {
    const NaryMap psi = NaryMap::random(rng, gp, 2, gp);
    const NaryMap dd = diff_2d(diff_2d(psi, p, true), p, true);
    for (std::size_t i = 0; i < dd.size(); ++i) {
      ++r.points_checked;
      if (dd[i] != gp->identity())
        r.record({"dd psi = 0", point_of(dd, i),
                  "trial " + std::to_string(t) + ", value " + gp->label(dd[i])});
    }
  }
  r.extra["trials"] = t;
  r.extra["seed"] = rng.seed();
  return r;
}

namespace {

void require_3d(const NaryMap& psi, const BinaryPairing& p, bool permissive) {
  require_pairing_domain(psi, p, "3D differential");
  if (psi.arity() != 2) throw std::invalid_argument("3D differential: psi must be binary");
  if (permissive) return;
  if (!p.skew()) throw std::invalid_argument("3D differential: pairing " + p.name() + " is not skew");
  if (!p.bihomomorphic()) {
    const auto& w = p.bihomomorphism_witness();
    const auto& g = p.group();
    throw std::invalid_argument("3D differential: pairing " + p.name() +
                                " is not bihomomorphic, witness (" + g.label(w[0]) + "," +
                                g.label(w[1]) + "," + g.label(w[2]) + ")");
  }
}

}  // namespace

NaryMap diff_3d(const NaryMap& psi, const BinaryPairing& p, bool permissive) {
  require_3d(psi, p, permissive);
  const auto& g = p.group();
  const IndexMap f = cycle_map(g, 2);
  const IndexMap ft = hexagon_map(g);
  std::vector<int> v(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) v[i] = p(psi[i], g.mul(psi[ft[i]], psi[f[i]]));
  return with_values(psi, std::move(v));
}

Report check_diff_3d(const NaryMap& psi, const BinaryPairing& p, bool permissive) {
  const auto& g = p.group();
  Report r = make_report("prop-3d", p.name(), 2);
  const NaryMap dd = diff_3d(diff_3d(psi, p, permissive), p, permissive);
  for (std::size_t i = 0; i < dd.size(); ++i) {
    ++r.points_checked;
    if (dd[i] != g.identity()) r.record({"dd psi = e", point_of(dd, i), "value " + g.label(dd[i])});
  }
  return r;
}

Report check_abelian_image(const BinaryPairing& p) {
  const auto& g = p.group();
  Report r = make_report("abelian-image", p.name(), 3);
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++r.points_checked;
        const int ac_bc = g.mul(p(a, c), p(b, c));
        if (ac_bc != g.mul(p(b, c), p(a, c)))
          r.record({"[a,c][b,c] = [b,c][a,c]", {g.label(a), g.label(b), g.label(c)}, ""});
        if (ac_bc != g.inv(p(c, g.mul(a, b))))
          r.record({"[a,c][b,c] = [c,ab]^-1", {g.label(a), g.label(b), g.label(c)}, ""});
      }
  return r;
}

Report leibniz_search(const BinaryPairing& p, int n, Rng& rng, int trials) {
  const auto& gp = p.group_ptr();
  const auto& g = *gp;
  Report r = make_report("leibniz-search", p.name(), n);
  for (int t = 0; t < trials; ++t) {
    const NaryMap a = NaryMap::random_with(rng, Symmetry::kSymmetric, gp, n, gp);
    const NaryMap b = NaryMap::random_with(rng, Symmetry::kSymmetric, gp, n, gp);
    const NaryMap lhs = diff_1d(pointwise_bracket(a, b, p), p);
    const NaryMap r1 = pointwise_bracket(diff_1d(a, p), b, p);
    const NaryMap r2 = pointwise_bracket(a, diff_1d(b, p), p);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      ++r.points_checked;
      const int rhs = g.mul(r1[i], r2[i]);
      if (lhs[i] != rhs)
        r.record({"leibniz", point_of(lhs, i),
                  "trial " + std::to_string(t) + ": lhs " + g.label(lhs[i]) + ", rhs " + g.label(rhs)});
    }
  }
  r.extra["trials"] = trials;
  r.extra["seed"] = rng.seed();
  return r;
}

// ------------------------------------------------------------ lab runner

namespace {

std::string or_default(const std::string& s, const char* fallback) { return s.empty() ? fallback : s; }
int or_default(int v, int fallback) { return v > 0 ? v : fallback; }

nlohmann::json summary(const Report& r) {
  return {{"check", r.construction}, {"points_checked", r.points_checked},
          {"violation_count", r.violation_count}};
}

// Merges sub-reports into one headline report, keeping a per-check summary.
struct Suite {
  Report total;
  Suite(std::string id, std::string group, int arity) {
    total = make_report(std::move(id), group, arity);
    total.extra["checks"] = nlohmann::json::array();
  }
  void add(const Report& r) {
    total.merge(r);
    total.extra["checks"].push_back(summary(r));
  }
};

LabOutcome done(Suite& s) { return {s.total, s.total.passed()}; }

}  // namespace

std::vector<std::string> group_lab_ids() {
  return {"prop1",     "prop-bh", "prop-gh",  "prop-1d", "prop-2d",  "prop-3d",
          "cycle",     "coefficient", "skew",  "parity",  "sqrt",     "leibniz",
          "prop-2d-search"};
}

LabOutcome run_group_lab(std::string_view id_in, const LabConfig& cfg) {
  const std::string id = id_in == "z3hexagon" ? "prop-bh" : std::string(id_in);
  Rng rng(cfg.seed);

  if (id == "prop1") {
    const int degree = or_default(cfg.max_degree, 6);
    const auto lie2 = FreeLie::create({"x", "y"}, degree);
    Suite s(id, "lie2", degree);
    s.add(check_projector_algebra(lie2, rng, or_default(cfg.samples, 20)));
    s.total.extra["seed"] = cfg.seed;
    return done(s);
  }
  if (id == "prop-bh") {
    const GroupPtr g = make_group(or_default(cfg.group, "Z5"));
    const GroupPtr t = make_group(or_default(cfg.target, "S3"));
    Suite s(id, g->name() + "->" + t->name(), 2);
    const IndexMap f = hexagon_map(*g);
    const NaryMap phi = NaryMap::random(rng, g, 2, t);
    s.add(check_z3_hexagon(z3_hexagon_solve(phi, f), f));
    s.total.extra["seed"] = cfg.seed;
    return done(s);
  }
  if (id == "prop-gh") {
    const GroupPtr g = make_group(or_default(cfg.group, "Z5"));
    const GroupPtr t = cfg.target.empty() ? g : make_group(cfg.target);
    const int n = or_default(cfg.arity, 2);
    Suite s(id, g->name() + "->" + t->name(), n);
    for (Symmetry sym : {Symmetry::kSymmetric, Symmetry::kSkew}) {
      const NaryMap phi = NaryMap::random_with(rng, sym, g, n, t);
      s.add(check_nary_hexagon(nary_hexagon_solve(phi, sym)));
    }
    s.total.extra["seed"] = cfg.seed;
    return done(s);
  }
  if (id == "cycle") {
    const GroupPtr g = make_group(or_default(cfg.group, "S3"));
    const int n = or_default(cfg.arity, 3);
    Suite s(id, g->name(), n);
    s.add(check_cycle_map(g, n));
    return done(s);
  }
  if (id == "coefficient") {
    const GroupPtr g = make_group(or_default(cfg.group, "Z5"));
    const GroupPtr t = cfg.target.empty() ? g : make_group(cfg.target);
    const int n = or_default(cfg.arity, 2);
    Suite s(id, g->name() + "->" + t->name(), n);
    nlohmann::json vectors = nlohmann::json::array();
    for (int trial = 0; trial < or_default(cfg.samples, 10); ++trial) {
      std::vector<long> a(static_cast<std::size_t>(n + 1));
      long sum = 0;
      for (std::size_t k = 0; k + 1 < a.size(); ++k) sum += a[k] = rng.below(11) - 5;
      a.back() = -sum;
      vectors.push_back(a);
      s.add(check_cyclic_sum(coefficient_solve(NaryMap::random(rng, g, n, t), a)));
    }
    s.total.extra["coefficients"] = vectors;
    s.total.extra["seed"] = cfg.seed;
    return done(s);
  }
  if (id == "skew") {
    const GroupPtr g = make_group(or_default(cfg.group, "S3"));
    const GroupPtr t = cfg.target.empty() ? g : make_group(cfg.target);
    Suite s(id, g->name() + "->" + t->name(), 2);
    const NaryMap phi = NaryMap::random(rng, g, 2, t);
    s.add(check_group_skew(skew_solve(phi)));
    s.add(check_group_skew(skew_solve_tilde(phi)));
    s.total.extra["seed"] = cfg.seed;
    return done(s);
  }
  if (id == "parity") {
    const GroupPtr g = make_group(or_default(cfg.group, "S3"));
    const GroupPtr t = make_group(or_default(cfg.target, "Z6"));
    const int n = or_default(cfg.arity, 2);
    Suite s(id, g->name() + "->" + t->name(), n);
    const NaryMap phi = NaryMap::random(rng, g, n, t);
    // Every nonempty subset of slots, plus the empty one.
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> slots;
      for (int k = 0; k < n; ++k)
        if (mask & (1 << k)) slots.push_back(k + 1);
      s.add(check_parity(parity_solve(phi, slots, ParityForm::kQuotient), slots, ParityForm::kQuotient));
      s.add(check_parity(parity_solve(phi, slots, ParityForm::kProduct), slots, ParityForm::kProduct));
    }
    const NaryMap phi1 = NaryMap::random(rng, g, 1, t);
    s.add(check_inverse_parity(inverse_parity_solve(phi1)));
    s.add(check_inverse_parity(inverse_parity_solve(phi1).pointwise_inverse()));
    s.total.extra["seed"] = cfg.seed;
    return done(s);
  }
  if (id == "sqrt") {
    const GroupPtr g = make_group(or_default(cfg.group, "Z5"));
    Suite s(id, g->name(), 2);
    s.add(check_square_root(*g));
    return done(s);
  }
  if (id == "prop-1d") {
    const BinaryPairing p = make_pairing(or_default(cfg.pairing, "ring:3"));
    const int n = or_default(cfg.arity, 2);
    Suite s(id, p.name(), n);
    const auto& gp = p.group_ptr();
    const NaryMap sym = NaryMap::random_with(rng, Symmetry::kSymmetric, gp, n, gp);
    const NaryMap any = NaryMap::random(rng, gp, n, gp);
    s.add(check_diff_1d(sym, p));
    s.add(check_diff_1d(any, p));
    if (p.group().abelian()) {
      const NaryMap skew = NaryMap::random_with(rng, Symmetry::kSkew, gp, n, gp);
      s.add(check_diff_1d(skew, p));
      // additivity
      Report lin = make_report("prop-1d-additive", p.name(), n);
      const NaryMap lhs = diff_1d(combine(sym, 1, any, 1), p);
      const NaryMap rhs = combine(diff_1d(sym, p), 1, diff_1d(any, p), 1);
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        ++lin.points_checked;
        if (lhs[i] != rhs[i]) lin.record({"d(a+b) = da + db", point_of(lhs, i), ""});
      }
      s.add(lin);
    }
    s.total.extra["seed"] = cfg.seed;
    return done(s);
  }
  if (id == "prop-2d") {
    const BinaryPairing p = make_pairing(or_default(cfg.pairing, "heisenberg:3"));
    Suite s(id, p.name(), 2);
    const auto& gp = p.group_ptr();
    s.add(check_diff_2d(NaryMap::random(rng, gp, 2, gp), p, cfg.permissive));
    s.total.extra["seed"] = cfg.seed;
    return done(s);
  }
  if (id == "prop-2d-search") {
    const BinaryPairing p = make_pairing(or_default(cfg.pairing, "ring:5"));
    Report r = search_diff_2d_counterexample(p, rng, or_default(cfg.samples, 20));
    return {r, r.passed()};
  }
  if (id == "prop-3d") {
    const BinaryPairing p = make_pairing(or_default(cfg.pairing, "z2z4"));
    Suite s(id, p.name(), 2);
    const auto& gp = p.group_ptr();
    s.add(check_diff_3d(NaryMap::random(rng, gp, 2, gp), p, cfg.permissive));
    s.add(check_abelian_image(p));
    s.total.extra["seed"] = cfg.seed;
    return done(s);
  }
  if (id == "leibniz") {
    const BinaryPairing p = make_pairing(or_default(cfg.pairing, "cross:3"));
    Report r = leibniz_search(p, or_default(cfg.arity, 2), rng, or_default(cfg.samples, 10));
    r.extra["derivation_disproved"] = !r.passed();
    // The search is expected to find a failure of the Leibniz rule.
    return {r, !r.passed()};
  }
  throw std::invalid_argument("unknown group lab id '" + id + "'");
}

}  // namespace grt
