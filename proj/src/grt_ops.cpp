#include "grt/grt_ops.hpp"

#include <map>

#include "grt/linalg.hpp"

namespace grt {

namespace {

void require_two_generators(const LieSeries& s, const char* op) {
  if (s.algebra().rank() != 2)
    throw MismatchError(std::string(op) + ": expected an alphabet of two generators");
}

struct XY {
  LieSeries x;
  LieSeries y;
};

XY generators(const LieSeries& s) {
  return {LieSeries::generator(s.algebra_ptr(), Letter{0}),
          LieSeries::generator(s.algebra_ptr(), Letter{1})};
}

}  // namespace

LieSeries swap_xy(const LieSeries& phi) {
  require_two_generators(phi, "swap");
  auto [x, y] = generators(phi);
  return substitute(phi, std::vector<LieSeries>{y, x});
}

LieSeries alpha(const LieSeries& phi) {
  require_two_generators(phi, "alpha");
  auto [x, y] = generators(phi);
  LieSeries z = -(x + y);
  return substitute(phi, std::vector<LieSeries>{y, z}) + substitute(phi, std::vector<LieSeries>{z, x});
}

LieSeries hexagon_project(const LieSeries& phi) {
  LieSeries out = Rational(2) * phi - alpha(phi);
  return out *= Rational(1, 3);
}

LieSeries antihexagon_project(const LieSeries& phi) {
  LieSeries out = phi + alpha(phi);
  return out *= Rational(1, 3);
}

LieSeries hexagon_residual(const LieSeries& phi) { return phi + alpha(phi); }

LieSeries antihexagon_residual(const LieSeries& phi) {
  return phi - Rational(1, 2) * alpha(phi);
}

LieSeries lambda_compose(const Rational& lambda, const Rational& beta, const LieSeries& phi) {
  LieSeries inner = phi;
  inner.add_scaled(lambda, alpha(phi));
  LieSeries out = inner;
  out.add_scaled(beta, alpha(inner));
  return out;
}

LieSeries skew_symmetrize(const LieSeries& phi) {
  LieSeries out = phi - swap_xy(phi);
  return out *= Rational(1, 2);
}

LieSeries skew_residual(const LieSeries& phi) { return phi + swap_xy(phi); }

LieSeries derivation_apply(const LieSeries& f, const LieSeries& g) {
  require_two_generators(f, "derivation");
  require_two_generators(g, "derivation");
  auto [x, y] = generators(g);
  return apply_derivation(g, {LieSeries(g.algebra_ptr()), bracket(y, f)});
}

LieSeries ihara_bracket(const LieSeries& f, const LieSeries& g) {
  return bracket(f, g) + derivation_apply(f, g) - derivation_apply(g, f);
}

LieSeries drinfeld_eq3_residual(const LieSeries& phi) {
  require_two_generators(phi, "eq3");
  auto [x, y] = generators(phi);
  LieSeries z = -(x + y);
  return bracket(y, phi) + bracket(z, substitute(phi, std::vector<LieSeries>{x, z}));
}

LieSeries sigma3(const FreeLiePtr& lie2) {
  if (lie2->rank() != 2) throw MismatchError("sigma3: expected two generators");
  if (lie2->max_degree() < 3) throw MismatchError("sigma3: max_degree must be >= 3");
  LieSeries x = LieSeries::generator(lie2, Letter{0});
  LieSeries y = LieSeries::generator(lie2, Letter{1});
  return bracket(x, bracket(x, y)) - bracket(y, bracket(y, x));
}

std::vector<LieSeries> grt_candidates(const FreeLiePtr& lie2, int degree) {
  if (lie2->rank() != 2) throw MismatchError("grt_candidates: expected two generators");
  // The eq3 residual of a degree-d element has degree d+1.
  if (degree < 1 || degree + 1 > lie2->max_degree())
    throw std::invalid_argument("grt_candidates: need 1 <= degree < max_degree");
  const auto basis = lyndon_basis(2, degree);
  const int n = static_cast<int>(basis.size());

  // Each constraint is linear; stack its matrix (rows indexed by output
  // coordinates) and row-reduce.
  std::map<std::pair<int, Word>, SparseVector> rows;
  auto add_constraint = [&](int tag, auto&& op) {
    for (int j = 0; j < n; ++j) {
      LieSeries image = op(LieSeries::basis_element(lie2, basis[j]));
      for (const auto& [w, c] : image.terms()) rows[{tag, w}].emplace_back(j, c);
    }
  };
  add_constraint(0, [](const LieSeries& s) { return skew_residual(s); });
  add_constraint(1, [](const LieSeries& s) { return hexagon_residual(s); });
  add_constraint(2, [](const LieSeries& s) { return drinfeld_eq3_residual(s); });

  RowEchelon echelon(n);
  for (const auto& [key, row] : rows) echelon.insert(row);

  std::vector<LieSeries> out;
  for (const auto& v : echelon.nullspace()) {
    // Leading coordinate in (degree, word) order is the smallest index.
    const Rational lead = v.front().second;
    Terms t;
    for (const auto& [j, c] : v) t.emplace(basis[j], c / lead);
    out.emplace_back(lie2, std::move(t));
  }
  return out;
}

LieSeries sigma5(const FreeLiePtr& lie2) {
  if (lie2->max_degree() < 6) throw MismatchError("sigma5: max_degree must be >= 6");
  auto candidates = grt_candidates(lie2, 5);
  if (candidates.size() != 1)
    throw std::logic_error("sigma5: expected a one-dimensional solution space, found " +
                           std::to_string(candidates.size()));
  return candidates.front();
}

Rational random_rational(Rng& rng) {
  Rational q(rng.below(11) - 5, rng.below(4) + 1);
  q.canonicalize();
  return q;
}

LieSeries random_series(const FreeLiePtr& algebra, Rng& rng, int terms_per_degree) {
  LieSeries out(algebra);
  for (int d = 1; d <= algebra->max_degree(); ++d) {
    const auto basis = lyndon_basis(algebra->rank(), d);
    for (int k = 0; k < terms_per_degree; ++k) {
      const auto& w = basis[static_cast<std::size_t>(rng.below(static_cast<int>(basis.size())))];
      out.add_scaled(random_rational(rng), LieSeries::basis_element(algebra, w));
    }
  }
  return out;
}

Report check_projector_algebra(const FreeLiePtr& lie2, Rng& rng, int samples) {
  Report r;
  r.construction = "projector-algebra";
  r.group = "lie2";
  r.arity = lie2->max_degree();
  const LieSeries zero(lie2);
  for (int k = 0; k < samples; ++k) {
    const LieSeries phi = random_series(lie2, rng);
    const Rational lambda = random_rational(rng), beta = random_rational(rng);
    const LieSeries h = hexagon_project(phi), a = antihexagon_project(phi), al = alpha(phi);
    ++r.points_checked;
    auto expect = [&](bool ok, const char* name) {
      if (!ok) r.record({name, {"sample " + std::to_string(k)}, ""});
    };
    expect(hexagon_project(h) == h, "H^2 = H");
    expect(antihexagon_project(a) == a, "A^2 = A");
    expect(h + a == phi, "H + A = id");
    expect(hexagon_project(a) == zero, "HA = 0");
    expect(antihexagon_project(h) == zero, "AH = 0");
    expect(alpha(al) == Rational(2) * phi + al, "alpha^2 = 2 id + alpha");
    expect(hexagon_residual(h) == zero, "hexagon(H phi) = 0");
    expect(antihexagon_residual(a) == zero, "anti-hexagon(A phi) = 0");
    expect(hexagon_project(skew_symmetrize(phi)) == skew_symmetrize(h), "H skew = skew H");
    expect(alpha(swap_xy(phi)) == swap_xy(al), "alpha swap = swap alpha");
    LieSeries composed = (1 + 2 * lambda * beta) * phi;
    composed.add_scaled(lambda + beta + lambda * beta, al);
    expect(lambda_compose(lambda, beta, phi) == composed, "(id+b alpha)(id+l alpha)");
    LieSeries phi_l = phi;
    phi_l.add_scaled(lambda, al);
    expect(hexagon_residual(phi_l) == (1 + 2 * lambda) * hexagon_residual(phi),
           "residual(phi + l alpha phi) = (1+2l) residual(phi)");
  }
  r.extra["samples"] = samples;
  return r;
}

}  // namespace grt
