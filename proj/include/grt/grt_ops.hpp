#pragma once

#include "grt/lie_series.hpp"
#include "grt/report.hpp"

// Operators on the free Lie algebra in two generators. The first letter of
// the alphabet plays the role of x, the second of y; every operation throws
// MismatchError for any other alphabet size.
namespace grt {

// (x, y) -> (y, x)
LieSeries swap_xy(const LieSeries& phi);

// phi(y, -x-y) + phi(-x-y, x)
LieSeries alpha(const LieSeries& phi);

// (2 phi - alpha phi) / 3, the projector onto hexagon solutions.
LieSeries hexagon_project(const LieSeries& phi);

// (phi + alpha phi) / 3, the complementary projector.
LieSeries antihexagon_project(const LieSeries& phi);

// phi + alpha phi; zero iff phi solves the hexagon equation.
LieSeries hexagon_residual(const LieSeries& phi);

// phi - (alpha phi) / 2; zero iff phi solves the anti-hexagon equation.
LieSeries antihexagon_residual(const LieSeries& phi);

// (id + beta alpha)(id + lambda alpha) phi
LieSeries lambda_compose(const Rational& lambda, const Rational& beta, const LieSeries& phi);

// (phi - swap phi) / 2
LieSeries skew_symmetrize(const LieSeries& phi);

// phi + swap phi; zero iff phi is skew.
LieSeries skew_residual(const LieSeries& phi);

// D_f(g) for the derivation with D_f(x) = 0 and D_f(y) = [y, f].
LieSeries derivation_apply(const LieSeries& f, const LieSeries& g);

// {f, g} = [f, g] + D_f(g) - D_g(f)
LieSeries ihara_bracket(const LieSeries& f, const LieSeries& g);

// [y, phi(x, y)] + [z, phi(x, z)] with z = -x-y.
LieSeries drinfeld_eq3_residual(const LieSeries& phi);

// [x,[x,y]] - [y,[y,x]]
LieSeries sigma3(const FreeLiePtr& lie2);

// Homogeneous degree-d solutions of {skew, hexagon, eq3}, as a basis in
// which each vector has leading (degree, word) coefficient 1. Requires
// degree < max_degree.
std::vector<LieSeries> grt_candidates(const FreeLiePtr& lie2, int degree);

// The unique normalized degree-5 solution of {skew, hexagon, eq3}.
// Requires max_degree >= 6 so the eq3 constraint is visible.
LieSeries sigma5(const FreeLiePtr& lie2);

// p/q with |p| <= 5 and 1 <= q <= 4.
Rational random_rational(Rng& rng);
// Sum of `terms_per_degree` random basis elements (with repetition) in each
// degree 1..max_degree, with random_rational coefficients.
LieSeries random_series(const FreeLiePtr& algebra, Rng& rng, int terms_per_degree = 2);

// H^2 = H, A^2 = A, H + A = id, HA = AH = 0, alpha^2 = 2 + alpha, the
// (lambda, beta) composition rule, the residual scaling of phi + lambda alpha phi,
// the hexagon and anti-hexagon equations for H phi and A phi, and commutation
// with the swap, on `samples` random series.
Report check_projector_algebra(const FreeLiePtr& lie2, Rng& rng, int samples);

}  // namespace grt
