#include <doctest.h>

#include <functional>
#include <numeric>

#include "grt/group_lab.hpp"

using namespace grt;

namespace {

int mod(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

// Table of a map Z_m^n -> Z_k written as a function of plain integers, in
// the library's mixed-radix order.
std::vector<int> tabulate(int m, int n, const std::function<int(const std::vector<int>&)>& f) {
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) size *= static_cast<std::size_t>(m);
  std::vector<int> out(size);
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t r = idx;
    for (int i = n - 1; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::size_t>(m));
      r /= static_cast<std::size_t>(m);
    }
    out[idx] = f(x);
  }
  return out;
}

std::size_t index_of(int m, const std::vector<int>& x) {
  std::size_t idx = 0;
  for (int a : x) idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(mod(a, m));
  return idx;
}

}  // namespace

TEST_CASE("finite groups validate and parse specs") {
  const auto z6 = make_group("Z6");
  CHECK(z6->order() == 6);
  CHECK(z6->abelian());
  CHECK(z6->exponent() == 6);
  const auto s3 = make_group("S3");
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->abelian());
  CHECK(make_group("S4")->order() == 24);
  const auto p = make_group("Z2xZ3");
  CHECK(p->order() == 6);
  CHECK(p->abelian());
  CHECK(make_group("Z3^3")->exponent() == 3);
  CHECK(make_group("S3xZ2")->order() == 12);
  CHECK_THROWS_AS(make_group("Q8"), GroupError);
  CHECK_THROWS_AS(make_group("Z0"), GroupError);
  CHECK_THROWS_AS(FiniteGroup("bad", {"a", "b"}, {0, 0, 0, 0}), GroupError);
  // Z2 table with a non-associative twist is rejected
  CHECK_THROWS_AS(FiniteGroup("bad", {"e", "a", "b"}, {0, 1, 2, 1, 0, 0, 2, 0, 1}), GroupError);
  for (int a = 0; a < s3->order(); ++a) CHECK(s3->mul(a, s3->inv(a)) == s3->identity());
}

TEST_CASE("hexagon map and square root on abelian groups") {
  for (int m : {3, 4, 5, 6}) {
    const auto g = make_group("Z" + std::to_string(m));
    const IndexMap f = hexagon_map(*g);
    const IndexMap s = hexagon_square_root(*g);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        CHECK(f[index_of(m, {x, y})] == index_of(m, {y, -x - y}));
        CHECK(s[index_of(m, {x, y})] == index_of(m, {x + y, -x}));
      }
    CHECK(is_identity_map(iterate_map(f, 3)));
    CHECK(check_square_root(*g).passed());
  }
  CHECK(check_square_root(*make_group("Z2xZ4")).passed());
  CHECK(check_square_root(*make_group("Z3^3")).passed());
}

TEST_CASE("z3_hexagon_solve examples") {
  Rng rng(1);
  const auto z5 = make_group("Z5");
  const IndexMap f = hexagon_map(*z5);
  for (const char* t : {"S3", "Z6", "S4"}) {
    const auto target = make_group(t);
    const auto c = NaryMap::constant(z5, 2, target, 1);
    const auto sc = z3_hexagon_solve(c, f);
    for (int v : sc.values()) CHECK(v == target->identity());
    const auto phi = NaryMap::random(rng, z5, 2, target);
    const Report r = check_z3_hexagon(z3_hexagon_solve(phi, f), f);
    CHECK(r.passed());
    CHECK(r.points_checked == 25);
  }
  // abelian target, phi already a solution: result is 3 phi
  const auto z7 = make_group("Z7");
  const auto phi = NaryMap::random(rng, z5, 2, z7);
  const auto sol = z3_hexagon_solve(phi, f);
  const auto again = z3_hexagon_solve(sol, f);
  for (std::size_t i = 0; i < sol.size(); ++i) CHECK(again[i] == mod(3L * sol[i], 7));
  // f^3 != id is rejected
  IndexMap bad = f;
  std::swap(bad[0], bad[1]);
  CHECK_THROWS(z3_hexagon_solve(phi, bad));
}

TEST_CASE("z3 hexagon on the hexagon map of a non-abelian group") {
  Rng rng(2);
  const auto s3 = make_group("S3");
  const IndexMap f = hexagon_map(*s3);
  CHECK(is_identity_map(iterate_map(f, 3)));
  const auto phi = NaryMap::random(rng, s3, 2, s3);
  const Report r = check_z3_hexagon(z3_hexagon_solve(phi, f), f);
  CHECK(r.passed());
  CHECK(r.points_checked == 36);
}

TEST_CASE("cycle_rep_P examples") {
  const auto s3 = make_group("S3");
  const auto c2 = cycle_rep_P(s3, 2);
  CHECK(c2.certificate.passed());
  CHECK(c2.certificate.points_checked == 36);
  CHECK(is_identity_map(iterate_map(c2.map, 3)));
  const auto z4 = make_group("Z4");
  const auto c3 = cycle_rep_P(z4, 3);
  CHECK(c3.certificate.points_checked == 64);
  CHECK(is_identity_map(iterate_map(c3.map, 4)));
  const auto c1 = cycle_rep_P(s3, 1);
  for (int x = 0; x < 6; ++x) CHECK(c1.map[static_cast<std::size_t>(x)] == static_cast<std::size_t>(s3->inv(x)));
  CHECK(is_identity_map(iterate_map(c1.map, 2)));
}

TEST_CASE("P and its iterates on Z_m against integer formulas, n <= 4") {
  for (int m : {3, 4}) {
    const auto g = make_group("Z" + std::to_string(m));
    for (int n = 1; n <= 4; ++n) {
      const IndexMap p = cycle_map(*g, n);
      std::vector<IndexMap> pw{iterate_map(p, 0)};
      for (int k = 1; k <= n + 1; ++k) pw.push_back(compose_maps(p, pw.back()));
      const auto all = tabulate(m, n, [](const std::vector<int>&) { return 0; });
      for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<int> x(static_cast<std::size_t>(n));
        std::size_t r = i;
        for (int k = n - 1; k >= 0; --k) {
          x[static_cast<std::size_t>(k)] = static_cast<int>(r % static_cast<std::size_t>(m));
          r /= static_cast<std::size_t>(m);
        }
        const int c = -std::accumulate(x.begin(), x.end(), 0);
        auto X = [&](int k) { return x[static_cast<std::size_t>(k - 1)]; };
        std::vector<int> y{c};
        for (int k = 3; k <= n; ++k) y.push_back(X(k));
        if (n >= 2) y.push_back(X(1));
        CHECK(p[i] == index_of(m, y));
        CHECK(pw[static_cast<std::size_t>(n + 1)][i] == i);
        // closed forms: P^2 = (x2, x4..xn, x1, c), P^l = (x_l, x_{l+2}..x_n, x1, c, x2..x_{l-1}),
        // P^n = (xn, c, x2..x_{n-1})
        if (n >= 3) {
          std::vector<int> y2{X(2)};
          for (int k = 4; k <= n; ++k) y2.push_back(X(k));
          y2.push_back(X(1));
          y2.push_back(c);
          CHECK(pw[2][i] == index_of(m, y2));
        }
        for (int l = 3; l <= n - 1; ++l) {
          std::vector<int> yl{X(l)};
          for (int k = l + 2; k <= n; ++k) yl.push_back(X(k));
          yl.push_back(X(1));
          yl.push_back(c);
          for (int k = 2; k <= l - 1; ++k) yl.push_back(X(k));
          CHECK(pw[static_cast<std::size_t>(l)][i] == index_of(m, yl));
        }
        if (n >= 2) {
          std::vector<int> yn{X(n), c};
          for (int k = 2; k <= n - 1; ++k) yn.push_back(X(k));
          CHECK(pw[static_cast<std::size_t>(n)][i] == index_of(m, yn));
        }
      }
      CHECK(check_cycle_map(g, n).passed());
    }
  }
  for (int n = 1; n <= 4; ++n) CHECK(check_cycle_map(make_group("S3"), n).passed());
}

TEST_CASE("nary_hexagon_solve examples") {
  Rng rng(3);
  // n = 1: phi(x) - phi(-x) is odd
  const auto z5 = make_group("Z5");
  const auto phi1 = NaryMap::random(rng, z5, 1, z5);
  const auto s1 = nary_hexagon_solve(phi1, Symmetry::kSymmetric);
  for (int x = 0; x < 5; ++x) {
    const int h = s1.hexagon[static_cast<std::size_t>(x)];
    CHECK(h == mod(phi1[static_cast<std::size_t>(x)] - phi1[static_cast<std::size_t>(mod(-x, 5))], 5));
    CHECK(s1.hexagon[static_cast<std::size_t>(mod(-x, 5))] == mod(-h, 5));
  }
  CHECK(check_nary_hexagon(s1).passed());
  // n = 2 on Z5, symmetric
  const auto phi2 = NaryMap::random_with(rng, Symmetry::kSymmetric, z5, 2, z5);
  const Report r2 = check_nary_hexagon(nary_hexagon_solve(phi2, Symmetry::kSymmetric));
  CHECK(r2.passed());
  CHECK(r2.points_checked == 25);
  // n = 3, Z3 -> Z9, skew
  const auto phi3 = NaryMap::random_with(rng, Symmetry::kSkew, make_group("Z3"), 3, make_group("Z9"));
  const Report r3 = check_nary_hexagon(nary_hexagon_solve(phi3, Symmetry::kSkew));
  CHECK(r3.passed());
  CHECK(r3.points_checked == 27);
  // unverified symmetry flag is rejected
  const auto any = NaryMap::random(rng, z5, 2, z5);
  CHECK_THROWS_AS(nary_hexagon_solve(any, Symmetry::kSymmetric), std::invalid_argument);
  CHECK_THROWS_AS(nary_hexagon_solve(NaryMap::constant(make_group("S3"), 2, z5, 0), Symmetry::kSymmetric),
                  std::invalid_argument);
}

TEST_CASE("n-ary hexagon: hand-written n = 2 formulas") {
  Rng rng(4);
  const int m = 5;
  const auto z5 = make_group("Z5");
  const auto phi = NaryMap::random_with(rng, Symmetry::kSymmetric, z5, 2, z5);
  const auto sol = nary_hexagon_solve(phi, Symmetry::kSymmetric);
  auto F = [&](int x, int y) { return phi[index_of(m, {x, y})]; };
  const auto want_hex = tabulate(m, 2, [&](const std::vector<int>& v) {
    const int x = v[0], y = v[1];
    return mod(2L * F(x, y) - F(-x - y, y) - F(x, -x - y), m);
  });
  const auto want_anti = tabulate(m, 2, [&](const std::vector<int>& v) {
    const int x = v[0], y = v[1];
    return mod(F(x, y) + F(-x - y, y) + F(x, -x - y), m);
  });
  CHECK(sol.hexagon.values() == want_hex);
  CHECK(sol.antihexagon.values() == want_anti);
  // symmetric n = 2 hexagon: phi(x,y) + phi(y,-x-y) + phi(-x-y,x) = 0
  auto H = [&](int x, int y) { return sol.hexagon[index_of(m, {x, y})]; };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) CHECK(mod(H(x, y) + H(y, -x - y) + H(-x - y, x), m) == 0);
}

TEST_CASE("n-ary hexagon sweep over n in {1,2,3} on Z3 and Z5") {
  Rng rng(5);
  for (const char* g : {"Z3", "Z5"})
    for (int n = 1; n <= 3; ++n)
      for (Symmetry s : {Symmetry::kSymmetric, Symmetry::kSkew}) {
        const auto G = make_group(g);
        const auto phi = NaryMap::random_with(rng, s, G, n, G);
        CHECK(check_nary_hexagon(nary_hexagon_solve(phi, s)).passed());
      }
}

TEST_CASE("coefficient_solve examples") {
  Rng rng(6);
  const auto z5 = make_group("Z5");
  const auto phi = NaryMap::random(rng, z5, 2, z5);
  const std::vector<long> tele{1, -1, 0};
  CHECK(check_cyclic_sum(coefficient_solve(phi, tele)).passed());
  const std::vector<long> prop3{2, -1, -1};
  const auto c = coefficient_solve(phi, prop3);
  CHECK(check_cyclic_sum(c).passed());
  const IndexMap p = cycle_map(*z5, 2);
  for (std::size_t i = 0; i < phi.size(); ++i)
    CHECK(c[i] == mod(2L * phi[i] - phi[p[i]] - phi[p[p[i]]], 5));
  const std::vector<long> zero{0, 0, 0};
  for (int v : std::vector<int>(coefficient_solve(phi, zero).values())) CHECK(v == 0);
  const std::vector<long> bad{1, 1, 0};
  CHECK_THROWS_AS(coefficient_solve(phi, bad), std::invalid_argument);
  for (int t = 0; t < 10; ++t) {
    std::vector<long> a{rng.below(11) - 5L, rng.below(11) - 5L, 0};
    a[2] = -a[0] - a[1];
    CHECK(check_cyclic_sum(coefficient_solve(NaryMap::random(rng, z5, 2, z5), a)).passed());
  }
}

TEST_CASE("skew, parity and inverse parity solutions") {
  Rng rng(7);
  const auto s3 = make_group("S3");
  const auto z6 = make_group("Z6");
  // symmetric phi into an abelian target gives the trivial skew solution
  const auto sym = NaryMap::random_with(rng, Symmetry::kSymmetric, z6, 2, z6);
  for (int v : std::vector<int>(skew_solve(sym).values())) CHECK(v == 0);
  const auto phi = NaryMap::random(rng, s3, 2, s3);
  CHECK(check_group_skew(skew_solve(phi)).passed());
  CHECK(check_group_skew(skew_solve_tilde(phi)).passed());
  // M = empty: pointwise square
  const std::vector<int> none;
  const auto sq = parity_solve(phi, none, ParityForm::kProduct);
  for (std::size_t i = 0; i < phi.size(); ++i) CHECK(sq[i] == s3->mul(phi[i], phi[i]));
  CHECK(check_parity(sq, none, ParityForm::kProduct).passed());
  // M = {1} on S3: product form into an abelian target, quotient form into S3
  const std::vector<int> one{1};
  const auto phi_ab = NaryMap::random(rng, s3, 2, z6);
  CHECK(check_parity(parity_solve(phi_ab, one, ParityForm::kProduct), one, ParityForm::kProduct).passed());
  CHECK(check_parity(parity_solve(phi, one, ParityForm::kQuotient), one, ParityForm::kQuotient).passed());
  const auto phi1 = NaryMap::random(rng, s3, 1, s3);
  CHECK(check_inverse_parity(inverse_parity_solve(phi1)).passed());
  CHECK(check_inverse_parity(inverse_parity_solve(phi1).pointwise_inverse()).passed());
}

TEST_CASE("counterexample: product-form parity map into S3 is not f^M invariant") {
  Rng rng(1);
  const auto s3 = make_group("S3");
  const std::vector<int> one{1};
  int failures = 0;
  for (int t = 0; t < 5; ++t) {
    const auto phi = NaryMap::random(rng, s3, 2, s3);
    failures += !check_parity(parity_solve(phi, one, ParityForm::kProduct), one, ParityForm::kProduct).passed();
  }
  CHECK(failures > 0);
}

TEST_CASE("pairing flags") {
  const auto r3 = ring_pairing(3);
  CHECK(r3.bihomomorphic());
  CHECK(r3.symmetric());
  CHECK_FALSE(r3.alternating());
  const auto h3 = heisenberg_pairing(3);
  CHECK(h3.bihomomorphic());
  CHECK(h3.alternating());
  CHECK(h3.skew());
  CHECK(h3.lie());
  const auto c3 = cross_pairing(3);
  CHECK(c3.lie());
  const auto z = zero_pairing(make_group("S3"));
  CHECK(z.bihomomorphic());
  CHECK(z.alternating());
  const auto comm = commutator_pairing(make_group("S3"));
  CHECK(comm.skew());
  CHECK_FALSE(comm.bihomomorphic());
  const auto& w = comm.bihomomorphism_witness();
  REQUIRE(w.size() == 3);
  const auto& g = comm.group();
  const bool left = comm(g.mul(w[0], w[1]), w[2]) == g.mul(comm(w[0], w[2]), comm(w[1], w[2]));
  const bool right = comm(w[0], g.mul(w[1], w[2])) == g.mul(comm(w[0], w[1]), comm(w[0], w[2]));
  CHECK_FALSE((left && right));
  const auto zz = z2z4_pairing();
  CHECK(zz.skew());
  CHECK(zz.bihomomorphic());
  CHECK(make_pairing("heisenberg:5").group().order() == 125);
  CHECK_THROWS(make_pairing("ring:1"));
  CHECK_THROWS(make_pairing("nonsense"));
}

TEST_CASE("pointwise bracket") {
  Rng rng(8);
  const auto p = heisenberg_pairing(3);
  const auto& gp = p.group_ptr();
  const auto a = NaryMap::random(rng, make_group("Z3"), 2, gp);
  const auto b = NaryMap::random(rng, make_group("Z3"), 2, gp);
  const auto c = NaryMap::random(rng, make_group("Z3"), 2, gp);
  for (int v : std::vector<int>(pointwise_bracket(a, a, p).values())) CHECK(v == gp->identity());
  const auto lhs = pointwise_bracket(pointwise_mul(a, b), c, p);
  const auto rhs = pointwise_mul(pointwise_bracket(a, c, p), pointwise_bracket(b, c, p));
  CHECK(lhs == rhs);
  const auto lhs2 = pointwise_bracket(c, pointwise_mul(a, b), p);
  const auto rhs2 = pointwise_mul(pointwise_bracket(c, a, p), pointwise_bracket(c, b, p));
  CHECK(lhs2 == rhs2);
}

TEST_CASE("diff_1d against the hand-written n = 2 formula on Z3") {
  Rng rng(9);
  const int m = 3;
  const auto p = ring_pairing(m);
  const auto& gp = p.group_ptr();
  for (Symmetry s : {Symmetry::kSymmetric, Symmetry::kNone}) {
    const auto psi = NaryMap::random_with(rng, s, gp, 2, gp);
    auto F = [&](int x, int y) { return psi[index_of(m, {x, y})]; };
    const auto want = tabulate(m, 2, [&](const std::vector<int>& v) {
      const int x = v[0], y = v[1];
      return mod(static_cast<long>(x + y) * (F(x, y) + F(-x - y, x) + F(y, -x - y)), m);
    });
    CHECK(diff_1d(psi, p).values() == want);
    const auto d = diff_1d(psi, p);
    for (int v : std::vector<int>(diff_1d(d, p).values())) CHECK(v == 0);
  }
  for (int v : std::vector<int>(diff_1d(NaryMap::constant(gp, 2, gp, 0), p).values())) CHECK(v == 0);
}

TEST_CASE("diff_1d square zero sweeps") {
  Rng rng(10);
  for (const auto& [spec, n] : std::vector<std::pair<const char*, int>>{
           {"ring:3", 2}, {"ring:3", 3}, {"ring:5", 2}, {"ring:5", 3}, {"heisenberg:3", 2}}) {
    const auto p = make_pairing(spec);
    const auto& gp = p.group_ptr();
    for (Symmetry s : {Symmetry::kSymmetric, Symmetry::kSkew, Symmetry::kNone}) {
      CAPTURE(spec);
      CAPTURE(n);
      const auto psi = NaryMap::random_with(rng, s, gp, n, gp);
      const Report r = check_diff_1d(psi, p);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("diff_1d slot formula equals iterate formula for symmetric psi on Z5, n = 3") {
  Rng rng(11);
  const auto p = ring_pairing(5);
  const auto& gp = p.group_ptr();
  const auto psi = NaryMap::random_with(rng, Symmetry::kSymmetric, gp, 3, gp);
  CHECK(diff_1d(psi, p) == diff_1d_slots(psi, p));
}

TEST_CASE("diff_1d is additive, diff_2d is not") {
  Rng rng(12);
  const auto p = ring_pairing(5);
  const auto& gp = p.group_ptr();
  const auto a = NaryMap::random(rng, gp, 2, gp);
  const auto b = NaryMap::random(rng, gp, 2, gp);
  CHECK(diff_1d(pointwise_mul(a, b), p) == pointwise_mul(diff_1d(a, p), diff_1d(b, p)));
  const auto h = heisenberg_pairing(3);
  const auto& hg = h.group_ptr();
  bool nonlinear = false;
  for (int t = 0; t < 5 && !nonlinear; ++t) {
    const auto u = NaryMap::random(rng, hg, 2, hg);
    const auto v = NaryMap::random(rng, hg, 2, hg);
    nonlinear = !(diff_2d(pointwise_mul(u, v), h) == pointwise_mul(diff_2d(u, h), diff_2d(v, h)));
  }
  CHECK(nonlinear);
  CHECK_THROWS_AS(diff_1d(a, commutator_pairing(make_group("S3"))), std::invalid_argument);
}

TEST_CASE("diff_2d examples") {
  Rng rng(13);
  const auto h = heisenberg_pairing(3);
  const auto& gp = h.group_ptr();
  for (int v : std::vector<int>(diff_2d(NaryMap::constant(gp, 2, gp, 5), h).values())) CHECK(v == gp->identity());
  for (int t = 0; t < 3; ++t) {
    const Report r = check_diff_2d(NaryMap::random(rng, gp, 2, gp), h);
    CHECK(r.passed());
    CHECK(r.points_checked == 27 * 27);
  }
  // exponent-3 groups are accepted without alternation
  CHECK(check_diff_2d(NaryMap::random(rng, make_group("Z3"), 2, make_group("Z3")), ring_pairing(3)).passed());
  CHECK_THROWS_AS(diff_2d(NaryMap::random(rng, make_group("Z5"), 2, make_group("Z5")), ring_pairing(5)),
                  std::invalid_argument);
}

TEST_CASE("diff_2d hand formula on Z3^3") {
  Rng rng(14);
  const auto h = heisenberg_pairing(3);
  const auto& g = h.group();
  const auto psi = NaryMap::random(rng, h.group_ptr(), 2, h.group_ptr());
  const auto d = diff_2d(psi, h);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      const int mxy = g.inv(g.mul(x, y));
      const int a = psi.at(std::vector<int>{x, y});
      const int b = psi.at(std::vector<int>{mxy, x});
      const int c = psi.at(std::vector<int>{y, mxy});
      const int want = g.mul(g.mul(h(a, b), h(b, c)), h(c, a));
      CHECK(d.at(std::vector<int>{x, y}) == want);
    }
}

TEST_CASE("counterexample: diff_2d with a non-alternating pairing") {
  Rng rng(1);
  const Report r = search_diff_2d_counterexample(ring_pairing(5), rng, 20);
  CHECK_FALSE(r.passed());
  CHECK(r.extra["trials"] == 1);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().check == "dd psi = 0");
}

TEST_CASE("diff_3d examples") {
  Rng rng(15);
  const auto p = z2z4_pairing();
  const auto& gp = p.group_ptr();
  for (int v : std::vector<int>(diff_3d(NaryMap::constant(gp, 2, gp, gp->identity()), p).values())) CHECK(v == gp->identity());
  for (int t = 0; t < 3; ++t) {
    const Report r = check_diff_3d(NaryMap::random(rng, gp, 2, gp), p);
    CHECK(r.passed());
    CHECK(r.points_checked == 64);
  }
  CHECK(check_abelian_image(p).passed());
  CHECK(check_diff_3d(NaryMap::random(rng, make_group("Z3^3"), 2, make_group("Z3^3")), heisenberg_pairing(3)).passed());
  const auto s3 = make_group("S3");
  const auto comm = commutator_pairing(s3);
  try {
    diff_3d(NaryMap::random(rng, s3, 2, s3), comm);
    FAIL("commutator pairing on S3 accepted");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("not bihomomorphic, witness") != std::string::npos);
  }
}

TEST_CASE("counterexample: diff_3d under a skew bihomomorphism that is not alternating") {
  // ring:2 is skew ([b,a] = ab = -ab mod 2) and bihomomorphic, but [1,1] = 1.
  Rng rng(1);
  const auto p = ring_pairing(2);
  CHECK(p.skew());
  CHECK(p.bihomomorphic());
  CHECK_FALSE(p.alternating());
  int failures = 0;
  for (int t = 0; t < 20; ++t)
    failures += !check_diff_3d(NaryMap::random(rng, p.group_ptr(), 2, p.group_ptr()), p).passed();
  CHECK(failures > 0);
}

TEST_CASE("Leibniz search") {
  Rng rng(1);
  const Report cross = leibniz_search(cross_pairing(3), 2, rng, 10);
  CHECK_FALSE(cross.passed());
  Rng rng2(1);
  const Report heis = leibniz_search(heisenberg_pairing(3), 2, rng2, 10);
  CHECK(heis.passed());
  // [psi, psi] vanishes pointwise for an alternating pairing
  const auto p = cross_pairing(3);
  const auto psi = NaryMap::random(rng, p.group_ptr(), 2, p.group_ptr());
  for (int v : std::vector<int>(pointwise_bracket(psi, psi, p).values())) CHECK(v == p.group().identity());
}

TEST_CASE("lab runner ids and outcomes") {
  for (const auto& id : group_lab_ids()) {
    CAPTURE(id);
    LabConfig cfg;
    const LabOutcome o = run_group_lab(id, cfg);
    if (id == "prop-2d-search") {
      CHECK_FALSE(o.ok);
    } else {
      CHECK(o.ok);
    }
  }
  LabConfig cfg;
  cfg.group = "S3";
  const auto o = run_group_lab("z3hexagon", cfg);
  CHECK(o.ok);
  CHECK(o.report.points_checked == 36);
  CHECK_THROWS_AS(run_group_lab("nope", cfg), std::invalid_argument);
}
