#include <doctest.h>

#include "assoc_oracle.hpp"
#include "grt/grt_ops.hpp"
#include "grt/lie_text.hpp"

using namespace grt;

namespace {

FreeLiePtr lie2(int d = 8) { return FreeLie::create({"x", "y"}, d); }

LieSeries P(const FreeLiePtr& a, std::string_view text) { return parse_lie(text, a); }

Rational q(long p, long r = 1) {
  Rational v(p, r);
  v.canonicalize();
  return v;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/7")) == "0");
  CHECK(to_string(parse_rational("+5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  const Rational big = parse_rational("123456789012345678901234567890/7");
  CHECK(to_string(big * 7) == "123456789012345678901234567890");
}

TEST_CASE("lyndon_basis examples") {
  const auto b1 = lyndon_basis(2, 1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == Word{0});
  CHECK(b1[1] == Word{1});
  const auto b2 = lyndon_basis(2, 2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == Word{0, 1});
  CHECK(lyndon_basis(2, 5).size() == 6);
  CHECK_THROWS(lyndon_basis(2, 0));
}

TEST_CASE("lyndon_basis is sorted, complete and consists of Lyndon words") {
  for (int k : {1, 2, 3, 4})
    for (int d = 1; d <= 7; ++d) {
      const auto basis = lyndon_basis(k, d);
      CHECK(std::is_sorted(basis.begin(), basis.end()));
      for (const auto& w : basis) {
        CHECK(oracle::brute_lyndon(w));
        CHECK(is_lyndon(w));
        if (w.size() >= 2) {
          const std::size_t s = standard_split(w);
          CHECK(s == oracle::brute_split(w));
          const Word u(w.begin(), w.begin() + static_cast<long>(s));
          const Word v(w.begin() + static_cast<long>(s), w.end());
          CHECK(u < v);
        }
      }
      CHECK(basis.size() == oracle::brute_lyndon_count(k, d));
    }
}

TEST_CASE("Witt dimensions for k in {2,3,6}, d <= 10") {
  for (int k : {2, 3, 6})
    for (int d = 1; d <= 10; ++d) {
      CAPTURE(k);
      CAPTURE(d);
      CHECK(count_lyndon_words(k, d) == oracle::witt(k, d));
      CHECK(witt_dimension(k, d) == oracle::witt(k, d));
      if (std::pow(k, d) <= 2e5) CHECK(oracle::brute_lyndon_count(k, d) == oracle::witt(k, d));
    }
}

TEST_CASE("bracket examples") {
  const auto a = lie2();
  const auto x = LieSeries::generator(a, "x");
  const auto y = LieSeries::generator(a, "y");
  CHECK(bracket(x, x).is_zero());
  CHECK(bracket(x, y) == LieSeries::basis_element(a, Word{0, 1}));
  CHECK(bracket(bracket(x, y), x) == -P(a, "[x,[x,y]]"));
  CHECK(format_lie(bracket(bracket(x, y), x)) == "-[x,[x,y]]");
}

TEST_CASE("basis brackets agree with the associative model") {
  for (int k : {2, 3}) {
    const auto a = FreeLie::create(k == 2 ? std::vector<std::string>{"x", "y"}
                                          : std::vector<std::string>{"a", "b", "c"},
                                   k == 2 ? 8 : 6);
    oracle::Model model(a);
    std::vector<Word> words;
    for (int d = 1; d < a->max_degree(); ++d)
      for (const auto& w : lyndon_basis(k, d)) words.push_back(w);
    for (const auto& u : words)
      for (const auto& v : words) {
        if (static_cast<int>(u.size() + v.size()) > a->max_degree()) continue;
        const auto pu = LieSeries::basis_element(a, u);
        const auto pv = LieSeries::basis_element(a, v);
        CAPTURE(a->word_string(u));
        CAPTURE(a->word_string(v));
        CHECK(bracket(pu, pv) == model.bracket(pu, pv));
      }
  }
}

TEST_CASE("random brackets agree with the associative model") {
  const auto a = lie2(7);
  oracle::Model model(a);
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const auto s = random_series(a, rng);
    const auto t = random_series(a, rng);
    CHECK(bracket(s, t) == model.bracket(s, t));
  }
}

TEST_CASE("antisymmetry, Jacobi and bilinearity up to degree 8") {
  const auto a = lie2(8);
  Rng rng(5);
  for (int i = 0; i < 12; ++i) {
    const auto r = random_series(a, rng);
    const auto s = random_series(a, rng);
    const auto t = random_series(a, rng);
    const Rational c = random_rational(rng);
    CHECK(bracket(r, s) == -bracket(s, r));
    CHECK((bracket(r, bracket(s, t)) + bracket(s, bracket(t, r)) + bracket(t, bracket(r, s)))
              .is_zero());
    CHECK(bracket(r + c * s, t) == bracket(r, t) + c * bracket(s, t));
    CHECK(bracket(t, r + c * s) == bracket(t, r) + c * bracket(t, s));
  }
}

TEST_CASE("truncation drops high degrees and mismatches are errors") {
  const auto a = lie2(3);
  CHECK(bracket(P(a, "[x,[x,y]]"), P(a, "x")).is_zero());
  CHECK(bracket(P(a, "[x,y]"), P(a, "y")) == P(a, "[[x,y],y]"));
  const auto b = lie2(4);
  CHECK_THROWS_AS(bracket(P(a, "x"), P(b, "x")), MismatchError);
  CHECK_THROWS_AS(add(P(a, "x"), P(b, "x")), MismatchError);
  const auto c = FreeLie::create({"y", "x"}, 3);
  CHECK_THROWS_AS(bracket(P(a, "x"), P(c, "x")), MismatchError);
}

TEST_CASE("substitute examples") {
  const auto a = lie2(6);
  const auto x = P(a, "x"), y = P(a, "y");
  const auto mxy = -(x + y);
  CHECK(substitute(P(a, "[x,y]"), std::vector<LieSeries>{y, mxy}) == P(a, "[x,y]"));
  CHECK(substitute(x, std::vector<LieSeries>{x, y}) == x);
  CHECK(substitute(P(a, "[x,[x,y]]"), std::vector<LieSeries>{x + y, -x}) == P(a, "[x,[x,y]] + [y,[x,y]]"));
  CHECK_THROWS_AS(substitute(x, std::vector<LieSeries>{x}), MismatchError);
  CHECK_THROWS_AS(substitute(x, std::map<std::string, LieSeries>{{"y", y}}), MismatchError);
}

TEST_CASE("substitute is linear and permutations compose") {
  const auto a = FreeLie::create({"a", "b", "c"}, 6);
  const std::vector<LieSeries> g{P(a, "a"), P(a, "b"), P(a, "c")};
  const std::vector<std::vector<int>> perms{{1, 2, 0}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  Rng rng(3);
  for (int i = 0; i < 6; ++i) {
    const auto s = random_series(a, rng, 1);
    const auto t = random_series(a, rng, 1);
    const Rational c = random_rational(rng);
    for (const auto& sp : perms)
      for (const auto& tp : perms) {
        std::vector<LieSeries> sig, tau, comp;
        for (int j = 0; j < 3; ++j) {
          sig.push_back(g[static_cast<std::size_t>(sp[static_cast<std::size_t>(j)])]);
          tau.push_back(g[static_cast<std::size_t>(tp[static_cast<std::size_t>(j)])]);
        }
        // subst(sig) o subst(tau) sends letter j to subst(sig)(tau_j)
        for (int j = 0; j < 3; ++j) comp.push_back(substitute(tau[static_cast<std::size_t>(j)], sig));
        CHECK(substitute(substitute(s, tau), sig) == substitute(s, comp));
      }
    const std::vector<LieSeries> images{random_series(a, rng, 1), P(a, "[a,b]"), P(a, "c - a")};
    CHECK(substitute(s + c * t, images) == substitute(s, images) + c * substitute(t, images));
  }
}

TEST_CASE("parse and format examples") {
  const auto a = lie2(6);
  const auto s = P(a, "[x,[x,y]] - [y,[y,x]]");
  CHECK(s.terms().size() == 2);
  for (const auto& [w, c] : s.terms()) CHECK(abs(c) == 1);
  CHECK(P(a, "[x,x]").is_zero());
  const auto t = P(a, "1/3 [y,x]");
  CHECK(t.coefficient(Word{0, 1}) == q(-1, 3));
  CHECK(format_lie(t) == "-1/3 [x,y]");
  CHECK(format_lie(LieSeries(a)) == "0");
  CHECK(P(a, "2*(x + y) - 2 y") == 2 * P(a, "x"));
  CHECK(P(a, "0") .is_zero());
  CHECK(P(a, "-x + 0") == -P(a, "x"));
}

TEST_CASE("parse errors") {
  const auto a = lie2(3);
  CHECK_THROWS_AS(P(a, "[x,y"), ParseError);
  CHECK_THROWS_AS(P(a, "z"), ParseError);
  CHECK_THROWS_AS(P(a, "[x,[x,[x,y]]]"), ParseError);  // degree 4 > 3
  CHECK_THROWS_AS(P(a, "x +"), ParseError);
  CHECK_THROWS_AS(P(a, "3"), ParseError);
  CHECK_THROWS_AS(P(a, "1/0 x"), ParseError);
  try {
    P(a, "[x,,y]");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("parse(format(s)) = s and JSON round trip") {
  const auto a = FreeLie::create({"x", "y", "z"}, 5);
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto s = random_series(a, rng);
    CHECK(parse_lie(format_lie(s), a) == s);
    CHECK(lie_from_json(to_json(s)) == s);
  }
  const auto j = to_json(P(lie2(4), "1/3 [y,x]"));
  CHECK(j.dump() ==
        R"({"alphabet":["x","y"],"max_degree":4,"terms":[{"coeff":"-1/3","word":"xy"}]})");
}

TEST_CASE("add, scale, homogeneous_component, equals") {
  const auto a = lie2(4);
  CHECK(add(P(a, "x"), P(a, "-x")).is_zero());
  CHECK(homogeneous_component(P(a, "[x,y] + [x,[x,y]]"), 3) == P(a, "[x,[x,y]]"));
  CHECK(scale(q(2, 3), P(a, "3 [x,y]")) == P(a, "2 [x,y]"));
  CHECK(equals(P(a, "[x,y]"), P(a, "-[y,x]")));
  CHECK_THROWS_AS(equals(P(a, "x"), P(lie2(5), "x")), MismatchError);
}
