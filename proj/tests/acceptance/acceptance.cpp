// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Exits nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "assoc_oracle.hpp"
#include "dilog_oracle.hpp"
#include "grt/dk_pentagon.hpp"
#include "grt/five_cycle.hpp"
#include "grt/group_lab.hpp"
#include "grt/grt_ops.hpp"
#include "grt/lie_text.hpp"
#include "grt/torsor_lab.hpp"

using namespace grt;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void report(const Report& r, const std::string& what) {
    require(r.passed(), what + " (" + std::to_string(r.violation_count) + " violations)");
  }
};

// 1. projector algebra
Outcome projector_algebra() {
  Outcome o;
  const auto lie2 = FreeLie::create({"x", "y"}, 8);
  Rng rng(kSeed);
  const Report r = check_projector_algebra(lie2, rng, 100);
  o.report(r, "projector identities");
  const auto phi = random_series(lie2, rng);
  for (int k = 0; k < 20; ++k) {
    const Rational l = random_rational(rng), b = random_rational(rng);
    o.require(lambda_compose(l, b, phi) == Rational(1 + 2 * l * b) * phi + Rational(l + b + l * b) * alpha(phi),
              "composition identity at lambda=" + to_string(l) + ", beta=" + to_string(b));
  }
  o.detail = o.ok ? "100 series at degree 8, 20 (lambda, beta) pairs" : o.detail;
  return o;
}

// 2. hexagon projector correctness
Outcome hexagon_correctness() {
  Outcome o;
  const auto lie2 = FreeLie::create({"x", "y"}, 8);
  Rng rng(kSeed + 1);
  for (int i = 0; i < 100; ++i) {
    const auto phi = random_series(lie2, rng);
    o.require(hexagon_residual(hexagon_project(phi)).is_zero(), "hexagon residual of H phi");
    o.require(antihexagon_residual(antihexagon_project(phi)).is_zero(), "anti-hexagon residual of A phi");
    o.require(hexagon_project(swap_xy(phi)) == swap_xy(hexagon_project(phi)), "H commutes with swap");
  }
  if (o.ok) o.detail = "100 series at degree 8";
  return o;
}

// 3. sigma3 and the [x,y] counterpoint
Outcome sigma3_fixture() {
  Outcome o;
  const auto lie2 = FreeLie::create({"x", "y"}, 3);
  const auto s3 = parse_lie("[x,[x,y]] - [y,[y,x]]", lie2);
  const auto t4 = drinfeld_kohno(4, 3);
  o.require(skew_residual(s3).is_zero(), "sigma3 skew");
  o.require(hexagon_residual(s3).is_zero(), "sigma3 hexagon");
  o.require(drinfeld_eq3_residual(s3).is_zero(), "sigma3 eq3");
  o.require(pentagon_residual(*t4, s3).is_zero(), "sigma3 pentagon");
  const auto xy = parse_lie("[x,y]", lie2);
  o.require(pentagon_residual(*t4, xy).is_zero(), "pentagon residual of [x,y]");
  o.require(hexagon_residual(xy) == Rational(3) * xy, "hexagon residual of [x,y] = 3[x,y]");
  if (o.ok) o.detail = "all residuals exactly 0; hexagon([x,y]) = " + format_lie(hexagon_residual(xy));
  return o;
}

// 4. dimensions
Outcome dimensions() {
  Outcome o;
  for (int k : {2, 3, 6})
    for (int d = 1; d <= 10; ++d)
      o.require(count_lyndon_words(k, d) == oracle::witt(k, d),
                "Witt k=" + std::to_string(k) + " d=" + std::to_string(d));
  const auto t3 = drinfeld_kohno(3, 5);
  const auto t4 = drinfeld_kohno(4, 5);
  std::string dims4;
  for (int d = 1; d <= 5; ++d) {
    o.require(t3->dimension(d) == (d == 1 ? 1 : 0) + static_cast<int>(oracle::witt(2, d)),
              "t3 degree " + std::to_string(d));
    const int semi = (d == 1 ? 1 : 0) + static_cast<int>(oracle::witt(2, d) + oracle::witt(3, d));
    o.require(t4->dimension(d) == semi, "t4 degree " + std::to_string(d));
    dims4 += (d > 1 ? "," : "") + std::to_string(t4->dimension(d));
  }
  if (o.ok) o.detail = "Witt k in {2,3,6}, d <= 10; t4 dims (" + dims4 + ")";
  return o;
}

// 5. group lab exhaustive suites
Outcome group_suites() {
  Outcome o;
  Rng rng(kSeed + 5);
  std::uint64_t points = 0;
  auto add = [&](const Report& r, const std::string& what) {
    points += r.points_checked;
    o.report(r, what);
  };
  const auto z5 = make_group("Z5");
  const IndexMap f = hexagon_map(*z5);
  for (const char* t : {"Z6", "S3"})
    add(check_z3_hexagon(z3_hexagon_solve(NaryMap::random(rng, z5, 2, make_group(t)), f), f),
        std::string("prop-bh into ") + t);
  for (const char* g : {"Z3", "Z5"})
    for (int n = 1; n <= 3; ++n)
      for (Symmetry s : {Symmetry::kSymmetric, Symmetry::kSkew}) {
        const auto G = make_group(g);
        add(check_nary_hexagon(nary_hexagon_solve(NaryMap::random_with(rng, s, G, n, G), s)),
            std::string("prop-gh on ") + g + " n=" + std::to_string(n));
      }
  for (const char* g : {"Z4", "S3"})
    for (int n = 1; n <= 4; ++n)
      add(check_cycle_map(make_group(g), n), std::string("P on ") + g + " n=" + std::to_string(n));
  for (int k = 0; k < 10; ++k) {
    std::vector<long> a{rng.below(11) - 5L, rng.below(11) - 5L, 0};
    a[2] = -a[0] - a[1];
    add(check_cyclic_sum(coefficient_solve(NaryMap::random(rng, z5, 2, z5), a)), "coefficient solution");
  }
  const auto s3 = make_group("S3");
  const auto z6 = make_group("Z6");
  const auto phi = NaryMap::random(rng, s3, 2, s3);
  add(check_group_skew(skew_solve(phi)), "sigma_phi on S3");
  add(check_group_skew(skew_solve_tilde(phi)), "sigma~_phi on S3");
  const auto phi_ab = NaryMap::random(rng, s3, 2, z6);
  for (const std::vector<int>& m : {std::vector<int>{}, {1}, {2}, {1, 2}}) {
    add(check_parity(parity_solve(phi_ab, m, ParityForm::kProduct), m, ParityForm::kProduct), "rho^M on S3");
    add(check_parity(parity_solve(phi, m, ParityForm::kQuotient), m, ParityForm::kQuotient), "rho^M quotient on S3");
  }
  if (o.ok) o.detail = std::to_string(points) + " points, 0 violations";
  return o;
}

// 6. differential suites
Outcome differential_suites() {
  Outcome o;
  Rng rng(kSeed + 6);
  std::uint64_t points = 0;
  auto add = [&](const Report& r, const std::string& what) {
    points += r.points_checked;
    o.report(r, what);
  };
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
    const auto p = ring_pairing(m);
    const auto& gp = p.group_ptr();
    for (Symmetry s : {Symmetry::kSymmetric, Symmetry::kSkew, Symmetry::kNone})
      add(check_diff_1d(NaryMap::random_with(rng, s, gp, n, gp), p),
          "prop-1d on Z" + std::to_string(m) + " n=" + std::to_string(n));
  }
  const auto h3 = heisenberg_pairing(3);
  add(check_diff_2d(NaryMap::random(rng, h3.group_ptr(), 2, h3.group_ptr()), h3), "prop-2d on Z3^3");
  const auto zz = make_pairing("z2z4");
  o.require(zz.skew() && zz.bihomomorphic(), "z2z4 pairing flags");
  add(check_diff_3d(NaryMap::random(rng, zz.group_ptr(), 2, zz.group_ptr()), zz), "prop-3d");
  add(check_abelian_image(zz), "abelian image");
  const auto s3 = make_group("S3");
  for (const char* g : {"Z6", "S3"}) {
    const auto t = TorsorTable::from_group(make_group(g));
    const auto phi = random_ternary(rng, t, s3);
    for (GammaSign sign : {GammaSign::kMinus, GammaSign::kPlus})
      for (bool tilde : {false, true})
        add(check_gamma_equation(gamma_solve(phi, t, sign, tilde), t), std::string("gamma on ") + g);
  }
  for (const char* g : {"Z2", "Z5", "Z6", "Z2xZ2"}) {
    const auto c = check_f_maps(TorsorTable::from_group(make_group(g)));
    add(c, std::string("Klein four on ") + g);
    o.require(c.extra.value("klein_four", false), std::string("Klein four flag on ") + g);
  }
  for (const char* g : {"Z2", "Z5", "S3"}) add(check_iota(TorsorTable::from_group(make_group(g))), std::string("iota on ") + g);
  const auto t3 = TorsorTable::from_group(make_group("Z3"));
  const auto gamma = default_gamma(random_ternary(rng, t3, h3.group_ptr()), t3);
  for (GammaSign sign : {GammaSign::kMinus, GammaSign::kPlus})
    add(check_gamma_diff(gamma, random_ternary(rng, t3, h3.group_ptr()), t3, h3, sign), "gamma_diff");
  for (int k = 0; k < 5; ++k)
    add(check_modified_leibniz(gamma, random_ternary(rng, t3, h3.group_ptr()),
                               random_ternary(rng, t3, h3.group_ptr()), t3, h3),
        "modified Leibniz rule");
  if (o.ok) o.detail = std::to_string(points) + " points, 0 violations";
  return o;
}

// 7. five-cycle over F_p
Outcome five_cycle() {
  Outcome o;
  Rng rng(kSeed + 7);
  std::string census;
  for (int p : {5, 7, 11, 13, 17}) {
    const Report r = fp_cycle(p);
    o.report(r, "fp_cycle p=" + std::to_string(p));
    o.require(r.extra["fixed_points"] == r.extra["fixed_point_equation_roots"],
              "fixed points vs roots p=" + std::to_string(p));
    const long dom = r.extra["domain_size"].get<long>();
    const long fixed = r.extra["fixed_points"].get<long>();
    o.require(r.extra["orbit_census"]["5"].get<long>() * 5 + fixed == dom, "census p=" + std::to_string(p));
    o.report(check_five_project(p, 3, rng), "five_project p=" + std::to_string(p));
    census += (census.empty() ? "" : " ") + std::to_string(p) + ":" + std::to_string(fixed) + "+" +
              r.extra["orbit_census"]["5"].dump() + "x5";
  }
  if (o.ok) o.detail = "census " + census;
  return o;
}

// 8. Bloch-Wigner numerics
Outcome bloch_wigner_numerics() {
  Outcome o;
  Rng rng(kSeed + 8);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::complex<double> z(rng.uniform(-3, 3), rng.uniform(-3, 3));
    worst = std::max(worst, std::abs(dilog(z) - oracle::dilog_quadrature(z)));
  }
  o.require(worst < 1e-13, "dilog vs oracle");
  const Report sweep = bloch_wigner_sweep(10000, kSeed, 1e-10, 1e-3, 4);
  o.report(sweep, "five-term sweep");
  const double peak = bloch_wigner(std::polar(1.0, std::numbers::pi / 3));
  const double ref = oracle::bloch_wigner_oracle(std::polar(1.0, std::numbers::pi / 3));
  o.require(std::abs(peak - ref) < 1e-12, "D(e^{i pi/3})");
  std::ostringstream s;
  s.precision(3);
  s << "dilog max error " << worst << ", sweep max residual " << sweep.extra["max_residual"].get<double>()
    << ", |D(e^{i pi/3}) - oracle| " << std::abs(peak - ref);
  if (o.ok) o.detail = s.str();
  else o.detail += " (" + s.str() + ")";
  return o;
}

// Every lab, the prime-field census and a sweep, as one JSON document.
std::string full_suite_json(std::uint64_t seed) {
  nlohmann::json doc;
  LabConfig cfg;
  cfg.seed = seed;
  for (const auto& id : group_lab_ids()) doc["group"][id] = run_group_lab(id, cfg).report.to_json();
  for (const auto& id : torsor_lab_ids()) doc["torsor"][id] = run_torsor_lab(id, cfg).report.to_json();
  for (int p : {5, 7, 11, 13, 17}) {
    Rng rng(seed);
    doc["fp"][std::to_string(p)] = fp_cycle(p).to_json();
    doc["five_project"][std::to_string(p)] = check_five_project(p, 3, rng).to_json();
  }
  doc["bw"] = bloch_wigner_sweep(5000, seed, 1e-10, 1e-3, 4).to_json();
  return doc.dump(2);
}

// Runs the CLI in a child process and returns its stdout.
std::string capture(const std::string& args) {
  const std::string cmd = std::string(GRT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  if (out.empty()) throw std::runtime_error("no output from: " + args);
  return out;
}

std::string cli_suite_json(std::uint64_t seed) {
  const std::string common = "--format json --seed " + std::to_string(seed) + " ";
  std::string all;
  for (const auto& id : group_lab_ids()) all += capture(common + "lab group " + id);
  for (const auto& id : torsor_lab_ids()) all += capture(common + "lab torsor " + id);
  for (int p : {5, 7, 11, 13, 17}) all += capture(common + "fivecycle fp --prime " + std::to_string(p));
  all += capture(common + "--jobs 4 --samples 5000 fivecycle bw");
  return all;
}

// 9. determinism
Outcome determinism() {
  Outcome o;
  const std::string a = full_suite_json(kSeed);
  const std::string b = full_suite_json(kSeed);
  o.require(a == b, "in-process reports differ between runs");
  const std::string c = cli_suite_json(kSeed);
  const std::string d = cli_suite_json(kSeed);
  o.require(!c.empty() && c == d, "CLI reports differ between processes");
  if (o.ok)
    o.detail = std::to_string(a.size()) + " bytes in process and " + std::to_string(c.size()) +
               " bytes across processes identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"projector algebra", projector_algebra},
      {"hexagon projector correctness", hexagon_correctness},
      {"sigma3 fixture", sigma3_fixture},
      {"free Lie and Drinfeld-Kohno dimensions", dimensions},
      {"group lab exhaustive suites", group_suites},
      {"differential suites", differential_suites},
      {"five-cycle over F_p", five_cycle},
      {"Bloch-Wigner numerics", bloch_wigner_numerics},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << " [" << t.str() << "s]" << std::endl;
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
