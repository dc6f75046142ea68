#include "grt/five_cycle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace grt {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FpDomain::FpDomain(int p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("five-cycle: " + std::to_string(p) + " is not prime");
  if (p < 5) throw std::invalid_argument("five-cycle: the domain over F_p is empty for p < 5");
  if (p > 4093) throw std::invalid_argument("five-cycle: prime too large");
  index_.assign(static_cast<std::size_t>(p) * p, -1);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      if (x != 0 && y != 0 && x != 1 && y != 1 && (x * y) % p != 1) {
        index_[static_cast<std::size_t>(x * p + y)] = static_cast<long>(points_.size());
        points_.push_back({x, y});
      }
  step_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto q = step(points_[i]);
    const long j = index_of(q.x, q.y);
    if (j < 0) throw std::logic_error("five-cycle: f leaves the domain");
    step_[i] = static_cast<std::size_t>(j);
  }
}

bool FpDomain::contains(int x, int y) const { return index_of(x, y) >= 0; }

long FpDomain::index_of(int x, int y) const {
  if (x < 0 || y < 0 || x >= p_ || y >= p_) return -1;
  return index_[static_cast<std::size_t>(x * p_ + y)];
}

int FpDomain::inverse(int a) const {
  // a^(p-2)
  long r = 1, b = a % p_, e = p_ - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<int>(r);
}

PrimeFieldPair FpDomain::step(const PrimeFieldPair& q) const {
  const int one_minus_xy = ((1 - q.x * q.y) % p_ + p_) % p_;
  const int one_minus_x = ((1 - q.x) % p_ + p_) % p_;
  return {q.y, static_cast<int>(static_cast<long>(one_minus_x) * inverse(one_minus_xy) % p_)};
}

int fixed_point_equation_roots(int p) {
  int count = 0;
  for (long x = 0; x < p; ++x)
    if ((x * x + x - 1 + p) % p == 0) ++count;
  return count;
}

Report fp_cycle(int p) {
  const FpDomain d(p);
  Report r;
  r.construction = "five-cycle";
  r.group = "F" + std::to_string(p);
  r.arity = 2;
  auto mod = [p](long v) { return static_cast<int>(((v % p) + p) % p); };
  auto div = [&](long a, long b) { return mod(mod(a) * static_cast<long>(d.inverse(mod(b)))); };
  auto label = [](const PrimeFieldPair& q) {
    return std::vector<std::string>{std::to_string(q.x), std::to_string(q.y)};
  };

  long fixed = 0, five = 0;
  std::vector<bool> seen(d.size(), false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    ++r.points_checked;
    const auto q = d.points()[i];
    const long x = q.x, y = q.y;
    // Closure is checked for the raw formula, independently of step_map.
    const auto fq = d.step(q);
    if (!d.contains(fq.x, fq.y)) r.record({"f maps the domain into itself", label(q), ""});
    std::array<PrimeFieldPair, 6> it{q};
    std::size_t j = i;
    for (int k = 1; k <= 5; ++k) {
      j = d.step_map()[j];
      it[static_cast<std::size_t>(k)] = d.points()[j];
    }
    if (!(it[5] == q)) r.record({"f^5 = id", label(q), ""});
    const int w = mod(1 - x * y);
    if (!(it[2] == PrimeFieldPair{div(1 - x, w), w})) r.record({"f^2 closed form", label(q), ""});
    if (!(it[3] == PrimeFieldPair{w, div(1 - y, w)})) r.record({"f^3 closed form", label(q), ""});
    if (!(it[4] == PrimeFieldPair{div(1 - y, w), static_cast<int>(x)}))
      r.record({"f^4 closed form", label(q), ""});

    if (seen[i]) continue;
    int size = 0;
    std::size_t k = i;
    do {
      seen[k] = true;
      k = d.step_map()[k];
      ++size;
    } while (k != i && size <= 5);
    if (size == 1) ++fixed;
    else if (size == 5) ++five;
    else r.record({"orbit size divides 5", label(q), "orbit of size " + std::to_string(size)});
  }
  const int roots = fixed_point_equation_roots(p);
  if (fixed != roots)
    r.record({"fixed points = roots of x^2 + x - 1", {}, std::to_string(fixed) + " vs " + std::to_string(roots)});
  if (static_cast<long>(d.size()) != static_cast<long>(p - 2) * (p - 3))
    r.record({"domain size = (p-2)(p-3)", {}, std::to_string(d.size())});
  r.extra["prime"] = p;
  r.extra["domain_size"] = d.size();
  r.extra["orbit_census"] = {{"1", fixed}, {"5", five}};
  r.extra["fixed_points"] = fixed;
  r.extra["fixed_point_equation_roots"] = roots;
  return r;
}

std::vector<int> five_project(const FpDomain& d, const std::vector<int>& phi, int modulus) {
  if (modulus < 1 || std::gcd(modulus, 5) != 1)
    throw std::invalid_argument("five-term projector: 5 is not invertible mod " + std::to_string(modulus));
  if (phi.size() != d.size()) throw std::invalid_argument("five-term projector: map is not on the domain");
  int inv5 = 0;
  for (int k = 0; k < modulus; ++k)
    if ((5 * k) % modulus == 1 % modulus) inv5 = k;
  std::vector<int> out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    long acc = 4L * phi[i];
    std::size_t j = i;
    for (int k = 1; k <= 4; ++k) {
      j = d.step_map()[j];
      acc -= phi[j];
    }
    acc = ((acc % modulus) + modulus) % modulus;
    out[i] = static_cast<int>(acc * inv5 % modulus);
  }
  return out;
}

bool cyclic_sum_vanishes(const FpDomain& d, const std::vector<int>& psi, int modulus) {
  for (std::size_t i = 0; i < psi.size(); ++i) {
    long acc = 0;
    std::size_t j = i;
    for (int k = 1; k <= 5; ++k) {
      j = d.step_map()[j];
      acc += psi[j];
    }
    if (acc % modulus != 0) return false;
  }
  return true;
}

Report check_five_project(int p, int modulus, Rng& rng) {
  const FpDomain d(p);
  Report r;
  r.construction = "five-term-projector";
  r.group = "F" + std::to_string(p) + "->Z" + std::to_string(modulus);
  r.arity = 2;
  std::vector<int> phi(d.size());
  for (auto& v : phi) v = rng.below(modulus);
  const auto proj = five_project(d, phi, modulus);
  const auto twice = five_project(d, proj, modulus);
  for (std::size_t i = 0; i < d.size(); ++i) {
    ++r.points_checked;
    long acc = 0;
    std::size_t j = i;
    for (int k = 1; k <= 5; ++k) {
      j = d.step_map()[j];
      acc += proj[j];
    }
    const auto q = d.points()[i];
    const std::vector<std::string> at{std::to_string(q.x), std::to_string(q.y)};
    if (acc % modulus != 0) r.record({"sum_i (P phi) o f^i = 0", at, ""});
    if (twice[i] != proj[i]) r.record({"P^2 = P", at, ""});
  }
  r.extra["prime"] = p;
  r.extra["modulus"] = modulus;
  return r;
}

// ------------------------------------------------------------ dilogarithm

namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6;

// B_{2k} / (2k+1)! for k = 1..
const std::array<double, 24>& bernoulli_coefficients() {
  static const std::array<double, 24> c = [] {
    // Bernoulli numbers from the Akiyama-Tanigawa recurrence in long double.
    constexpr int kMax = 48;
    std::array<long double, kMax + 1> b{};
    std::array<long double, kMax + 1> a{};
    for (int m = 0; m <= kMax; ++m) {
      a[static_cast<std::size_t>(m)] = 1.0L / (m + 1);
      for (int j = m; j >= 1; --j)
        a[static_cast<std::size_t>(j - 1)] =
            j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
      b[static_cast<std::size_t>(m)] = a[0];
    }
    std::array<double, 24> out{};
    long double fact = 1.0L;  // (2k+1)!
    for (int k = 1; k <= 24; ++k) {
      fact *= static_cast<long double>(2 * k) * (2 * k + 1);
      out[static_cast<std::size_t>(k - 1)] =
          static_cast<double>(b[static_cast<std::size_t>(2 * k)] / fact);
    }
    return out;
  }();
  return c;
}

// Li2 for |z| <= 1 and Re z <= 1/2 via u = -log(1-z).
std::complex<double> dilog_core(std::complex<double> z) {
  const std::complex<double> u = -std::log(1.0 - z);
  const std::complex<double> u2 = u * u;
  std::complex<double> sum = u - u2 / 4.0;
  std::complex<double> power = u;
  for (double c : bernoulli_coefficients()) {
    power *= u2;
    const std::complex<double> term = c * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Li2 for |z| <= 1.
std::complex<double> dilog_unit(std::complex<double> z) {
  if (z.real() <= 0.5) return dilog_core(z);
  // reflection
  return kZeta2 - std::log(z) * std::log(1.0 - z) - dilog_core(1.0 - z);
}

}  // namespace

std::complex<double> dilog(std::complex<double> z) {
  if (z == 0.0) return 0.0;
  if (z == 1.0) return kZeta2;
  if (std::abs(z) <= 1.0) return dilog_unit(z);
  // inversion
  const std::complex<double> l = std::log(-z);
  return -dilog_unit(1.0 / z) - kZeta2 - 0.5 * l * l;
}

double bloch_wigner(std::complex<double> z) {
  if (z == 0.0 || z == 1.0) throw std::domain_error("Bloch-Wigner function is not evaluated at 0 and 1");
  if (z.imag() == 0.0) return 0.0;
  return dilog(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

double exceptional_distance(std::complex<double> x, std::complex<double> y) {
  return std::min({std::abs(x), std::abs(y), std::abs(x - 1.0), std::abs(y - 1.0),
                   std::abs(1.0 - x * y)});
}

double FiveTermResiduals::max() const {
  return std::max({std::abs(five_term), std::abs(d_plus), std::abs(d_minus)});
}

FiveTermResiduals five_term_residuals(std::complex<double> x, std::complex<double> y, double margin) {
  if (exceptional_distance(x, y) < margin)
    throw std::domain_error("five-term relation: point is within the margin of the exceptional set");
  using C = std::complex<double>;
  std::array<std::pair<C, C>, 5> orbit;
  C a = x, b = y;
  for (auto& q : orbit) {
    const C next = (1.0 - a) / (1.0 - a * b);
    a = b;
    b = next;
    q = {a, b};  // f^1 .. f^5
  }
  FiveTermResiduals r;
  const C w = 1.0 - x * y;
  r.five_term = bloch_wigner(x) + bloch_wigner(y) + bloch_wigner((1.0 - x) / w) +
                bloch_wigner((1.0 - y) / w) + bloch_wigner(w);
  for (const auto& [u, v] : orbit) {
    const double du = bloch_wigner(u), dv = bloch_wigner(v);
    r.d_plus += du + dv;
    r.d_minus += du - dv;
  }
  return r;
}

namespace {

std::string format_complex(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

void record_residuals(Report& r, std::complex<double> x, std::complex<double> y,
                      const FiveTermResiduals& res, double tolerance) {
  ++r.points_checked;
  auto at = [&] { return std::vector<std::string>{format_complex(x), format_complex(y)}; };
  if (!(std::abs(res.five_term) < tolerance))
    r.record({"five-term relation", at(), "residual " + std::to_string(res.five_term)});
  if (!(std::abs(res.d_plus) < tolerance))
    r.record({"sum D_+ o f^i = 0", at(), "residual " + std::to_string(res.d_plus)});
  if (!(std::abs(res.d_minus) < tolerance))
    r.record({"sum D_- o f^i = 0", at(), "residual " + std::to_string(res.d_minus)});
}

}  // namespace

Report five_term_check(std::complex<double> x, std::complex<double> y, double tolerance,
                       double margin) {
  Report r;
  r.construction = "five-term";
  r.group = "C";
  r.arity = 2;
  const auto res = five_term_residuals(x, y, margin);
  record_residuals(r, x, y, res, tolerance);
  r.extra["five_term"] = res.five_term;
  r.extra["d_plus"] = res.d_plus;
  r.extra["d_minus"] = res.d_minus;
  return r;
}

Report bloch_wigner_sweep(int samples, std::uint64_t seed, double tolerance, double margin,
                          int jobs) {
  if (samples < 1) throw std::invalid_argument("sample count must be positive");
  Rng rng(seed);
  auto disk = [&rng] {
    const double r = std::sqrt(rng.unit());
    const double t = 2 * std::numbers::pi * rng.unit();
    return std::polar(r, t);
  };
  std::vector<std::pair<std::complex<double>, std::complex<double>>> points;
  points.reserve(static_cast<std::size_t>(samples));
  while (static_cast<int>(points.size()) < samples) {
    const auto x = disk(), y = disk();
    if (exceptional_distance(x, y) >= margin) points.emplace_back(x, y);
  }

  const std::size_t n = points.size();
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, 64);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<Report> parts(workers);
  std::vector<double> worst(workers, 0.0);
  auto run = [&](std::size_t w) {
    for (std::size_t i = w * chunk; i < std::min(n, (w + 1) * chunk); ++i) {
      const auto [x, y] = points[i];
      const auto res = five_term_residuals(x, y, margin);
      worst[w] = std::max(worst[w], res.max());
      record_residuals(parts[w], x, y, res, tolerance);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  Report r;
  r.construction = "bloch-wigner";
  r.group = "C";
  r.arity = 2;
  for (const auto& part : parts) r.merge(part);
  r.extra["points"] = n;
  r.extra["max_residual"] = *std::max_element(worst.begin(), worst.end());
  r.extra["seed"] = seed;
  r.extra["tolerance"] = tolerance;
  r.extra["margin"] = margin;
  return r;
}

}  // namespace grt
