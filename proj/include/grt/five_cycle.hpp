#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "grt/report.hpp"

namespace grt {

bool is_prime(long p);

// A point of F_p^2 outside x = 0, y = 0, x = 1, y = 1, xy = 1.
struct PrimeFieldPair {
  int x = 0;
  int y = 0;
  friend bool operator==(const PrimeFieldPair&, const PrimeFieldPair&) = default;
};

// The domain of f over F_p, p >= 5 prime, in (x, y) lexicographic order.
class FpDomain {
 public:
  explicit FpDomain(int p);
  int prime() const { return p_; }
  const std::vector<PrimeFieldPair>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(int x, int y) const;
  // Position of a domain point; -1 outside the domain.
  long index_of(int x, int y) const;
  // f(x,y) = (y, (1-x)/(1-xy))
  PrimeFieldPair step(const PrimeFieldPair& q) const;
  // f as a permutation of point indices.
  const std::vector<std::size_t>& step_map() const { return step_; }
  int inverse(int a) const;

 private:
  int p_;
  std::vector<PrimeFieldPair> points_;
  std::vector<long> index_;
  std::vector<std::size_t> step_;
};

// Roots of x^2 + x - 1 in F_p, found by enumeration.
int fixed_point_equation_roots(int p);

// Closure, f^5 = id, the closed forms of f^2, f^3, f^4, and the orbit census.
// extra: {"prime", "domain_size", "orbit_census": {"1": a, "5": b},
//         "fixed_points", "fixed_point_equation_roots"}
Report fp_cycle(int p);

// (4 phi - sum_{i=1..4} phi o f^i) / 5 for phi : domain -> Z_m, gcd(m, 5) = 1.
std::vector<int> five_project(const FpDomain& d, const std::vector<int>& phi, int modulus);
// sum_{i=1..5} psi o f^i = 0 pointwise.
bool cyclic_sum_vanishes(const FpDomain& d, const std::vector<int>& psi, int modulus);
// Zero cyclic sum of the projection, idempotence, and that a map already in
// the image is returned unchanged, for a random phi.
Report check_five_project(int p, int modulus, Rng& rng);

std::complex<double> dilog(std::complex<double> z);
// D(z) = Im Li2(z) + arg(1-z) log|z|; throws std::domain_error at 0 and 1.
double bloch_wigner(std::complex<double> z);

// min(|x|, |y|, |x-1|, |y-1|, |1-xy|)
double exceptional_distance(std::complex<double> x, std::complex<double> y);

struct FiveTermResiduals {
  double five_term = 0;  // D(x)+D(y)+D((1-x)/(1-xy))+D((1-y)/(1-xy))+D(1-xy)
  double d_plus = 0;     // sum_{i=1..5} D_+ o f^i
  double d_minus = 0;    // sum_{i=1..5} D_- o f^i
  double max() const;
};
// Throws std::domain_error when (x, y) is closer than `margin` to the
// exceptional set.
FiveTermResiduals five_term_residuals(std::complex<double> x, std::complex<double> y,
                                      double margin = 1e-3);
Report five_term_check(std::complex<double> x, std::complex<double> y, double tolerance = 1e-10,
                       double margin = 1e-3);

// Seeded samples in the unit bidisk at distance >= margin from the exceptional
// set. extra: {"points", "max_residual", "seed", "tolerance", "margin"}.
Report bloch_wigner_sweep(int samples, std::uint64_t seed, double tolerance = 1e-10,
                          double margin = 1e-3, int jobs = 1);

}  // namespace grt
