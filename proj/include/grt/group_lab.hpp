#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grt/finite_group.hpp"
#include "grt/report.hpp"

// Canonical solutions of hexagon-type symmetries over finite groups and the
// associated square-zero maps. Every construction comes with an exhaustive
// check that returns a Report instead of asserting.

namespace grt {

// A self-map of a finite domain {0..N-1}, usually G^n in NaryMap indexing.
using IndexMap = std::vector<std::size_t>;

IndexMap compose_maps(const IndexMap& outer, const IndexMap& inner);
IndexMap iterate_map(const IndexMap& f, int k);
bool is_identity_map(const IndexMap& f);

// (x, y) -> (y, (x y)^-1) on G^2; (y, -x-y) for abelian G. Satisfies f^3 = id.
IndexMap hexagon_map(const FiniteGroup& g);
// (x, y) -> (x+y, -x) on G^2 for abelian G.
IndexMap hexagon_square_root(const FiniteGroup& g);
// s o s = f at every pair.
Report check_square_root(const FiniteGroup& g);

// phi_phi = (phi o f)^-1 phi (phi o f^2)^-1 phi for f^3 = id; throws if f^3 != id.
NaryMap z3_hexagon_solve(const NaryMap& phi, const IndexMap& f);
// (phi o f) phi (phi o f^2) = e pointwise.
Report check_z3_hexagon(const NaryMap& phi, const IndexMap& f);

// P(x1..xn) = (x2^-1 ... xn^-1 x1^-1, x3, ..., xn, x1) on G^n.
struct CycleMap {
  GroupPtr group;
  int arity = 0;
  IndexMap map;
  Report certificate;  // P^(n+1) = id and the closed forms of P^2, P^l, P^n
};
// Throws std::logic_error when the certificate has violations.
CycleMap cycle_rep_P(const GroupPtr& g, int n);
IndexMap cycle_map(const FiniteGroup& g, int n);
Report check_cycle_map(const GroupPtr& g, int n);

// sum_i phi(x1, .., x_{i-1}, -sum x, x_{i+1}, .., xn)
NaryMap slot_sum(const NaryMap& phi);

struct NaryHexagonSolution {
  Symmetry symmetry;
  NaryMap hexagon;      // n phi -+ S phi
  NaryMap antihexagon;  // phi +- S phi
};
// Needs abelian source and target and phi validated symmetric or skew.
NaryHexagonSolution nary_hexagon_solve(const NaryMap& phi, Symmetry sym);
// phi +- S phi = 0 for the first map and n Phi -+ S Phi = 0 for the second.
Report check_nary_hexagon(const NaryHexagonSolution& s);

// sum_k a_k phi o P^k with sum a_k = 0 (a has n+1 entries), abelian target.
NaryMap coefficient_solve(const NaryMap& phi, std::span<const long> a);
// sum_{k=0}^{n} phi o P^k = 0 pointwise.
Report check_cyclic_sum(const NaryMap& phi);

// sigma(x,y) = phi(x,y) phi(y,x)^-1, and its pointwise inverse.
NaryMap skew_solve(const NaryMap& phi);
NaryMap skew_solve_tilde(const NaryMap& phi);
// sigma(y,x) = sigma(x,y)^-1
Report check_group_skew(const NaryMap& sigma);

// f^M inverts the slots listed in M (1-based).
enum class ParityForm {
  kProduct,   // phi(x) phi(f^M x), invariant under f^M when the target is abelian
  kQuotient,  // phi(x) phi(f^M x)^-1, inverted by f^M for any target
};
IndexMap parity_map(const FiniteGroup& g, int n, std::span<const int> slots);
NaryMap parity_solve(const NaryMap& phi, std::span<const int> slots, ParityForm form);
// rho o f^M = rho (product form) or rho o f^M = rho^-1 (quotient form).
Report check_parity(const NaryMap& rho, std::span<const int> slots, ParityForm form);

// phi(x) phi(x^-1)^-1 for phi : G -> G_t.
NaryMap inverse_parity_solve(const NaryMap& phi);
// rho(x^-1) = rho(x)^-1
Report check_inverse_parity(const NaryMap& rho);

// [psi1, psi2](x) = [psi1(x), psi2(x)]
NaryMap pointwise_bracket(const NaryMap& a, const NaryMap& b, const BinaryPairing& p);

// (d psi)(x) = [sum x, sum_{k=0}^{n} psi(f^k x)] with f = P, n >= 2.
// Needs a bihomomorphic pairing on an abelian group.
NaryMap diff_1d(const NaryMap& psi, const BinaryPairing& p);
// The variant for symmetric psi with f^k replaced by slot substitutions.
NaryMap diff_1d_slots(const NaryMap& psi, const BinaryPairing& p);
// dd psi = 0; for n = 2 also parity conservation when psi is symmetric or skew.
Report check_diff_1d(const NaryMap& psi, const BinaryPairing& p);

// d psi = [psi, psi o f] + [psi o f, psi o f~] + [psi o f~, psi] on G^2 with
// f(x,y) = (-x-y, x), f~(x,y) = (y, -x-y). Needs a bihomomorphic pairing
// that is alternating or lives on a group of exponent 3, unless permissive.
NaryMap diff_2d(const NaryMap& psi, const BinaryPairing& p, bool permissive = false);
// dd psi = 0 and (d psi) o f = d psi.
Report check_diff_2d(const NaryMap& psi, const BinaryPairing& p, bool permissive = false);
// First (pairing table order) psi : G^2 -> G, among `trials` random ones,
// whose dd psi is not zero. Empty report when none is found.
Report search_diff_2d_counterexample(const BinaryPairing& p, Rng& rng, int trials);

// d psi = [psi, (psi o f~)(psi o f)] on G^2 with f = P, f~ = P^2.
// Needs a skew bihomomorphic pairing unless permissive.
NaryMap diff_3d(const NaryMap& psi, const BinaryPairing& p, bool permissive = false);
// dd psi = e pointwise.
Report check_diff_3d(const NaryMap& psi, const BinaryPairing& p, bool permissive = false);
// [a,c][b,c] = [b,c][a,c] = [c,ab]^-1 over all triples.
Report check_abelian_image(const BinaryPairing& p);

// Random symmetric psi1, psi2 : G^n -> G tested against
// d[psi1,psi2] = [d psi1, psi2] + [psi1, d psi2]. Violations are recorded under
// the check "leibniz"; extra["trials"] holds the number of pairs tried.
Report leibniz_search(const BinaryPairing& p, int n, Rng& rng, int trials);

// Runner behind `lab group <id>`.
struct LabConfig {
  std::string group;    // source group or torsor base group spec; empty = default
  std::string target;   // target group spec; empty = default
  std::string pairing;  // pairing spec; empty = default
  std::string torsor_json;  // torsor table file, overrides `group` for torsor labs
  int arity = 0;        // 0 = default
  int max_degree = 0;   // 0 = default
  int samples = 0;      // 0 = default
  std::uint64_t seed = 1;
  bool permissive = false;
};

struct LabOutcome {
  Report report;
  bool ok = false;  // what the exit code reflects
};

std::vector<std::string> group_lab_ids();
// Throws std::invalid_argument for an unknown id or unusable configuration.
LabOutcome run_group_lab(std::string_view id, const LabConfig& config);

}  // namespace grt
