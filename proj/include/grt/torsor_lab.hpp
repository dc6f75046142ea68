#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grt/finite_group.hpp"
#include "grt/group_lab.hpp"
#include "grt/report.hpp"

namespace grt {

class TorsorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A finite set with a ternary operation tau satisfying
//   tau(x,y,y) = x = tau(y,y,x)                       (reflection)
//   tau(tau(x,y,z),v,w) = tau(x,y,tau(z,v,w))         (para-associativity)
// Both are checked over the whole table at construction.
class TorsorTable {
 public:
  TorsorTable(std::string name, std::vector<std::string> labels, std::vector<int> table);

  // tau(x,y,z) = x y^-1 z
  static TorsorTable from_group(const GroupPtr& g);
  // {"name": "...", "labels": [...], "tau": [[[...]]]} with tau[x][y][z] an
  // element index, or {"group": "S3"}.
  static TorsorTable from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  int tau(int x, int y, int z) const {
    return table_[static_cast<std::size_t>((x * size_ + y) * size_ + z)];
  }
  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
  // tau(tau(x,y,z),v,w) = tau(x,tau(v,z,y),w) everywhere
  bool heap() const { return heap_; }
  // tau(x,y,z) = tau(z,y,x) everywhere
  bool abelian() const { return abelian_; }
  // The group this torsor was built from, if any; used for labels.
  const GroupPtr& group() const { return group_; }

  // x .' z = tau(x, e', z)
  FiniteGroup basepoint_group(int e) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
  GroupPtr group_;
  int size_ = 0;
  bool heap_ = false;
  bool abelian_ = false;
};

// Axioms, recomputed over X^2 and X^5.
Report check_torsor_axioms(const TorsorTable& t);
// Every basepoint yields a group whose torsor is t again.
Report check_basepoint_groups(const TorsorTable& t);

// f1(x,y,z) = (tau(x,y,z), z, y), f2(x,y,z) = (y, x, tau(x,y,z)),
// f3(x,y,z) = (z, tau(x,y,z), x) on X^3.
struct FMaps {
  IndexMap f1, f2, f3;
  // f1^2 = f2^2 = id, f1 f2 = f2 f1 = f3; on abelian torsors also
  // f3^2 = id, f2 f3 = f1, f1 f3 = f2.
  Report certificate;
};
// Throws std::logic_error if the certificate fails.
FMaps f_maps(const TorsorTable& t);
Report check_f_maps(const TorsorTable& t);

// Maps X^3 -> G are NaryMaps with base |X| and arity 3.
NaryMap random_ternary(Rng& rng, const TorsorTable& t, const GroupPtr& target);

enum class GammaSign { kMinus, kPlus };
// gamma^-(x) = phi(f1 x)^-1 phi(f2 x), gamma^+(x) = phi(f1 x) phi(f2 x)^-1,
// pointwise inverted when `tilde`.
NaryMap gamma_solve(const NaryMap& phi, const TorsorTable& t, GammaSign sign, bool tilde = false);
// gamma(f1 x) gamma(f2 x) = e
Report check_gamma_equation(const NaryMap& gamma, const TorsorTable& t);

// (d phi)(x) = [phi(f1 x), phi(f2 x)]. Needs a skew bihomomorphic pairing
// unless permissive.
NaryMap torsor_diff(const NaryMap& phi, const TorsorTable& t, const BinaryPairing& p,
                    bool permissive = false);
// dd phi = e and (d phi) o f1 = ((d phi) o f2)^-1.
Report check_torsor_diff(const NaryMap& phi, const TorsorTable& t, const BinaryPairing& p,
                         bool permissive = false);

// gamma = phi0 o f1 - phi0 o f2, which satisfies gamma f1 + gamma f2 = 0.
NaryMap default_gamma(const NaryMap& phi0, const TorsorTable& t);
// d^gamma phi = [gamma, phi o f1 +- phi o f2]. Needs an abelian group with a
// bihomomorphic pairing and gamma f1 + gamma f2 = 0.
NaryMap gamma_diff(const NaryMap& gamma, const NaryMap& phi, const TorsorTable& t,
                   const BinaryPairing& p, GammaSign sign);
// dd phi = 0 and (d phi) f1 +- (d phi) f2 = 0.
Report check_gamma_diff(const NaryMap& gamma, const NaryMap& phi, const TorsorTable& t,
                        const BinaryPairing& p, GammaSign sign);
// The + case modified Leibniz rule for a Lie pairing, both displayed forms
// and the expanded identity.
Report check_modified_leibniz(const NaryMap& gamma, const NaryMap& phi, const NaryMap& chi,
                              const TorsorTable& t, const BinaryPairing& p);

// iota(x,y,z) = (tau(y,x,z), x, tau(tau(y,x,z),x,y))
IndexMap iota_map(const TorsorTable& t);
// iota^3 = id and iota^2(x,y,z) = (y, tau(y,x,z), tau(y,tau(y,x,z),x)).
Report check_iota(const TorsorTable& t);

std::vector<std::string> torsor_lab_ids();
LabOutcome run_torsor_lab(std::string_view id, const LabConfig& config);

}  // namespace grt
