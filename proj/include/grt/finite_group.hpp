#pragma once

#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grt/report.hpp"

namespace grt {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A finite group given by its Cayley table. Construction validates
// closure, associativity, identity and inverses over the whole table.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<int> table);

  static FiniteGroup cyclic(int m);
  static FiniteGroup symmetric(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  // "Z6", "S3", "Z2xZ3", "Z3^3", "S3xZ2"; factors are combined left to right.
  static FiniteGroup from_spec(std::string_view spec);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  bool abelian() const { return abelian_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  // a^k for any integer k (k-fold sum in additive notation).
  int pow(int a, long k) const;
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Largest element order; 3 means every element satisfies 3a = 0.
  int exponent() const;

  // Moduli of the cyclic factors when the group was built as a product of
  // cyclic groups (element index = mixed radix, first factor most
  // significant); empty otherwise.
  const std::vector<int>& cyclic_factors() const { return cyclic_factors_; }
  std::vector<int> coordinates(int a) const;
  int from_coordinates(std::span<const int> coords) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> cyclic_factors_;
  int order_ = 0;
  int identity_ = 0;
  bool abelian_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::string_view spec);

// Symmetry type of an n-ary map between abelian groups.
enum class Symmetry { kNone, kSymmetric, kSkew };

// A table-backed map D^n -> G where D is a finite set of size `base`,
// optionally the underlying set of a group. Tuples are indexed in mixed radix
// with the first argument most significant.
class NaryMap {
 public:
  NaryMap(GroupPtr source, int arity, GroupPtr target, std::vector<int> values);
  NaryMap(int base, int arity, GroupPtr target, std::vector<int> values);

  static NaryMap constant(GroupPtr source, int arity, GroupPtr target, int value);
  static NaryMap random(Rng& rng, GroupPtr source, int arity, GroupPtr target);
  static NaryMap random(Rng& rng, int base, int arity, GroupPtr target);
  // Symmetric / skew maps between abelian groups. Skew maps send tuples with
  // a repeated entry to 0.
  static NaryMap random_with(Rng& rng, Symmetry sym, GroupPtr source, int arity, GroupPtr target);

  int base() const { return base_; }
  int arity() const { return arity_; }
  std::size_t size() const { return values_.size(); }
  const GroupPtr& source() const { return source_; }
  const FiniteGroup& target() const { return *target_; }
  const GroupPtr& target_ptr() const { return target_; }
  const std::vector<int>& values() const { return values_; }

  int operator[](std::size_t index) const { return values_[index]; }
  int at(std::span<const int> args) const { return values_[encode(args)]; }
  std::size_t encode(std::span<const int> args) const;
  std::vector<int> decode(std::size_t index) const;

  // Labels of the tuple at `index`, for reports.
  std::vector<std::string> point_labels(std::size_t index) const;

  // Pointwise group operations in the target.
  NaryMap pointwise_inverse() const;
  friend NaryMap pointwise_mul(const NaryMap& a, const NaryMap& b);
  friend bool operator==(const NaryMap& a, const NaryMap& b) {
    return a.base_ == b.base_ && a.arity_ == b.arity_ && a.values_ == b.values_;
  }

  // Precomposition with a self-map of D^n given as an index table.
  NaryMap compose(std::span<const std::size_t> self_map) const;

 private:
  GroupPtr source_;
  int base_;
  int arity_;
  GroupPtr target_;
  std::vector<int> values_;
};

NaryMap pointwise_mul(const NaryMap& a, const NaryMap& b);

// Exhaustive check of phi(x_s(1),..,x_s(n)) = (+-)^sign(s) phi(x_1,..,x_n)
// using adjacent transpositions. Requires an abelian target for kSkew.
Report check_symmetry(const NaryMap& phi, Symmetry sym);

// A binary operation [.,.] : G x G -> G with exhaustively validated flags.
class BinaryPairing {
 public:
  BinaryPairing(std::string name, GroupPtr group, std::vector<int> table);

  const std::string& name() const { return name_; }
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int operator()(int a, int b) const {
    return table_[static_cast<std::size_t>(a * group_->order() + b)];
  }

  // [ab,c] = [a,c][b,c] and [a,bc] = [a,b][a,c]
  bool bihomomorphic() const { return bihomomorphic_; }
  // [b,a] = [a,b]^{-1}
  bool skew() const { return skew_; }
  // [a,a] = e
  bool alternating() const { return alternating_; }
  // [a,b] = [b,a]
  bool symmetric() const { return symmetric_; }
  // abelian group, bihomomorphic, alternating and Jacobi
  bool lie() const { return lie_; }
  // A witness (a, b, c) of the first failing bihomomorphism identity.
  const std::vector<int>& bihomomorphism_witness() const { return bihom_witness_; }

 private:
  std::string name_;
  GroupPtr group_;
  std::vector<int> table_;
  bool bihomomorphic_ = false;
  bool skew_ = false;
  bool alternating_ = false;
  bool symmetric_ = false;
  bool lie_ = false;
  std::vector<int> bihom_witness_;
};

// Pairing catalog.
BinaryPairing ring_pairing(int m);            // Z_m, [a,b] = ab mod m
BinaryPairing heisenberg_pairing(int m);      // (Z_m)^3, [a,b] = (0, 0, a1 b2 - a2 b1)
BinaryPairing cross_pairing(int m);           // (Z_m)^3, cross product
BinaryPairing zero_pairing(GroupPtr group);   // [a,b] = e
BinaryPairing commutator_pairing(GroupPtr group);  // [a,b] = a b a^-1 b^-1
BinaryPairing z2z4_pairing();                 // Z2 x Z4, ((a1 b2 + a2 b1) mod 2, 0)
// "ring:5", "heisenberg:3", "cross:3", "zero:<group-spec>",
// "commutator:<group-spec>", "z2z4".
BinaryPairing make_pairing(std::string_view spec);

}  // namespace grt
