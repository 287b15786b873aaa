#pragma once

#include <string>
#include <vector>

#include "segal/fingroups.hpp"
#include "segal/simplicial.hpp"

namespace segal {

// Product of cyclic groups; order 0 denotes ℤ. Coordinates are kept reduced.
class AbGroup {
 public:
  using Elem = std::vector<long long>;

  AbGroup();  // trivial group
  explicit AbGroup(std::vector<long long> orders, GroupPtr group = nullptr);
  static AbGroup cyclic(long long n) { return AbGroup({n}); }
  static AbGroup free(int rank) { return AbGroup(std::vector<long long>(rank, 0)); }

  // act[g] is a square integer matrix acting on coordinate columns; must be automorphisms.
  AbGroup with_action(GroupPtr group, std::vector<std::vector<std::vector<long long>>> act) const;

  int rank() const { return static_cast<int>(orders_.size()); }
  const std::vector<long long>& orders() const { return orders_; }
  bool finite() const;
  // Number of elements; throws for infinite groups.
  Id order() const;
  const FinGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  bool trivial_action() const { return act_.empty(); }

  Elem zero() const { return Elem(orders_.size(), 0); }
  Elem generator(int i) const;
  Elem normalize(Elem a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(long long k, const Elem& a) const;
  Elem act(int g, const Elem& a) const;
  bool is_zero(const Elem& a) const;

  // Mixed-radix numbering of a finite group; the zero element is 0.
  Id index(const Elem& a) const;
  Elem element(Id i) const;

  // e.g. "Z/2 + Z", "0" for the trivial group
  std::string str() const;

 private:
  std::vector<long long> orders_;
  GroupPtr group_;
  std::vector<std::vector<std::vector<long long>>> act_;
};

// Invariant factors (ascending, ≥ 2) followed by zeros for free summands.
std::vector<long long> invariant_factors(const AbGroup& a);
bool isomorphic(const AbGroup& a, const AbGroup& b);

AbGroup direct_sum(const AbGroup& a, const AbGroup& b);

// A ⊗ B in invariant-factor form together with the universal bilinear map.
struct TensorProduct {
  AbGroup group;
  // coordinates of e_i ⊗ f_j in `group`, indexed [i][j]
  std::vector<std::vector<AbGroup::Elem>> gen_image;
  AbGroup::Elem operator()(const AbGroup::Elem& a, const AbGroup::Elem& b) const;
};
TensorProduct tensor_ab(const AbGroup& a, const AbGroup& b);

// Commutative ring structure on an abelian group, given on generators.
struct RingObject {
  AbGroup additive;
  std::vector<std::vector<AbGroup::Elem>> gen_mult;  // e_i * e_j
  AbGroup::Elem one;
  AbGroup::Elem mul(const AbGroup::Elem& a, const AbGroup::Elem& b) const;
  static RingObject integers_mod(long long n);
};

}  // namespace segal
