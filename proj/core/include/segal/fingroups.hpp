#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "segal/error.hpp"

namespace segal {

// Finite group on {0..order-1} with 0 the identity.
class FinGroup {
 public:
  static FinGroup trivial();
  static FinGroup cyclic(int n);
  // Permutations of {1..n} in lexicographic order of their image arrays.
  static FinGroup symmetric(int n);
  // (a, b) is element a * |H| + b.
  static FinGroup product(const FinGroup& g, const FinGroup& h);
  // Validates closure, identity 0, inverses and associativity.
  static FinGroup from_table(std::vector<std::vector<int>> table, std::string name = "table");

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  static constexpr int identity() { return 0; }
  const std::string& name() const { return name_; }
  bool is_trivial() const { return order_ == 1; }

  // True iff `elems` is a subgroup (contains 0, closed under products).
  bool is_subgroup(std::span<const int> elems) const;
  // Smallest subgroup containing `gens`, sorted.
  std::vector<int> closure(std::span<const int> gens) const;

  bool operator==(const FinGroup& o) const { return table_ == o.table_; }

 private:
  FinGroup(int order, std::vector<int> table, std::string name);
  int order_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FinGroup>;
GroupPtr make_group(FinGroup g);

// Bijection of {1..n}; value 0 is fixed implicitly.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return i == 0 ? 0 : image_[i - 1]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;

  // (a * b)(i) = a(b(i))
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// All permutations of {1..n} in lexicographic order.
const std::vector<Permutation>& all_permutations(int n);

// Homomorphism G -> Σ_n.
class GSetAction {
 public:
  GSetAction() = default;
  GSetAction(GroupPtr group, std::vector<Permutation> perms);
  static GSetAction trivial(GroupPtr group, int n);
  // G acting on itself by left multiplication, point i+1 <-> element i.
  static GSetAction regular(GroupPtr group);

  int size() const { return n_; }
  const FinGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Permutation& operator[](int g) const { return perms_[g]; }
  bool is_trivial() const;

  bool operator==(const GSetAction& o) const { return n_ == o.n_ && perms_ == o.perms_; }

 private:
  GroupPtr group_;
  int n_ = 0;
  std::vector<Permutation> perms_;
};

inline constexpr int kMaxArity = 15;

// Based map m -> n stored as image array over {1..m}; 0 -> 0 implicit.
class BasedMap {
 public:
  BasedMap() = default;
  BasedMap(int n, std::initializer_list<int> image);
  BasedMap(int n, std::span<const int> image);
  static BasedMap identity(int n);
  static BasedMap zero(int m, int n);
  static BasedMap from_permutation(const Permutation& p);

  int source() const { return m_; }
  int target() const { return n_; }
  int operator()(int i) const { return i == 0 ? 0 : img_[i - 1]; }
  void set(int i, int v);

  bool is_zero() const;
  bool is_identity() const;
  // |φ⁻¹(j)| ≤ 1 for all j ≥ 1
  bool is_partial_injective() const;
  bool is_permutation() const;

  // 4 bits per entry; source and target are not included.
  std::uint64_t pack() const;
  static BasedMap unpack(int m, int n, std::uint64_t bits);
  std::string str() const;

  auto operator<=>(const BasedMap&) const = default;

 private:
  std::uint8_t m_ = 0;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxArity> img_{};
};

// psi ∘ phi
BasedMap compose_based(const BasedMap& psi, const BasedMap& phi);
// Lexicographic flattening: source pair (i, j) is (i-1)*n + j.
BasedMap smash_based(const BasedMap& phi, const BasedMap& psi);
inline int lex_index(int i, int j, int n) { return (i == 0 || j == 0) ? 0 : (i - 1) * n + j; }

enum class BaseCat { F, Pi, Sigma, N };
const char* to_string(BaseCat c);

// Lexicographic order on image arrays; zero map included where it is a morphism.
std::vector<BasedMap> enumerate_homs(BaseCat cat, int m, int n);
bool hom_in(BaseCat cat, const BasedMap& f);

// β(g) ∘ φ ∘ α(g)⁻¹
BasedMap conjugation_action(int g, const BasedMap& phi, const GSetAction& alpha, const GSetAction& beta);

// Subgroup of G × Σ_n meeting {e} × Σ_n trivially.
struct GraphSubgroup {
  int n = 0;
  std::vector<std::pair<int, Permutation>> elements;  // sorted
  int order() const { return static_cast<int>(elements.size()); }
  bool operator==(const GraphSubgroup&) const = default;
};

inline constexpr long kMaxAmbientOrder = 40320;

std::vector<GraphSubgroup> graph_subgroups(const FinGroup& g, int n);

}  // namespace segal
