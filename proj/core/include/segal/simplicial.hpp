#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segal/fingroups.hpp"

namespace segal {

using Id = std::uint32_t;  // simplex index within a level; 0 is the basepoint

// Finite based simplicial set with a G-action, stored to degree `dim()`.
// Faces d_i: X_q -> X_{q-1}, degeneracies s_i: X_q -> X_{q+1} for q < dim.
class GSimplicialSet {
 public:
  struct Level {
    Id size = 1;
    std::vector<std::vector<Id>> face;   // [i][x], empty at level 0
    std::vector<std::vector<Id>> degen;  // [i][x], empty at the top level
    std::vector<std::vector<Id>> act;    // [g][x]
  };

  GSimplicialSet() = default;
  GSimplicialSet(GroupPtr group, int dim, std::vector<Level> levels);

  using SizeFn = std::function<Id(int q)>;
  using FaceFn = std::function<Id(int q, int i, Id x)>;
  using ActFn = std::function<Id(int q, int g, Id x)>;
  // Tabulates the given structure maps. `degen(q, i, x)` lands in degree q+1.
  static GSimplicialSet from_functions(GroupPtr group, int dim, const SizeFn& size, const FaceFn& face,
                                       const FaceFn& degen, const ActFn& act);
  // Discrete: every degree equals the degree-0 set, structure maps identities.
  // `act[g][x]` gives the action on the points; only one level is stored.
  static GSimplicialSet discrete(GroupPtr group, int dim, Id size, std::vector<std::vector<Id>> act = {});
  static GSimplicialSet point(GroupPtr group, int dim);

  const GroupPtr& group_ptr() const { return group_; }
  const FinGroup& group() const { return *group_; }
  int dim() const { return dim_; }
  bool is_discrete() const { return discrete_; }

  Id size(int q) const { return lv(q).size; }
  Id face(int q, int i, Id x) const { return discrete_ ? x : levels_[q].face[i][x]; }
  Id degen(int q, int i, Id x) const { return discrete_ ? x : levels_[q].degen[i][x]; }
  Id act(int q, int g, Id x) const { return lv(q).act[g][x]; }

  // x = s_i d_i x for some i
  bool is_degenerate(int q, Id x) const;
  // Same data truncated (or, for discrete sets, extended) to degree `d`.
  GSimplicialSet with_dim(int d) const;

 private:
  const Level& lv(int q) const {
    if (q < 0 || q > dim_) throw PreconditionError("degree " + std::to_string(q) + " not stored");
    return discrete_ ? levels_[0] : levels_[q];
  }
  GroupPtr group_;
  int dim_ = 0;
  bool discrete_ = false;
  std::vector<Level> levels_;
};

// Per-degree function X_q -> Y_q.
struct SimplicialMap {
  std::vector<std::vector<Id>> level;
  Id operator()(int q, Id x) const { return level[q][x]; }
  static SimplicialMap identity(const GSimplicialSet& x);
  static SimplicialMap from_function(const GSimplicialSet& src, const std::function<Id(int q, Id x)>& f);
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// Empty optional means all identities hold; otherwise a description of the first failure.
std::optional<std::string> check_simplicial_identities(const GSimplicialSet& x);
// Based, commutes with faces, degeneracies and the G-action (up to min degree).
std::optional<std::string> check_simplicial_map(const SimplicialMap& f, const GSimplicialSet& src,
                                                const GSimplicialSet& dst);
bool is_bijective(const SimplicialMap& f, const GSimplicialSet& src, const GSimplicialSet& dst);
bool equal_maps(const SimplicialMap& f, const SimplicialMap& g, const GSimplicialSet& src);
std::optional<SimplicialMap> inverse_map(const SimplicialMap& f, const GSimplicialSet& src,
                                         const GSimplicialSet& dst);

// Nondegenerate non-basepoint simplex counts per degree.
std::vector<std::size_t> nondegenerate_counts(const GSimplicialSet& x);

// Non-basepoint pairs are numbered lexicographically: (x, y) -> 1 + (x-1)(|Y_q|-1) + (y-1).
struct SmashProduct {
  GSimplicialSet set;
  std::vector<Id> right_size;
  Id pair(int q, Id x, Id y) const {
    if (x == 0 || y == 0) return 0;
    return 1 + (x - 1) * (right_size[q] - 1) + (y - 1);
  }
  std::pair<Id, Id> split(int q, Id z) const {
    if (z == 0) return {0, 0};
    return {1 + (z - 1) / (right_size[q] - 1), 1 + (z - 1) % (right_size[q] - 1)};
  }
};
SmashProduct smash(const GSimplicialSet& x, const GSimplicialSet& y);

// X ∨ Y: X's simplices keep their ids, Y's non-basepoint y becomes |X_q| - 1 + y.
GSimplicialSet wedge(const GSimplicialSet& x, const GSimplicialSet& y);
// Disjoint basepoint: every simplex of `a` (its own basepoint included) shifts up by one.
GSimplicialSet plus(const GSimplicialSet& a);
SmashProduct half_smash(const GSimplicialSet& x, const GSimplicialSet& a);
// Δ[n]: nondecreasing sequences in {0..n}, lexicographic; index 0 is the constant 0 sequence.
GSimplicialSet standard_simplex(GroupPtr group, int n, int dim);

// Auxiliary action by a group K, perm[q][k][x], commuting with the structure maps.
struct AuxAction {
  GroupPtr group;
  std::vector<std::vector<std::vector<Id>>> perm;
};
struct OrbitQuotient {
  GSimplicialSet set;
  SimplicialMap projection;
  std::vector<std::vector<Id>> representative;  // [q][orbit] = minimal id
};
OrbitQuotient orbit_quotient(const GSimplicialSet& x, const AuxAction& k);

struct FixedPoints {
  GSimplicialSet set;  // over the trivial group
  std::vector<std::vector<Id>> inclusion;  // [q][y] = id in X
};
FixedPoints fixed_points(const GSimplicialSet& x, const std::vector<int>& subgroup);

// |V|-fold smash of Δ[1]/∂Δ[1], G permuting factors. Non-basepoint p-simplices are
// tuples (t_1..t_k), t_i ∈ 1..p counting leading zeros, numbered 1 + Σ (t_i - 1) p^{k-i}.
GSimplicialSet sphere(const GSetAction& v, int dim);
std::vector<int> sphere_coords(int k, int p, Id x);
Id sphere_id(int p, const std::vector<int>& t);

// Bisimplicial based G-set; `q` is the first (outer) direction, `p` the second.
class Bisimplicial {
 public:
  virtual ~Bisimplicial() = default;
  virtual GroupPtr group() const = 0;
  virtual Id size(int q, int p) const = 0;
  virtual Id qface(int q, int p, int i, Id x) const = 0;
  virtual Id pface(int q, int p, int i, Id x) const = 0;
  virtual Id qdegen(int q, int p, int i, Id x) const = 0;
  virtual Id pdegen(int q, int p, int i, Id x) const = 0;
  virtual Id act(int q, int p, int g, Id x) const = 0;
  virtual Id diag_face(int n, int i, Id x) const { return qface(n, n - 1, i, pface(n, n, i, x)); }
  virtual Id diag_degen(int n, int i, Id x) const { return qdegen(n, n + 1, i, pdegen(n, n, i, x)); }
};
GSimplicialSet diagonal(const Bisimplicial& b, int dim);

// h[q][i][x]: X_q -> Y_{q+1}, 0 ≤ i ≤ q, stored for q < dim.
struct SimplicialHomotopy {
  std::vector<std::vector<std::vector<Id>>> h;
  SimplicialMap f, g;
};
std::optional<std::string> check_homotopy(const SimplicialHomotopy& h, const GSimplicialSet& src,
                                          const GSimplicialSet& dst);
inline bool is_homotopy(const SimplicialHomotopy& h, const GSimplicialSet& src, const GSimplicialSet& dst) {
  return !check_homotopy(h, src, dst).has_value();
}
SimplicialHomotopy constant_homotopy(const SimplicialMap& f, const GSimplicialSet& src, const GSimplicialSet& dst);

}  // namespace segal
