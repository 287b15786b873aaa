#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "segal/diagram.hpp"
#include "segal/kan.hpp"

namespace segal {

enum class Variant { Smash, Product };

// E = U P for the inclusion of a ground category (Σ, ℕ, Σ_G, ℕ_G) into 𝓕 or 𝓕_G.
class Monad {
 public:
  Monad(CatTag ground, CatPtr ambient, Variant variant = Variant::Smash);

  CatTag ground() const { return ground_; }
  Variant variant() const { return variant_; }
  bool symmetric() const { return base_of(ground_) == BaseCat::Sigma; }
  const IndexCategory& ambient() const { return *ambient_; }
  const CatPtr& ambient_ptr() const { return ambient_; }
  // Ambient objects that occur inside bar simplices (trivial representatives for Σ_G).
  const std::vector<int>& cell_objects() const { return cell_objects_; }
  // The object a cell object is transported to before comparison.
  int representative_object(int c) const;
  std::string name() const;

 private:
  CatTag ground_;
  CatPtr ambient_;
  Variant variant_;
  std::vector<int> cell_objects_;
};

// A q-simplex [y, f_q, ..., f_1, x]: y is a map from c_q into the outer factor,
// homs[k]: c_k -> c_{k+1}, x ∈ X(c_0).
struct BarCell {
  std::vector<int> obj;  // c_0 .. c_q
  std::vector<Id> outer;
  std::vector<BasedMap> homs;
  Id x = 0;
  int q() const { return static_cast<int>(obj.size()) - 1; }
  bool operator==(const BarCell&) const = default;
  std::string str() const;
};
using Cell = std::optional<BarCell>;  // nullopt is the basepoint

// The outer factor: either morphisms into an object d (giving B(E, E, X)(d)) or the
// sphere-module A^• with values tuples of simplices of A.
class Outer {
 public:
  static Outer hom_into(CatPtr ambient, int d);
  static Outer space(std::shared_ptr<const GSimplicialSet> a);

  bool is_hom() const { return !space_; }
  int target() const { return target_; }
  const GSimplicialSet& space() const { return *space_; }
  Id values(int p, int n_source) const;  // number of possible entries
  Id act(int p, int g, Id v) const;
  Id face(int p, int i, Id v) const { return is_hom() ? v : space_->face(p, i, v); }
  Id degen(int p, int i, Id v) const { return is_hom() ? v : space_->degen(p, i, v); }
  bool discrete() const { return is_hom() || space_->is_discrete(); }

 private:
  CatPtr ambient_;
  int target_ = -1;
  std::shared_ptr<const GSimplicialSet> space_;
};

// Simplices of B(Y, E, X) for one outer factor, with orbit canonical forms and lazily
// materialized (q, p) levels. Id 0 is the basepoint at every level.
class BarEngine {
 public:
  BarEngine(Monad monad, Diagram x, Outer outer);

  const Monad& monad() const { return monad_; }
  const Diagram& algebra() const { return x_; }
  const Outer& outer() const { return outer_; }

  bool is_base(const BarCell& c) const;
  // Transport to representative objects, then the lexicographically least cell of the orbit.
  Cell canonical(const Cell& c, int p) const;

  Cell bar_face(const BarCell& c, int i, int p) const;
  BarCell bar_degen(const BarCell& c, int i) const;
  Cell simp_face(const BarCell& c, int p, int i) const;
  BarCell simp_degen(const BarCell& c, int p, int i) const;
  BarCell act(const BarCell& c, int p, int g) const;
  // Outer extra degeneracy: inserts id_d at the outer end (hom outer only).
  BarCell extra_outer(const BarCell& c) const;

  Id size(int q, int p) const;
  const BarCell& cell(int q, int p, Id id) const;
  // Canonicalizes and looks up; throws if the cell is outside the truncation.
  Id id_of(int q, int p, const Cell& c) const;

  // Diagonal simplicial set, degree n = bar degree n and simplicial degree n.
  GSimplicialSet diagonal(int dim) const;

  // Hom outer only: y∘f_q∘…∘f_1 as a based map c_0 -> d.
  BasedMap composite(const BarCell& c) const;
  // Hom outer only: (y∘f_q∘…∘f_1)·x ∈ X(d)_p.
  Id epsilon(const BarCell& c, int p) const;

 private:
  struct Level {
    std::vector<BarCell> cells;  // cells[0] unused
    std::unordered_map<std::string, Id> index;
  };
  const Level& level(int q, int p) const;
  void enumerate(int q, int p, Level& out) const;
  int stored_p(int p) const { return (outer_.discrete() && x_.is_discrete()) ? 0 : p; }
  std::string key(const BarCell& c) const;

  Monad monad_;
  Diagram x_;
  Outer outer_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<Level>> levels_;
};

// B_•(E, E, X) as a simplicial object of diagrams over the ambient category.
class BarConstruction {
 public:
  BarConstruction(Monad monad, Diagram x, int qmax);

  const Monad& monad() const { return monad_; }
  const Diagram& algebra() const { return x_; }
  int qmax() const { return qmax_; }
  const BarEngine& engine(int d) const { return *engines_[d]; }

  // q-simplices as a diagram; values are simplicial in the internal degree.
  const Diagram& level(int q) const;
  DiagramMap face(int q, int i) const;   // level q -> level q-1
  DiagramMap degen(int q, int i) const;  // level q -> level q+1
  DiagramMap epsilon(int q) const;       // level q -> X
  DiagramMap eta() const;                // X -> level 0

 private:
  Monad monad_;
  Diagram x_;
  int qmax_;
  std::vector<std::shared_ptr<BarEngine>> engines_;
  mutable std::vector<std::optional<Diagram>> levels_;
};

// Monad laws at X: μ∘ηE = id, μ∘Eη = id, μ∘μE = μ∘Eμ on E X, E X, E³ X.
std::optional<std::string> check_monad_laws(const Monad& e, const Diagram& x);

// Bar-direction simplicial identities and that faces/degeneracies are diagram maps.
std::optional<std::string> check_bar_identities(const BarConstruction& b);

// Degeneracy tables [q][i][d][p][x] of a bar construction, for the properness check.
struct ReedyData {
  std::vector<std::vector<std::vector<std::vector<std::vector<Id>>>>> degen;
};
ReedyData reedy_data(const BarConstruction& b);
// Every bar-direction degeneracy is levelwise injective.
bool check_reedy(const ReedyData& r);
inline bool check_reedy(const BarConstruction& b) { return check_reedy(reedy_data(b)); }

// ε, η and the extra-degeneracy homotopy on the diagonal of B(E, E, X)(d).
struct EpsEtaData {
  GSimplicialSet bar;     // diagonal at d
  GSimplicialSet target;  // X(d)
  SimplicialMap eps, eta;
  SimplicialHomotopy homotopy;  // from id to η∘ε
};
EpsEtaData eps_eta_homotopy(const BarConstruction& b, int d, int dim);
std::optional<std::string> check_eps_eta(const EpsEtaData& e);

// The canonical map B^{Σ_G}(P X) -> P(B^Σ X) with all verifications.
struct IsoRReport {
  bool ok = true;
  std::string failure;
  std::vector<std::vector<std::size_t>> sizes;  // [q][d] sizes at internal degree 0
};
IsoRReport iso_r(const Diagram& x, CatPtr equivariant, int qmax);

// q: B^{ℕ_G} Y -> B^{Σ_G} Y and p: B̃^{ℕ_G,×} Y -> B^{ℕ_G,∧} Y.
struct ComparisonReport {
  bool eps_q = true, eps_p = true, q_surjective = true, p_surjective = true, p_collapse = true;
  bool q_simplicial = true, p_simplicial = true;
  bool reedy = true;
  std::string failure;
  bool ok() const {
    return eps_q && eps_p && q_surjective && p_surjective && p_collapse && q_simplicial && p_simplicial && reedy;
  }
};
ComparisonReport check_comparisons(const Diagram& y, int qmax);

// P along ℕ -> ℕ_G of 𝐈|ℕ: collapsed at the regular object, not at the trivial one.
struct NFailureReport {
  Id size_at_regular = 0, size_at_trivial = 0;
  bool pass = false;
  std::string explanation;
};
NFailureReport demo_N_failure(GroupPtr group);

enum class MachineTag { Sigma, SigmaG, NGSmash, NGProduct };
const char* to_string(MachineTag t);
Monad machine_monad(MachineTag tag, CatPtr input_category);

// V ⊕ W as a disjoint union of G-sets, V's points first.
GSetAction disjoint_union(const GSetAction& v, const GSetAction& w);

// Levels V ↦ diagonal of B(S^V•, E, X), stored to degree min(qmax, dmax).
class MachineOutput {
 public:
  MachineOutput(MachineTag tag, Diagram input, std::vector<GSetAction> spheres, int qmax, int dmax);
  MachineTag tag() const { return tag_; }
  int dim() const { return dim_; }
  std::size_t num_levels() const { return levels_.size(); }
  const GSetAction& representation(std::size_t k) const { return reps_[k]; }
  const GSimplicialSet& level(std::size_t k) const { return levels_[k]; }
  const BarEngine& engine(std::size_t k) const { return *engines_[k]; }
  // Adds (or finds) the level for V.
  std::size_t add_level(const GSetAction& v);

 private:
  MachineTag tag_;
  Diagram input_;
  int dim_;
  std::vector<GSetAction> reps_;
  std::vector<std::shared_ptr<BarEngine>> engines_;
  std::vector<GSimplicialSet> levels_;
};

// σ_{V,W}: level(V) ∧ S^W -> level(V ⊕ W), entries of y smashed with w ∈ S^W_p.
Id structure_map(const MachineOutput& m, std::size_t v, std::size_t vw, int p, Id a, int w_points, Id w);
// Unit, associativity and simpliciality of σ over the given representations.
std::optional<std::string> check_structure_maps(MachineOutput& m, const GSetAction& v, const GSetAction& w,
                                                const GSetAction& w2);

// η: X(1) -> level(V = ∅) in degree 0 is injective.
bool eta_into_sphere_level_injective(const MachineOutput& m, std::size_t k);

// Levelwise X(c) ∧ A₊.
Diagram half_smash_diagram(const Diagram& x, const GSimplicialSet& a);
// S(X ∧ A₊)(V) ≅ S(X)(V) ∧ A₊ by ([y, f, (x, a)]) ↦ ([y, f, x], a).
std::optional<std::string> check_tensor_with_space(MachineTag tag, const Diagram& x, const GSimplicialSet& a,
                                                   const GSetAction& v, int dim);

}  // namespace segal
