#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segal/barmachine.hpp"

namespace segal {

// Maps X(m) ∧ Y(n) -> Z(mn), m ∧ n flattened lexicographically. X, Y, Z are diagrams over
// non-equivariant 𝓕 (G acting on values); pair is defined when mn ≤ Z's truncation.
struct ExternalPairing {
  using PairFn = std::function<Id(int m, int n, int p, Id x, Id y)>;
  Diagram x, y, z;
  PairFn pair;
  Id operator()(int m, int n, int p, Id a, Id b) const { return pair(m, n, p, a, b); }
};

// Naturality in both variables over every morphism within the truncations, equivariance,
// basepoints, and compatibility with the internal faces.
std::optional<std::string> check_pairing(const ExternalPairing& e);

// F₁A ⊼ F₁B -> F₁(A ∧ B): (j, a) ∧ (j', b) ↦ (lex(j, j'), a ∧ b). `target` bounds mn.
ExternalPairing free_pairing(CatPtr cat_a, const GSimplicialSet& a, CatPtr cat_b, const GSimplicialSet& b,
                             CatPtr target);

// R A ⊼ R B -> R(A ⊗ B): (a_i) ∧ (b_j) has a_i ⊗ b_j at position lex(i, j).
struct RPairing {
  TensorProduct tensor;
  ExternalPairing pairing;
};
RPairing R_monoidal(CatPtr cat, const AbGroup& a, const AbGroup& b, CatPtr target, int dim = 0);

// R A ⊼ R A -> R A through the ring multiplication.
ExternalPairing ring_pairing(CatPtr cat_a, CatPtr cat_b, const RingObject& r, CatPtr target, int dim = 0);

// h: •(S₊) -> R ℤ[S]; (j, s) goes to the basis vector s in coordinate j.
// ℤ[S] is infinite, so images are explicit integer matrices instead of diagram ids.
class HMap {
 public:
  HMap(CatPtr cat, GSetAction s);
  const Diagram& source() const { return source_; }
  const GSetAction& set() const { return s_; }
  // n rows of |S| integers.
  std::vector<std::vector<long long>> operator()(int c, Id z) const;
  // R ℤ[S] structure: fibre sums along f and the permutation action of G.
  std::vector<std::vector<long long>> push(const BasedMap& f, const std::vector<std::vector<long long>>& v) const;
  std::vector<std::vector<long long>> act(int c, int g, const std::vector<std::vector<long long>>& v) const;

 private:
  CatPtr cat_;
  GSetAction s_;
  Diagram source_;
};
HMap h_map(CatPtr cat, const GSetAction& s);
// Naturality over all morphisms, equivariance, injectivity.
std::optional<std::string> check_h_map(const HMap& h);

// Truncated Day convolution: the coend over 1 ≤ m ≤ gx, 1 ≤ n ≤ gy of
// 𝓕(mn, k) ∧ X(m) ∧ Y(n). Correct when X and Y are generated in those degrees.
class DaySmash {
 public:
  struct Generator {
    int m = 0, n = 0;
    BasedMap psi;  // mn -> k
    Id x = 0, y = 0;
  };
  DaySmash(const Diagram& x, const Diagram& y, int gx, int gy, CatPtr target);

  const Diagram& result() const;
  Id class_of(int k, int p, const Generator& gen) const;
  Generator representative(int k, int p, Id cls) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Whether the counit of restriction to {0..g} followed by extension is an isomorphism.
std::optional<std::string> generation_certificate(const Diagram& x, int g);
// Throws VerificationError if either certificate fails.
DaySmash day_smash_generated(const Diagram& x, const Diagram& y, int gx, int gy, CatPtr target);

// F₁A ∧ F₁B ≅ F₁(A ∧ B) through the truncated coend.
struct DayFreeReport {
  DaySmash day;
  Diagram free;  // F₁(A ∧ B)
  DiagramMap comparison;
};
DayFreeReport day_smash_free(CatPtr cat, const GSimplicialSet& a, const GSimplicialSet& b);
std::optional<std::string> check_day_smash_free(const DayFreeReport& r);

// φ on (q, p) cells: pairs B(S^V, E, X) and B(S^W, E, Y) into B(S^{V⊕W}, E, Z) through
// objects mn, homs f ∧ f', outer entries (v_i, w_j) at lex(i, j) and the external pairing.
class Phi {
 public:
  Phi(ExternalPairing pairing, const GSetAction& v, const GSetAction& w, int dim, CatTag ground = CatTag::Sigma);

  const ExternalPairing& pairing() const { return e_; }
  const BarEngine& left() const { return *left_; }
  const BarEngine& right() const { return *right_; }
  const BarEngine& target() const { return *target_; }
  int dim() const { return dim_; }

  // Whether every levelwise product of objects fits the target truncation.
  bool defined(const BarCell& a, const BarCell& b) const;
  // The raw (uncanonicalized) product; basepoint if either factor is.
  Cell operator()(const BarCell& a, const BarCell& b, int p) const;
  // Same product written into `out`, reusing its storage; false for the basepoint.
  bool product(const BarCell& a, const BarCell& b, int p, BarCell& out) const;
  Id apply(int q, int p, Id a, Id b) const;

 private:
  ExternalPairing e_;
  int kv_, kw_, dim_;
  std::vector<int> ax_, ay_, objz_;  // arities of X's and Y's objects, Z's object by arity
  std::vector<Id> pw_;               // p^|W|
  std::shared_ptr<BarEngine> left_, right_, target_;
};

// The same cell under random elements of the relation group at each bar position.
BarCell random_representative(const BarEngine& e, const BarCell& c, int p, std::uint64_t seed);

// Descent through orbits and compatibility with bar and internal faces/degeneracies.
std::optional<std::string> check_phi(const Phi& phi, int qmax);

struct CoherenceBounds {
  int truncation = 3;       // N of the factors
  int pair_truncation = 4;  // N of products
  int qmax = 2;
  int dmax = 3;
  // Diagrams to check; an unchecked diagram keeps its report flag true.
  bool unit = true, assoc = true, symmetry = true;
};

struct CoherenceReport {
  bool unit_left = true, unit_right = true, assoc = true, symmetry = true, phi = true;
  std::string failure;  // first counterexample
  std::size_t checked = 0;
  bool ok() const { return unit_left && unit_right && assoc && symmetry && phi; }
};

// Unit, associativity and symmetry diagrams for φ on F₁X, F₁Y, F₁Z with levels V, W, U.
CoherenceReport check_coherence(const GSimplicialSet& x, const GSimplicialSet& y, const GSimplicialSet& z,
                                const GSetAction& v, const GSetAction& w, const GSetAction& u,
                                const CoherenceBounds& bounds, CatTag ground = CatTag::Sigma);

// B(A^•, F^Σ, •X) ≃ A ∧ X on the diagonal, A = S^V.
struct BpqData {
  GSimplicialSet bar;
  SmashProduct target;  // A ∧ X
  SimplicialMap zeta, eta;
  SimplicialHomotopy homotopy;  // from η∘ζ to id
};
BpqData bpq_mu(const GSimplicialSet& x, const GSetAction& v, int truncation, int qmax, int dmax);
std::optional<std::string> check_bpq(const BpqData& d);
// A^• ⊗_𝓕 •X ≅ A ∧ X through the coequalizer of ⋁_n A^n ∧ (n ∧ X), degrees ≤ dim.
std::optional<std::string> check_coend_identification(const GSimplicialSet& a, const GSimplicialSet& x,
                                                      int truncation, int dim);

// Ring pairing of the machine levels of R A and its unit map 𝐈 -> R A through h.
struct EmRingReport {
  bool pairing_natural = true, assoc = true, unit_left = true, unit_right = true, phi = true;
  std::string failure;
  bool ok() const { return pairing_natural && assoc && unit_left && unit_right && phi; }
};
EmRingReport em_ring_pairing(const RingObject& r, GroupPtr group, const GSetAction& v, int truncation,
                             int pair_truncation, int qmax, int dmax);

}  // namespace segal
