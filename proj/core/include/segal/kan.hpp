#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segal/diagram.hpp"

namespace segal {

// Left Kan extension along an inclusion of index categories C ⊆ D.
// (P X)(d) is the quotient of ⋁_c D(c, d) ∧ X(c) by (ψ∘γ, x) ~ (ψ, γ·x);
// classes are numbered by their lexicographically least generator (c, ψ, x).
class KanExtension {
 public:
  struct Generator {
    int c = 0;  // object of C
    BasedMap psi;
    Id x = 0;
  };

  KanExtension(const Diagram& x, CatPtr target);

  const Diagram& source() const;
  const Diagram& result() const;
  const IndexCategory& target() const;
  // Object c of C as an object of D.
  int include(int c) const;

  Id class_of(int d, int p, int c, const BasedMap& psi, Id x) const;
  // Least generator of a non-basepoint class.
  Generator representative(int d, int p, Id cls) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

KanExtension kan_extend(const Diagram& x, CatPtr target);

// Restriction along C ⊆ D.
Diagram restrict(const Diagram& y, CatPtr sub);

// X -> U P X, x ↦ [c, id, x].
DiagramMap kan_unit(const KanExtension& p);
// P U Y -> Y, [c, ψ, y] ↦ ψ·y. `p` must extend restrict(y, ...).
DiagramMap kan_counit(const KanExtension& p, const Diagram& y);
// P applied to a map f: X -> X' between diagrams over C.
DiagramMap kan_map(const KanExtension& src, const KanExtension& dst, const DiagramMap& f);

// Both triangle identities for the adjunction at X (over C) and Y (over D).
std::optional<std::string> check_triangle_identities(const Diagram& x, const Diagram& y);

}  // namespace segal
