#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segal/abgroup.hpp"
#include "segal/index_category.hpp"
#include "segal/simplicial.hpp"

namespace segal {

// Reduced enriched functor from a truncated index category to based G-simplicial sets.
class Diagram {
 public:
  // act(c, d, f, p, x): image of x ∈ X(c)_p under f: c -> d.
  using ActFn = std::function<Id(int c, int d, const BasedMap& f, int p, Id x)>;

  Diagram(CatPtr cat, std::vector<GSimplicialSet> values, ActFn act, std::string name = "");

  const IndexCategory& category() const { return *cat_; }
  const CatPtr& category_ptr() const { return cat_; }
  const GSimplicialSet& value(int c) const { return values_[c]; }
  Id act(int c, int d, const BasedMap& f, int p, Id x) const { return act_(c, d, f, p, x); }
  int dim() const { return dim_; }
  bool is_discrete() const;
  const std::string& name() const { return name_; }

 private:
  CatPtr cat_;
  std::vector<GSimplicialSet> values_;
  ActFn act_;
  std::string name_;
  int dim_ = 0;
};

using DiagramPtr = std::shared_ptr<const Diagram>;

// Functoriality, equivariance g·(f·x) = (g·f)·(g·x), reducedness, and that each X(f) is simplicial.
std::optional<std::string> check_diagram(const Diagram& x);

struct DiagramMap {
  std::vector<SimplicialMap> component;
};
std::optional<std::string> check_diagram_map(const DiagramMap& m, const Diagram& src, const Diagram& dst);
bool is_isomorphism(const DiagramMap& m, const Diagram& src, const Diagram& dst);

Diagram point_diagram(CatPtr cat, int dim);
// 𝐈(c) = F(1, c): points 0..n, f acting by evaluation, G through the object's action.
Diagram unit_diagram(CatPtr cat, int dim);
// (•A)(c) = c ∧ A with (j, a) numbered 1 + (j-1)(|A_p|-1) + (a-1).
Diagram free_diagram(CatPtr cat, const GSimplicialSet& a);

// A^n numbered in mixed radix of element indices; the zero tuple is the basepoint.
Id r_encode(const AbGroup& a, const std::vector<AbGroup::Elem>& tuple);
std::vector<AbGroup::Elem> r_decode(const AbGroup& a, int n, Id x);
// (R A)(n,α) = A^n; f sums over fibres, g·(a_i) = (g·a_{α(g)⁻¹ i}).
Diagram R_diagram(CatPtr cat, const AbGroup& a, int dim);

// δ_i coordinates of x ∈ X(c)_p, each in X(1)_p (trivial object of cardinality 1).
std::vector<Id> segal_coordinates(const Diagram& x, int c, int p, Id v);
// Whether x ↦ (δ_1 x, ..., δ_n x) is a bijection X(c)_p -> X(1)_p^n, all p ≤ dim.
bool segal_map_bijective(const Diagram& x, int c);

// Non-equivariant index category; for each n and each graph subgroup Λ ⊆ G×Σ_n the
// Segal map is a bijection on Λ-fixed points. Discrete values only.
bool is_special_discrete(const Diagram& x);
// 𝓕_G version: for every object (n,α) and subgroup H ⊆ G the Segal map
// Y(n,α) -> Y(1)^α is a bijection on H-fixed points. Discrete values only.
bool is_special_discrete_equivariant(const Diagram& y);

}  // namespace segal
