#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segal/fingroups.hpp"

namespace segal {

enum class CatTag { F, Pi, Sigma, N, FG, PiG, SigmaG, NG };

const char* to_string(CatTag t);
BaseCat base_of(CatTag t);
bool is_equivariant(CatTag t);
CatTag equivariant_version(CatTag t);

struct CatObject {
  int n = 0;
  GSetAction alpha;
};

// Truncated index category. Objects are ordered by cardinality, trivial action first.
// Non-G tags only have trivial actions; G still acts on diagram values.
class IndexCategory {
 public:
  // `extra` lists the non-trivial actions to include (only meaningful for G tags).
  IndexCategory(CatTag tag, GroupPtr group, int truncation, std::vector<GSetAction> extra = {});

  // Trivial actions per n plus the regular action at n = |G| when |G| ≤ N and G ≠ e.
  static std::vector<GSetAction> default_actions(const GroupPtr& group, int truncation);

  CatTag tag() const { return tag_; }
  BaseCat base() const { return base_of(tag_); }
  bool equivariant() const { return is_equivariant(tag_); }
  const FinGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int truncation() const { return truncation_; }

  int num_objects() const { return static_cast<int>(objects_.size()); }
  const CatObject& object(int c) const { return objects_[c]; }
  int arity(int c) const { return objects_[c].n; }
  int trivial_object(int n) const;
  std::optional<int> find_object(int n, const GSetAction& alpha) const;
  std::string object_name(int c) const;

  // Morphisms c -> d in image-lexicographic order. Based maps only; the zero map appears
  // exactly when it is a morphism of the underlying category.
  const std::vector<BasedMap>& homs(int c, int d) const { return homs_[c * num_objects() + d]; }
  bool contains(int c, int d, const BasedMap& f) const;
  // Position of f in homs(c, d), or -1.
  int hom_index(int c, int d, const BasedMap& f) const;
  // Conjugation action; identity for non-G tags.
  BasedMap act_on_hom(int g, int c, int d, const BasedMap& f) const;
  // Action permutation of object c on {0..n}.
  int act_point(int c, int g, int i) const { return objects_[c].alpha[g](i); }

  // Index map of this category's objects into `d`, or nullopt if this is not a
  // subcategory (same group and truncation, objects and morphisms included).
  std::optional<std::vector<int>> inclusion_into(const IndexCategory& d) const;

 private:
  CatTag tag_;
  GroupPtr group_;
  int truncation_;
  std::vector<CatObject> objects_;
  std::vector<std::vector<BasedMap>> homs_;
};

using CatPtr = std::shared_ptr<const IndexCategory>;

CatPtr make_category(CatTag tag, GroupPtr group, int truncation);
CatPtr make_category(CatTag tag, GroupPtr group, int truncation, std::vector<GSetAction> extra);

}  // namespace segal
