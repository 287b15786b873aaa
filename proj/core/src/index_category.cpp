#include "segal/index_category.hpp"

#include <algorithm>
#include <sstream>

namespace segal {

const char* to_string(CatTag t) {
  switch (t) {
    case CatTag::F: return "F";
    case CatTag::Pi: return "Pi";
    case CatTag::Sigma: return "Sigma";
    case CatTag::N: return "N";
    case CatTag::FG: return "F_G";
    case CatTag::PiG: return "Pi_G";
    case CatTag::SigmaG: return "Sigma_G";
    case CatTag::NG: return "N_G";
  }
  return "?";
}

BaseCat base_of(CatTag t) {
  switch (t) {
    case CatTag::F:
    case CatTag::FG: return BaseCat::F;
    case CatTag::Pi:
    case CatTag::PiG: return BaseCat::Pi;
    case CatTag::Sigma:
    case CatTag::SigmaG: return BaseCat::Sigma;
    case CatTag::N:
    case CatTag::NG: return BaseCat::N;
  }
  return BaseCat::F;
}

bool is_equivariant(CatTag t) {
  return t == CatTag::FG || t == CatTag::PiG || t == CatTag::SigmaG || t == CatTag::NG;
}

CatTag equivariant_version(CatTag t) {
  switch (base_of(t)) {
    case BaseCat::F: return CatTag::FG;
    case BaseCat::Pi: return CatTag::PiG;
    case BaseCat::Sigma: return CatTag::SigmaG;
    case BaseCat::N: return CatTag::NG;
  }
  return t;
}

IndexCategory::IndexCategory(CatTag tag, GroupPtr group, int truncation, std::vector<GSetAction> extra)
    : tag_(tag), group_(std::move(group)), truncation_(truncation) {
  if (!group_) throw PreconditionError("index category without a group");
  if (truncation_ < 0 || truncation_ > kMaxArity) throw PreconditionError("truncation out of range");
  if (!equivariant()) extra.clear();
  for (int n = 0; n <= truncation_; ++n) {
    objects_.push_back({n, GSetAction::trivial(group_, n)});
    for (const auto& a : extra) {
      if (a.size() != n || a.is_trivial()) continue;
      if (!(a.group() == *group_)) throw PreconditionError("object action over a different group");
      bool dup = false;
      for (const auto& o : objects_) dup |= (o.n == n && o.alpha == a);
      if (!dup) objects_.push_back({n, a});
    }
  }
  for (const auto& a : extra)
    if (a.size() > truncation_) throw PreconditionError("object action above the truncation");
  const int k = num_objects();
  homs_.resize(static_cast<std::size_t>(k) * k);
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d) {
      auto& h = homs_[c * k + d];
      if (base() == BaseCat::N && c != d) continue;  // only identities, and only from an object to itself
      h = enumerate_homs(base(), arity(c), arity(d));
    }
}

std::vector<GSetAction> IndexCategory::default_actions(const GroupPtr& group, int truncation) {
  if (group->order() == 1 || group->order() > truncation) return {};
  return {GSetAction::regular(group)};
}

int IndexCategory::trivial_object(int n) const {
  for (int c = 0; c < num_objects(); ++c)
    if (objects_[c].n == n && objects_[c].alpha.is_trivial()) return c;
  throw PreconditionError("object " + std::to_string(n) + " above truncation");
}

std::optional<int> IndexCategory::find_object(int n, const GSetAction& alpha) const {
  for (int c = 0; c < num_objects(); ++c)
    if (objects_[c].n == n && objects_[c].alpha == alpha) return c;
  return std::nullopt;
}

std::string IndexCategory::object_name(int c) const {
  const auto& o = objects_[c];
  if (o.alpha.is_trivial()) return std::to_string(o.n);
  std::ostringstream os;
  os << '(' << o.n << ';';
  for (int g = 1; g < group_->order(); ++g) {
    os << (g > 1 ? " " : "");
    for (int i = 1; i <= o.n; ++i) os << o.alpha[g](i);
  }
  os << ')';
  return os.str();
}

bool IndexCategory::contains(int c, int d, const BasedMap& f) const {
  if (f.source() != arity(c) || f.target() != arity(d)) return false;
  if (base() == BaseCat::N && c != d) return false;
  return hom_in(base(), f);
}

int IndexCategory::hom_index(int c, int d, const BasedMap& f) const {
  const auto& h = homs(c, d);
  auto it = std::lower_bound(h.begin(), h.end(), f);
  if (it == h.end() || !(*it == f)) return -1;
  return static_cast<int>(it - h.begin());
}

BasedMap IndexCategory::act_on_hom(int g, int c, int d, const BasedMap& f) const {
  if (!equivariant()) return f;
  return conjugation_action(g, f, objects_[c].alpha, objects_[d].alpha);
}

std::optional<std::vector<int>> IndexCategory::inclusion_into(const IndexCategory& d) const {
  if (!(group() == d.group()) || truncation_ != d.truncation_) return std::nullopt;
  auto rank = [](BaseCat b) {
    switch (b) {
      case BaseCat::N: return 0;
      case BaseCat::Sigma: return 1;
      case BaseCat::Pi: return 2;
      case BaseCat::F: return 3;
    }
    return 3;
  };
  if (rank(base()) > rank(d.base())) return std::nullopt;
  if (equivariant() && !d.equivariant()) return std::nullopt;
  std::vector<int> out;
  for (const auto& o : objects_) {
    auto i = d.find_object(o.n, o.alpha);
    if (!i) return std::nullopt;
    out.push_back(*i);
  }
  return out;
}

CatPtr make_category(CatTag tag, GroupPtr group, int truncation) {
  auto extra = IndexCategory::default_actions(group, truncation);
  return std::make_shared<const IndexCategory>(tag, std::move(group), truncation, std::move(extra));
}

CatPtr make_category(CatTag tag, GroupPtr group, int truncation, std::vector<GSetAction> extra) {
  return std::make_shared<const IndexCategory>(tag, std::move(group), truncation, std::move(extra));
}

}  // namespace segal
