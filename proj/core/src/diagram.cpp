#include "segal/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace segal {

namespace {

int top(const GSimplicialSet& s) { return s.is_discrete() ? 0 : s.dim(); }

std::string where(const Diagram& x, int c, int p, Id v) {
  std::ostringstream os;
  os << " at object " << x.category().object_name(c) << ", degree " << p << ", simplex " << v;
  return os.str();
}

}  // namespace

Diagram::Diagram(CatPtr cat, std::vector<GSimplicialSet> values, ActFn act, std::string name)
    : cat_(std::move(cat)), values_(std::move(values)), act_(std::move(act)), name_(std::move(name)) {
  if (static_cast<int>(values_.size()) != cat_->num_objects())
    throw PreconditionError("diagram needs one value per object");
  dim_ = values_.empty() ? 0 : values_[0].dim();
  for (const auto& v : values_) {
    dim_ = std::min(dim_, v.dim());
    if (!(v.group() == cat_->group())) throw PreconditionError("diagram value over a different group");
  }
}

bool Diagram::is_discrete() const {
  return std::all_of(values_.begin(), values_.end(), [](const GSimplicialSet& s) { return s.is_discrete(); });
}

std::optional<std::string> check_diagram(const Diagram& x) {
  const IndexCategory& cat = x.category();
  const int k = cat.num_objects();
  const int order = cat.group().order();
  for (int c = 0; c < k; ++c) {
    const auto& v = x.value(c);
    if (auto e = check_simplicial_identities(v)) return "value at " + cat.object_name(c) + ": " + *e;
    if (cat.arity(c) == 0)
      for (int p = 0; p <= top(v); ++p)
        if (v.size(p) != 1) return "diagram is not reduced (value at 0 has non-basepoint simplices)";
  }
  for (int c = 0; c < k; ++c) {
    const auto& vc = x.value(c);
    for (int d = 0; d < k; ++d) {
      const auto& vd = x.value(d);
      for (const auto& f : cat.homs(c, d)) {
        for (int p = 0; p <= std::min(top(vc), x.dim()); ++p)
          for (Id v = 0; v < vc.size(p); ++v) {
            Id w = x.act(c, d, f, p, v);
            if (w >= vd.size(p)) return "action out of range" + where(x, c, p, v);
            if (v == 0 && w != 0) return "action not based" + where(x, c, p, v);
            if (c == d && f.is_identity() && w != v) return "identity acts nontrivially" + where(x, c, p, v);
            for (int i = 0; p > 0 && i <= p; ++i)
              if (x.act(c, d, f, p - 1, vc.face(p, i, v)) != vd.face(p, i, w))
                return "action does not commute with faces" + where(x, c, p, v);
            for (int i = 0; p < x.dim() && !vc.is_discrete() && i <= p; ++i)
              if (x.act(c, d, f, p + 1, vc.degen(p, i, v)) != vd.degen(p, i, w))
                return "action does not commute with degeneracies" + where(x, c, p, v);
            for (int g = 0; g < order; ++g)
              if (x.act(c, d, cat.act_on_hom(g, c, d, f), p, vc.act(p, g, v)) != vd.act(p, g, w))
                return "evaluation not equivariant under " + std::to_string(g) + " for " + f.str() +
                       where(x, c, p, v);
            for (int e = 0; e < k; ++e)
              for (const auto& h : cat.homs(d, e))
                if (x.act(c, e, compose_based(h, f), p, v) != x.act(d, e, h, p, w))
                  return "not functorial for " + h.str() + " after " + f.str() + where(x, c, p, v);
          }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_diagram_map(const DiagramMap& m, const Diagram& src, const Diagram& dst) {
  const IndexCategory& cat = src.category();
  if (static_cast<int>(m.component.size()) != cat.num_objects()) return "map needs one component per object";
  for (int c = 0; c < cat.num_objects(); ++c)
    if (auto e = check_simplicial_map(m.component[c], src.value(c).with_dim(src.dim()), dst.value(c).with_dim(dst.dim())))
      return "component at " + cat.object_name(c) + ": " + *e;
  for (int c = 0; c < cat.num_objects(); ++c)
    for (int d = 0; d < cat.num_objects(); ++d)
      for (const auto& f : cat.homs(c, d))
        for (int p = 0; p <= std::min({src.dim(), dst.dim(), top(src.value(c))}); ++p)
          for (Id v = 0; v < src.value(c).size(p); ++v)
            if (m.component[d](p, src.act(c, d, f, p, v)) != dst.act(c, d, f, p, m.component[c](p, v)))
              return "not natural for " + f.str() + where(src, c, p, v);
  return std::nullopt;
}

bool is_isomorphism(const DiagramMap& m, const Diagram& src, const Diagram& dst) {
  if (check_diagram_map(m, src, dst)) return false;
  const int d = std::min(src.dim(), dst.dim());
  for (int c = 0; c < src.category().num_objects(); ++c)
    if (!is_bijective(m.component[c], src.value(c).with_dim(d), dst.value(c).with_dim(d))) return false;
  return true;
}

Diagram point_diagram(CatPtr cat, int dim) {
  std::vector<GSimplicialSet> v(cat->num_objects(), GSimplicialSet::point(cat->group_ptr(), dim));
  return Diagram(cat, std::move(v), [](int, int, const BasedMap&, int, Id) { return Id{0}; }, "*");
}

Diagram unit_diagram(CatPtr cat, int dim) {
  std::vector<GSimplicialSet> v;
  for (int c = 0; c < cat->num_objects(); ++c) {
    const int n = cat->arity(c);
    std::vector<std::vector<Id>> act(cat->group().order(), std::vector<Id>(n + 1));
    for (int g = 0; g < cat->group().order(); ++g)
      for (int j = 0; j <= n; ++j) act[g][j] = static_cast<Id>(cat->act_point(c, g, j));
    v.push_back(GSimplicialSet::discrete(cat->group_ptr(), dim, n + 1, std::move(act)));
  }
  return Diagram(cat, std::move(v), [](int, int, const BasedMap& f, int, Id x) { return static_cast<Id>(f(x)); },
                 "I");
}

Diagram free_diagram(CatPtr cat, const GSimplicialSet& a) {
  if (!(a.group() == cat->group())) throw PreconditionError("free_diagram over a different group");
  std::vector<GSimplicialSet> v;
  auto enc = [&a](int p, int j, Id x) -> Id {
    if (j == 0 || x == 0) return 0;
    return 1 + static_cast<Id>(j - 1) * (a.size(p) - 1) + (x - 1);
  };
  auto dec = [&a](int p, Id z) -> std::pair<int, Id> {
    if (z == 0) return {0, 0};
    return {1 + static_cast<int>((z - 1) / (a.size(p) - 1)), 1 + (z - 1) % (a.size(p) - 1)};
  };
  for (int c = 0; c < cat->num_objects(); ++c) {
    const int n = cat->arity(c);
    auto size = [&](int p) { return 1 + static_cast<Id>(n) * (a.size(p) - 1); };
    auto act = [&](int p, int g, Id z) {
      auto [j, x] = dec(p, z);
      return enc(p, cat->act_point(c, g, j), a.act(p, g, x));
    };
    if (a.is_discrete()) {
      std::vector<std::vector<Id>> tab(cat->group().order(), std::vector<Id>(size(0)));
      for (int g = 0; g < cat->group().order(); ++g)
        for (Id z = 0; z < size(0); ++z) tab[g][z] = act(0, g, z);
      v.push_back(GSimplicialSet::discrete(cat->group_ptr(), a.dim(), size(0), std::move(tab)));
    } else {
      v.push_back(GSimplicialSet::from_functions(
          cat->group_ptr(), a.dim(), size,
          [&](int p, int i, Id z) {
            auto [j, x] = dec(p, z);
            return enc(p - 1, j, a.face(p, i, x));
          },
          [&](int p, int i, Id z) {
            auto [j, x] = dec(p, z);
            return enc(p + 1, j, a.degen(p, i, x));
          },
          act));
    }
  }
  auto shared = std::make_shared<GSimplicialSet>(a);
  return Diagram(
      cat, std::move(v),
      [shared](int, int, const BasedMap& f, int p, Id z) -> Id {
        if (z == 0) return 0;
        const Id s = shared->size(p) - 1;
        int j = 1 + static_cast<int>((z - 1) / s);
        Id x = 1 + (z - 1) % s;
        int k = f(j);
        return k == 0 ? 0 : 1 + static_cast<Id>(k - 1) * s + (x - 1);
      },
      "free");
}

Id r_encode(const AbGroup& a, const std::vector<AbGroup::Elem>& tuple) {
  const Id base = a.order();
  Id r = 0;
  for (const auto& e : tuple) r = r * base + a.index(e);
  return r;
}

std::vector<AbGroup::Elem> r_decode(const AbGroup& a, int n, Id x) {
  const Id base = a.order();
  std::vector<AbGroup::Elem> out(n);
  for (int i = n - 1; i >= 0; --i) {
    out[i] = a.element(x % base);
    x /= base;
  }
  return out;
}

Diagram R_diagram(CatPtr cat, const AbGroup& a, int dim) {
  if (!a.finite()) throw PreconditionError("R_diagram needs a finite abelian group");
  if (!(a.group() == cat->group())) throw PreconditionError("R_diagram: group mismatch");
  std::vector<GSimplicialSet> v;
  const Id base = a.order();
  for (int c = 0; c < cat->num_objects(); ++c) {
    const int n = cat->arity(c);
    Id size = 1;
    for (int i = 0; i < n; ++i) {
      if (size > 0xffffffffu / base) throw PreconditionError("R_diagram value too large");
      size *= base;
    }
    std::vector<std::vector<Id>> tab(cat->group().order(), std::vector<Id>(size));
    for (int g = 0; g < cat->group().order(); ++g)
      for (Id x = 0; x < size; ++x) {
        auto t = r_decode(a, n, x);
        std::vector<AbGroup::Elem> u(n);
        for (int i = 1; i <= n; ++i) u[cat->act_point(c, g, i) - 1] = a.act(g, t[i - 1]);
        tab[g][x] = r_encode(a, u);
      }
    v.push_back(GSimplicialSet::discrete(cat->group_ptr(), dim, size, std::move(tab)));
  }
  return Diagram(
      cat, std::move(v),
      [a](int, int, const BasedMap& f, int, Id x) {
        auto t = r_decode(a, f.source(), x);
        std::vector<AbGroup::Elem> u(f.target(), a.zero());
        for (int i = 1; i <= f.source(); ++i)
          if (f(i)) u[f(i) - 1] = a.add(u[f(i) - 1], t[i - 1]);
        return r_encode(a, u);
      },
      "R(" + a.str() + ")");
}

std::vector<Id> segal_coordinates(const Diagram& x, int c, int p, Id v) {
  const IndexCategory& cat = x.category();
  const int one = cat.trivial_object(1);
  const int n = cat.arity(c);
  std::vector<Id> out(n);
  for (int i = 1; i <= n; ++i) {
    BasedMap d = BasedMap::zero(n, 1);
    d.set(i, 1);
    if (!cat.contains(c, one, d)) throw PreconditionError("projections are not morphisms of this category");
    out[i - 1] = x.act(c, one, d, p, v);
  }
  return out;
}

namespace {

Id tuple_id(const std::vector<Id>& t, Id base) {
  Id r = 0;
  for (Id v : t) r = r * base + v;
  return r;
}

std::vector<Id> tuple_of(Id r, int n, Id base) {
  std::vector<Id> t(n);
  for (int i = n - 1; i >= 0; --i) {
    t[i] = r % base;
    r /= base;
  }
  return t;
}

void require_discrete(const Diagram& x) {
  if (!x.is_discrete()) throw PreconditionError("specialness is only decided for discrete values");
}

// δ restricted to fixed points of a family of (value action, tuple action) pairs.
template <typename ActX, typename ActT>
bool fixed_bijection(const Diagram& x, int c, int order, ActX act_x, ActT act_t) {
  const int one = x.category().trivial_object(1);
  const int n = x.category().arity(c);
  const Id base = x.value(one).size(0);
  Id tuples = 1;
  for (int i = 0; i < n; ++i) tuples *= base;
  std::set<Id> image;
  std::size_t src_fixed = 0;
  for (Id v = 0; v < x.value(c).size(0); ++v) {
    bool fixed = true;
    for (int e = 0; e < order && fixed; ++e) fixed = act_x(e, v) == v;
    if (!fixed) continue;
    ++src_fixed;
    auto t = segal_coordinates(x, c, 0, v);
    if (!image.insert(tuple_id(t, base)).second) return false;
  }
  std::size_t tgt_fixed = 0;
  for (Id r = 0; r < tuples; ++r) {
    auto t = tuple_of(r, n, base);
    bool fixed = true;
    for (int e = 0; e < order && fixed; ++e) fixed = act_t(e, t) == t;
    if (!fixed) continue;
    ++tgt_fixed;
    if (!image.count(r)) return false;
  }
  return src_fixed == tgt_fixed;
}

}  // namespace

bool segal_map_bijective(const Diagram& x, int c) {
  const int one = x.category().trivial_object(1);
  const int n = x.category().arity(c);
  for (int p = 0; p <= x.dim(); ++p) {
    const Id base = x.value(one).size(p);
    Id tuples = 1;
    for (int i = 0; i < n; ++i) tuples *= base;
    if (x.value(c).size(p) != tuples) return false;
    std::set<Id> seen;
    for (Id v = 0; v < x.value(c).size(p); ++v)
      if (!seen.insert(tuple_id(segal_coordinates(x, c, p, v), base)).second) return false;
    if (x.is_discrete()) break;
  }
  return true;
}

bool is_special_discrete(const Diagram& x) {
  require_discrete(x);
  const IndexCategory& cat = x.category();
  if (cat.equivariant()) throw PreconditionError("use is_special_discrete_equivariant for G index categories");
  const int one = cat.trivial_object(1);
  for (int n = 0; n <= cat.truncation(); ++n) {
    const int c = cat.trivial_object(n);
    for (const auto& lam : graph_subgroups(cat.group(), n)) {
      auto act_x = [&](int e, Id v) {
        const auto& [g, s] = lam.elements[e];
        return x.value(c).act(0, g, x.act(c, c, BasedMap::from_permutation(s), 0, v));
      };
      auto act_t = [&](int e, const std::vector<Id>& t) {
        const auto& [g, s] = lam.elements[e];
        std::vector<Id> u(n);
        for (int i = 1; i <= n; ++i) u[s(i) - 1] = x.value(one).act(0, g, t[i - 1]);
        return u;
      };
      if (!fixed_bijection(x, c, lam.order(), act_x, act_t)) return false;
    }
  }
  return true;
}

bool is_special_discrete_equivariant(const Diagram& y) {
  require_discrete(y);
  const IndexCategory& cat = y.category();
  const int one = cat.trivial_object(1);
  const auto subgroups = graph_subgroups(cat.group(), 1);
  for (int c = 0; c < cat.num_objects(); ++c) {
    const int n = cat.arity(c);
    for (const auto& h : subgroups) {
      auto act_x = [&](int e, Id v) { return y.value(c).act(0, h.elements[e].first, v); };
      auto act_t = [&](int e, const std::vector<Id>& t) {
        const int g = h.elements[e].first;
        std::vector<Id> u(n);
        for (int i = 1; i <= n; ++i) u[cat.act_point(c, g, i) - 1] = y.value(one).act(0, g, t[i - 1]);
        return u;
      };
      if (!fixed_bijection(y, c, h.order(), act_x, act_t)) return false;
    }
  }
  return true;
}

}  // namespace segal
