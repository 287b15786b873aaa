#include "segal/kan.hpp"

#include "detail/union_find.hpp"

namespace segal {

struct KanExtension::Impl {
  Diagram src;
  CatPtr tgt;
  std::vector<int> incl;
  struct Cell {
    std::vector<std::size_t> offset;  // per c, first generator index (node 1 + offset)
    std::vector<Id> cls;              // node -> class, node 0 the basepoint
    std::vector<std::uint32_t> roots; // class -> node
  };
  std::vector<std::vector<Cell>> cells;  // [d][p]
  std::optional<Diagram> result;

  int top(int c) const { return src.value(c).is_discrete() ? 0 : src.dim(); }
  int stored_p(int p) const { return src.is_discrete() ? 0 : p; }

  std::size_t node(int d, int p, int c, const BasedMap& psi, Id x) const {
    if (x == 0 || psi.is_zero()) return 0;
    const auto& cell = cells[d][p];
    int h = tgt->hom_index(incl[c], d, psi);
    if (h < 0) throw PreconditionError("morphism " + psi.str() + " not in the target category");
    return 1 + cell.offset[c] + static_cast<std::size_t>(h) * src.value(c).size(p) + x;
  }

  Generator decode(int d, int p, std::size_t n) const {
    const auto& cell = cells[d][p];
    --n;
    int c = 0;
    while (c + 1 < static_cast<int>(cell.offset.size()) && cell.offset[c + 1] <= n) ++c;
    n -= cell.offset[c];
    const Id sz = src.value(c).size(p);
    return {c, tgt->homs(incl[c], d)[n / sz], static_cast<Id>(n % sz)};
  }

  void build(int d, int p) {
    const IndexCategory& sub = src.category();
    Cell& cell = cells[d][p];
    std::size_t total = 0;
    for (int c = 0; c < sub.num_objects(); ++c) {
      cell.offset.push_back(total);
      total += tgt->homs(incl[c], d).size() * src.value(c).size(p);
    }
    detail::MinUnionFind uf(total + 1);
    for (int c = 0; c < sub.num_objects(); ++c) {
      const auto& hs = tgt->homs(incl[c], d);
      for (std::size_t h = 0; h < hs.size(); ++h)
        for (Id x = 0; x < src.value(c).size(p); ++x)
          if (x == 0 || hs[h].is_zero())
            uf.unite(0, static_cast<std::uint32_t>(1 + cell.offset[c] + h * src.value(c).size(p) + x));
    }
    for (int c = 0; c < sub.num_objects(); ++c)
      for (int c2 = 0; c2 < sub.num_objects(); ++c2)
        for (const auto& gamma : sub.homs(c, c2))
          for (const auto& psi : tgt->homs(incl[c2], d)) {
            BasedMap comp = compose_based(psi, gamma);
            for (Id x = 1; x < src.value(c).size(p); ++x)
              uf.unite(static_cast<std::uint32_t>(node(d, p, c, comp, x)),
                       static_cast<std::uint32_t>(node(d, p, c2, psi, src.act(c, c2, gamma, p, x))));
          }
    cell.cls = uf.classes(&cell.roots);
  }
};

KanExtension::KanExtension(const Diagram& x, CatPtr target) {
  auto impl = std::make_shared<Impl>(Impl{x, target, {}, {}, std::nullopt});
  auto incl = x.category().inclusion_into(*target);
  if (!incl) throw PreconditionError("source index category is not a subcategory of the target");
  impl->incl = *incl;
  const int k = target->num_objects();
  const int ptop = x.is_discrete() ? 0 : x.dim();
  impl->cells.assign(k, std::vector<Impl::Cell>(ptop + 1));
  for (int d = 0; d < k; ++d)
    for (int p = 0; p <= ptop; ++p) impl->build(d, p);

  const Impl* raw = impl.get();
  auto cls = [raw](int d, int p, int c, const BasedMap& psi, Id v) -> Id {
    int sp = raw->stored_p(p);
    return raw->cells[d][sp].cls[raw->node(d, sp, c, psi, v)];
  };
  auto rep = [raw](int d, int p, Id k) { return raw->decode(d, raw->stored_p(p), raw->cells[d][raw->stored_p(p)].roots[k]); };

  std::vector<GSimplicialSet> values;
  const auto& grp = target->group_ptr();
  for (int d = 0; d < k; ++d) {
    auto size = [raw, d](int p) { return static_cast<Id>(raw->cells[d][raw->stored_p(p)].roots.size()); };
    auto act = [&, d](int p, int g, Id v) -> Id {
      if (v == 0) return 0;
      auto r = rep(d, p, v);
      return cls(d, p, r.c, target->act_on_hom(g, impl->incl[r.c], d, r.psi), x.value(r.c).act(p, g, r.x));
    };
    if (x.is_discrete()) {
      std::vector<std::vector<Id>> tab(grp->order(), std::vector<Id>(size(0)));
      for (int g = 0; g < grp->order(); ++g)
        for (Id v = 0; v < size(0); ++v) tab[g][v] = act(0, g, v);
      values.push_back(GSimplicialSet::discrete(grp, x.dim(), size(0), std::move(tab)));
    } else {
      values.push_back(GSimplicialSet::from_functions(
          grp, x.dim(), size,
          [&, d](int p, int i, Id v) -> Id {
            if (v == 0) return 0;
            auto r = rep(d, p, v);
            return cls(d, p - 1, r.c, r.psi, x.value(r.c).face(p, i, r.x));
          },
          [&, d](int p, int i, Id v) -> Id {
            if (v == 0) return 0;
            auto r = rep(d, p, v);
            return cls(d, p + 1, r.c, r.psi, x.value(r.c).degen(p, i, r.x));
          },
          act));
    }
  }
  std::shared_ptr<const Impl> keep = impl;
  impl->result.emplace(
      target, std::move(values),
      [keep](int d, int d2, const BasedMap& phi, int p, Id v) -> Id {
        if (v == 0) return 0;
        int sp = keep->stored_p(p);
        auto r = keep->decode(d, sp, keep->cells[d][sp].roots[v]);
        return keep->cells[d2][sp].cls[keep->node(d2, sp, r.c, compose_based(phi, r.psi), r.x)];
      },
      "P" + x.name());
  impl_ = impl;
}

const Diagram& KanExtension::source() const { return impl_->src; }
const Diagram& KanExtension::result() const { return *impl_->result; }
const IndexCategory& KanExtension::target() const { return *impl_->tgt; }
int KanExtension::include(int c) const { return impl_->incl[c]; }

Id KanExtension::class_of(int d, int p, int c, const BasedMap& psi, Id x) const {
  int sp = impl_->stored_p(p);
  return impl_->cells[d][sp].cls[impl_->node(d, sp, c, psi, x)];
}

KanExtension::Generator KanExtension::representative(int d, int p, Id cls) const {
  if (cls == 0) throw PreconditionError("the basepoint class has no generator");
  int sp = impl_->stored_p(p);
  return impl_->decode(d, sp, impl_->cells[d][sp].roots[cls]);
}

KanExtension kan_extend(const Diagram& x, CatPtr target) { return KanExtension(x, std::move(target)); }

Diagram restrict(const Diagram& y, CatPtr sub) {
  auto incl = sub->inclusion_into(y.category());
  if (!incl) throw PreconditionError("restriction target is not a subcategory");
  std::vector<GSimplicialSet> values;
  for (int c : *incl) values.push_back(y.value(c));
  auto idx = *incl;
  return Diagram(
      sub, std::move(values),
      [y, idx](int c, int d, const BasedMap& f, int p, Id v) { return y.act(idx[c], idx[d], f, p, v); },
      "U" + y.name());
}

DiagramMap kan_unit(const KanExtension& p) {
  const Diagram& x = p.source();
  DiagramMap m;
  for (int c = 0; c < x.category().num_objects(); ++c) {
    const int d = p.include(c);
    const auto id = BasedMap::identity(x.category().arity(c));
    m.component.push_back(SimplicialMap::from_function(
        x.value(c).with_dim(x.dim()), [&](int q, Id v) { return p.class_of(d, q, c, id, v); }));
  }
  return m;
}

DiagramMap kan_counit(const KanExtension& p, const Diagram& y) {
  const Diagram& py = p.result();
  DiagramMap m;
  for (int d = 0; d < py.category().num_objects(); ++d) {
    m.component.push_back(SimplicialMap::from_function(py.value(d).with_dim(py.dim()), [&](int q, Id v) -> Id {
      if (v == 0) return 0;
      auto r = p.representative(d, q, v);
      return y.act(p.include(r.c), d, r.psi, q, r.x);
    }));
  }
  return m;
}

DiagramMap kan_map(const KanExtension& src, const KanExtension& dst, const DiagramMap& f) {
  const Diagram& ps = src.result();
  DiagramMap m;
  for (int d = 0; d < ps.category().num_objects(); ++d)
    m.component.push_back(SimplicialMap::from_function(ps.value(d).with_dim(ps.dim()), [&](int q, Id v) -> Id {
      if (v == 0) return 0;
      auto r = src.representative(d, q, v);
      return dst.class_of(d, q, r.c, r.psi, f.component[r.c](q, r.x));
    }));
  return m;
}

std::optional<std::string> check_triangle_identities(const Diagram& x, const Diagram& y) {
  const CatPtr& big = y.category_ptr();
  const CatPtr& small = x.category_ptr();
  // U ε ∘ η U = id on U Y
  Diagram uy = restrict(y, small);
  KanExtension puy = kan_extend(uy, big);
  DiagramMap eta_u = kan_unit(puy);
  DiagramMap eps = kan_counit(puy, y);
  auto incl = *small->inclusion_into(*big);
  for (int c = 0; c < small->num_objects(); ++c) {
    const auto& v = uy.value(c);
    for (int q = 0; q <= (v.is_discrete() ? 0 : uy.dim()); ++q)
      for (Id s = 0; s < v.size(q); ++s)
        if (eps.component[incl[c]](q, eta_u.component[c](q, s)) != s)
          return "U(counit) after unit is not the identity at " + small->object_name(c);
  }
  // ε P ∘ P η = id on P X
  KanExtension px = kan_extend(x, big);
  KanExtension pupx = kan_extend(restrict(px.result(), small), big);
  DiagramMap peta = kan_map(px, pupx, kan_unit(px));
  DiagramMap eps_p = kan_counit(pupx, px.result());
  const Diagram& r = px.result();
  for (int d = 0; d < big->num_objects(); ++d)
    for (int q = 0; q <= (r.value(d).is_discrete() ? 0 : r.dim()); ++q)
      for (Id s = 0; s < r.value(d).size(q); ++s)
        if (eps_p.component[d](q, peta.component[d](q, s)) != s)
          return "counit after P(unit) is not the identity at " + big->object_name(d);
  return std::nullopt;
}

}  // namespace segal
