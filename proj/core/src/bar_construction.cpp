#include <sstream>

#include "segal/barmachine.hpp"

namespace segal {

namespace {

std::vector<Id> identity_outer(int n) {
  std::vector<Id> y(n);
  for (int j = 0; j < n; ++j) y[j] = static_cast<Id>(j + 1);
  return y;
}

std::vector<Id> compose_outer(const std::vector<Id>& f, const std::vector<Id>& g) {
  std::vector<Id> r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[i] == 0 ? 0 : f[g[i] - 1];
  return r;
}

int top_degree(const GSimplicialSet& s, int dim) { return s.is_discrete() ? 0 : dim; }

}  // namespace

BarConstruction::BarConstruction(Monad monad, Diagram x, int qmax)
    : monad_(std::move(monad)), x_(std::move(x)), qmax_(qmax) {
  if (qmax < 0) throw PreconditionError("bar degree bound must be non-negative");
  for (int d = 0; d < monad_.ambient().num_objects(); ++d)
    engines_.push_back(std::make_shared<BarEngine>(monad_, x_, Outer::hom_into(monad_.ambient_ptr(), d)));
  levels_.resize(qmax + 2);
}

const Diagram& BarConstruction::level(int q) const {
  if (q < 0 || q > qmax_ + 1) throw PreconditionError("bar degree " + std::to_string(q) + " beyond the bound");
  if (levels_[q]) return *levels_[q];
  const auto& grp = x_.category().group_ptr();
  std::vector<GSimplicialSet> values;
  auto engines = engines_;
  for (int d = 0; d < monad_.ambient().num_objects(); ++d) {
    const BarEngine& e = *engines[d];
    if (x_.is_discrete()) {
      std::vector<std::vector<Id>> tab(grp->order(), std::vector<Id>(e.size(q, 0)));
      for (int g = 0; g < grp->order(); ++g)
        for (Id v = 1; v < e.size(q, 0); ++v) tab[g][v] = e.id_of(q, 0, e.act(e.cell(q, 0, v), 0, g));
      values.push_back(GSimplicialSet::discrete(grp, x_.dim(), e.size(q, 0), std::move(tab)));
    } else {
      values.push_back(GSimplicialSet::from_functions(
          grp, x_.dim(), [&](int p) { return e.size(q, p); },
          [&](int p, int i, Id v) -> Id { return v == 0 ? 0 : e.id_of(q, p - 1, e.simp_face(e.cell(q, p, v), p, i)); },
          [&](int p, int i, Id v) -> Id { return v == 0 ? 0 : e.id_of(q, p + 1, e.simp_degen(e.cell(q, p, v), p, i)); },
          [&](int p, int g, Id v) -> Id { return v == 0 ? 0 : e.id_of(q, p, e.act(e.cell(q, p, v), p, g)); }));
    }
  }
  levels_[q].emplace(
      monad_.ambient_ptr(), std::move(values),
      [engines, q](int d, int d2, const BasedMap& phi, int p, Id v) -> Id {
        if (v == 0) return 0;
        BarCell c = engines[d]->cell(q, p, v);
        for (auto& y : c.outer) y = static_cast<Id>(phi(static_cast<int>(y)));
        return engines[d2]->id_of(q, p, c);
      },
      "B" + std::to_string(q) + "(" + monad_.name() + ", " + x_.name() + ")");
  return *levels_[q];
}

DiagramMap BarConstruction::face(int q, int i) const {
  const Diagram& src = level(q);
  DiagramMap m;
  for (int d = 0; d < src.category().num_objects(); ++d) {
    const BarEngine& e = *engines_[d];
    m.component.push_back(SimplicialMap::from_function(src.value(d).with_dim(src.dim()), [&](int p, Id v) -> Id {
      return v == 0 ? 0 : e.id_of(q - 1, p, e.bar_face(e.cell(q, p, v), i, p));
    }));
  }
  return m;
}

DiagramMap BarConstruction::degen(int q, int i) const {
  const Diagram& src = level(q);
  DiagramMap m;
  for (int d = 0; d < src.category().num_objects(); ++d) {
    const BarEngine& e = *engines_[d];
    m.component.push_back(SimplicialMap::from_function(src.value(d).with_dim(src.dim()), [&](int p, Id v) -> Id {
      return v == 0 ? 0 : e.id_of(q + 1, p, e.bar_degen(e.cell(q, p, v), i));
    }));
  }
  return m;
}

DiagramMap BarConstruction::epsilon(int q) const {
  const Diagram& src = level(q);
  DiagramMap m;
  for (int d = 0; d < src.category().num_objects(); ++d) {
    const BarEngine& e = *engines_[d];
    m.component.push_back(SimplicialMap::from_function(src.value(d).with_dim(src.dim()), [&](int p, Id v) -> Id {
      return v == 0 ? 0 : e.epsilon(e.cell(q, p, v), p);
    }));
  }
  return m;
}

// The product variant sends the basepoint to [id, *], which is not collapsed there.
DiagramMap BarConstruction::eta() const {
  const bool product = monad_.variant() == Variant::Product;
  DiagramMap m;
  for (int d = 0; d < x_.category().num_objects(); ++d) {
    const BarEngine& e = *engines_[d];
    const int n = x_.category().arity(d);
    m.component.push_back(SimplicialMap::from_function(x_.value(d).with_dim(x_.dim()), [&](int p, Id v) -> Id {
      if (v == 0 && !product) return 0;
      return e.id_of(0, p, BarCell{{d}, identity_outer(n), {}, v});
    }));
  }
  return m;
}

// ---- monad laws ----

namespace {

// μ: E(E X) -> E X at d, where `outer` is built on the algebra `inner.level(0)`.
Id multiply(const BarConstruction& outer, const BarConstruction& inner, int d, int p, Id v) {
  if (v == 0) return 0;
  const BarCell& a = outer.engine(d).cell(0, p, v);
  if (a.x == 0) return 0;  // product variant: [f, *] with * the basepoint of E X
  const int c1 = a.obj[0];
  const BarCell& b = inner.engine(c1).cell(0, p, a.x);
  BarCell r{{b.obj[0]}, compose_outer(a.outer, b.outer), {}, b.x};
  return inner.engine(d).id_of(0, p, r);
}

// E applied to a map f: X -> X' given levelwise.
Id apply_E(const BarConstruction& src, const BarConstruction& dst, int d, int p, Id v,
           const std::function<Id(int c, int p, Id x)>& f) {
  if (v == 0) return 0;
  BarCell a = src.engine(d).cell(0, p, v);
  a.x = f(a.obj[0], p, a.x);
  return dst.engine(d).id_of(0, p, a);
}

}  // namespace

std::optional<std::string> check_monad_laws(const Monad& e, const Diagram& x) {
  BarConstruction b1(e, x, 0);
  const Diagram& ex = b1.level(0);
  BarConstruction b2(e, ex, 0);
  const Diagram& eex = b2.level(0);
  BarConstruction b3(e, eex, 0);
  const Diagram& eeex = b3.level(0);
  DiagramMap eta_x = b1.eta(), eta_ex = b2.eta();
  const int k = e.ambient().num_objects();
  std::ostringstream err;
  auto fail = [&](const char* law, int d, int p, Id v) {
    err << law << " fails at " << e.ambient().object_name(d) << ", degree " << p << ", simplex " << v;
    return err.str();
  };
  for (int d = 0; d < k; ++d) {
    for (int p = 0; p <= top_degree(ex.value(d), ex.dim()); ++p)
      for (Id v = 0; v < ex.value(d).size(p); ++v) {
        if (multiply(b2, b1, d, p, eta_ex.component[d](p, v)) != v) return fail("mu . eta E = id", d, p, v);
        Id ev = apply_E(b1, b2, d, p, v, [&](int c, int pp, Id y) { return eta_x.component[c](pp, y); });
        if (multiply(b2, b1, d, p, ev) != v) return fail("mu . E eta = id", d, p, v);
      }
    for (int p = 0; p <= top_degree(eeex.value(d), eeex.dim()); ++p)
      for (Id v = 0; v < eeex.value(d).size(p); ++v) {
        Id lhs = multiply(b2, b1, d, p, multiply(b3, b2, d, p, v));
        Id emu = apply_E(b3, b2, d, p, v, [&](int c, int pp, Id y) { return multiply(b2, b1, c, pp, y); });
        if (multiply(b2, b1, d, p, emu) != lhs) return fail("mu . mu E = mu . E mu", d, p, v);
      }
  }
  return std::nullopt;
}

// ---- bar identities and properness ----

std::optional<std::string> check_bar_identities(const BarConstruction& b) {
  const int Q = b.qmax();
  const int k = b.monad().ambient().num_objects();
  std::vector<std::vector<DiagramMap>> face(Q + 2), degen(Q + 1);
  for (int q = 1; q <= Q + 1; ++q)
    for (int i = 0; i <= q; ++i) face[q].push_back(b.face(q, i));
  for (int q = 0; q <= Q; ++q)
    for (int i = 0; i <= q; ++i) degen[q].push_back(b.degen(q, i));
  for (int q = 1; q <= Q + 1; ++q)
    for (int i = 0; i <= q; ++i)
      if (auto e = check_diagram_map(face[q][i], b.level(q), b.level(q - 1)))
        return "d_" + std::to_string(i) + " in bar degree " + std::to_string(q) + ": " + *e;
  for (int q = 0; q <= Q; ++q)
    for (int i = 0; i <= q; ++i)
      if (auto e = check_diagram_map(degen[q][i], b.level(q), b.level(q + 1)))
        return "s_" + std::to_string(i) + " in bar degree " + std::to_string(q) + ": " + *e;
  std::ostringstream err;
  auto where = [&](const char* id, int q, int i, int j, int d, int p, Id v) {
    err << id << " (i=" << i << ", j=" << j << ") fails in bar degree " << q << " at "
        << b.monad().ambient().object_name(d) << ", degree " << p << ", simplex " << v;
    return err.str();
  };
  for (int q = 0; q <= Q + 1; ++q) {
    const Diagram& lv = b.level(q);
    for (int d = 0; d < k; ++d)
      for (int p = 0; p <= top_degree(lv.value(d), lv.dim()); ++p)
        for (Id v = 0; v < lv.value(d).size(p); ++v) {
          if (q >= 2)
            for (int j = 1; j <= q; ++j)
              for (int i = 0; i < j; ++i)
                if (face[q - 1][i].component[d](p, face[q][j].component[d](p, v)) !=
                    face[q - 1][j - 1].component[d](p, face[q][i].component[d](p, v)))
                  return where("d_i d_j = d_{j-1} d_i", q, i, j, d, p, v);
          if (q <= Q) {
            for (int j = 0; j <= q; ++j) {
              Id s = degen[q][j].component[d](p, v);
              for (int i = 0; i <= q + 1; ++i) {
                Id lhs = face[q + 1][i].component[d](p, s);
                Id rhs;
                if (i == j || i == j + 1) rhs = v;
                else if (i < j) rhs = degen[q - 1][j - 1].component[d](p, face[q][i].component[d](p, v));
                else rhs = degen[q - 1][j].component[d](p, face[q][i - 1].component[d](p, v));
                if (lhs != rhs) return where("d_i s_j", q, i, j, d, p, v);
              }
              if (q + 1 <= Q)
                for (int i = 0; i <= j; ++i)
                  if (degen[q + 1][i].component[d](p, s) !=
                      degen[q + 1][j + 1].component[d](p, degen[q][i].component[d](p, v)))
                    return where("s_i s_j = s_{j+1} s_i", q, i, j, d, p, v);
            }
          }
        }
  }
  return std::nullopt;
}

ReedyData reedy_data(const BarConstruction& b) {
  ReedyData r;
  const int k = b.monad().ambient().num_objects();
  for (int q = 0; q < b.qmax(); ++q) {
    std::vector<std::vector<std::vector<std::vector<Id>>>> per_i;
    const Diagram& lv = b.level(q);
    for (int i = 0; i <= q; ++i) {
      DiagramMap s = b.degen(q, i);
      std::vector<std::vector<std::vector<Id>>> per_d(k);
      for (int d = 0; d < k; ++d)
        for (int p = 0; p <= top_degree(lv.value(d), lv.dim()); ++p) per_d[d].push_back(s.component[d].level[p]);
      per_i.push_back(std::move(per_d));
    }
    r.degen.push_back(std::move(per_i));
  }
  return r;
}

bool check_reedy(const ReedyData& r) {
  for (const auto& per_i : r.degen)
    for (const auto& per_d : per_i)
      for (const auto& per_p : per_d)
        for (const auto& tab : per_p) {
          std::vector<Id> seen(tab.begin(), tab.end());
          std::sort(seen.begin(), seen.end());
          if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
        }
  return true;
}

// ---- ε, η and the extra degeneracy ----

EpsEtaData eps_eta_homotopy(const BarConstruction& b, int d, int dim) {
  if (dim > b.algebra().dim()) throw PreconditionError("homotopy degree beyond the algebra's stored degree");
  if (b.monad().variant() == Variant::Product) throw PreconditionError("the extra degeneracy is built for smash variants");
  const BarEngine& e = b.engine(d);
  const int n = b.monad().ambient().arity(d);
  EpsEtaData out{e.diagonal(dim), b.algebra().value(d).with_dim(dim), {}, {}, {}};
  out.eps = SimplicialMap::from_function(out.bar, [&](int m, Id v) -> Id {
    return v == 0 ? 0 : e.epsilon(e.cell(m, m, v), m);
  });
  out.eta = SimplicialMap::from_function(out.target, [&](int m, Id v) -> Id {
    if (v == 0) return 0;
    BarCell c{std::vector<int>(m + 1, d), identity_outer(n), std::vector<BasedMap>(m, BasedMap::identity(n)), v};
    return e.id_of(m, m, c);
  });
  // h_j = s_0^j ∘ s ∘ d_0^j in the bar direction, then s_j in the internal direction.
  SimplicialHomotopy& h = out.homotopy;
  h.f = SimplicialMap::identity(out.bar);
  h.g = compose(out.eta, out.eps);
  h.h.resize(dim);
  for (int m = 0; m < dim; ++m) {
    h.h[m].assign(m + 1, std::vector<Id>(out.bar.size(m), 0));
    for (int j = 0; j <= m; ++j)
      for (Id v = 1; v < out.bar.size(m); ++v) {
        Cell c = e.cell(m, m, v);
        for (int t = 0; t < j && c; ++t) c = e.bar_face(*c, 0, m);
        if (!c) continue;
        BarCell r = e.extra_outer(*c);
        for (int t = 0; t < j; ++t) r = e.bar_degen(r, 0);
        h.h[m][j][v] = e.id_of(m + 1, m + 1, e.simp_degen(r, m, j));
      }
  }
  return out;
}

std::optional<std::string> check_eps_eta(const EpsEtaData& e) {
  if (auto err = check_simplicial_map(e.eps, e.bar, e.target)) return "epsilon: " + *err;
  if (auto err = check_simplicial_map(e.eta, e.target, e.bar)) return "eta: " + *err;
  if (!equal_maps(compose(e.eps, e.eta), SimplicialMap::identity(e.target), e.target))
    return "epsilon . eta is not the identity";
  if (auto err = check_homotopy(e.homotopy, e.bar, e.bar)) return "extra degeneracy homotopy: " + *err;
  return std::nullopt;
}

}  // namespace segal
