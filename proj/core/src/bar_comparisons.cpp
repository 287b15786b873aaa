#include <sstream>

#include "segal/barmachine.hpp"

namespace segal {

namespace {

int top_degree(const GSimplicialSet& s, int dim) { return s.is_discrete() ? 0 : dim; }

std::vector<Id> identity_outer(int n) {
  std::vector<Id> y(n);
  for (int j = 0; j < n; ++j) y[j] = static_cast<Id>(j + 1);
  return y;
}

BasedMap outer_as_map(const std::vector<Id>& y, int target) {
  BasedMap f = BasedMap::zero(static_cast<int>(y.size()), target);
  for (std::size_t i = 0; i < y.size(); ++i) f.set(static_cast<int>(i) + 1, static_cast<int>(y[i]));
  return f;
}

}  // namespace

// r sends [y, f_q, ..., f_1, [c, ψ, x]] with c_i trivial objects to the class of
// (c_q, y, [id, f_q, ..., f_1, ψ·x]) in P(B_q^Σ X)(d).
IsoRReport iso_r(const Diagram& x, CatPtr equivariant, int qmax) {
  IsoRReport rep;
  const CatPtr& f = x.category_ptr();
  if (f->tag() != CatTag::F || equivariant->tag() != CatTag::FG)
    throw PreconditionError("iso_r needs a diagram over F and the category F_G");
  auto incl = f->inclusion_into(*equivariant);
  if (!incl) throw PreconditionError("truncations or groups of the two index categories differ");
  std::vector<int> to_f(equivariant->num_objects(), -1);
  for (int c = 0; c < f->num_objects(); ++c) to_f[(*incl)[c]] = c;

  BarConstruction bs(Monad(CatTag::Sigma, f), x, qmax);
  KanExtension px = kan_extend(x, equivariant);
  BarConstruction bg(Monad(CatTag::SigmaG, equivariant), px.result(), qmax);
  std::vector<KanExtension> pb;
  for (int q = 0; q <= qmax; ++q) pb.push_back(kan_extend(bs.level(q), equivariant));

  const int k = equivariant->num_objects();
  const FinGroup& grp = equivariant->group();
  std::ostringstream err;
  auto fail = [&](const std::string& what, int q, int d, int p, Id v) {
    err << what << " at bar degree " << q << ", " << equivariant->object_name(d) << ", degree " << p
        << ", simplex " << v;
    rep.ok = false;
    rep.failure = err.str();
    return rep;
  };

  // r_q at (d, p) tabulated
  std::vector<std::vector<std::vector<std::vector<Id>>>> r(qmax + 1);
  for (int q = 0; q <= qmax; ++q) {
    const Diagram& src = bg.level(q);
    const Diagram& dst = pb[q].result();
    r[q].resize(k);
    std::vector<std::size_t> sizes;
    for (int d = 0; d < k; ++d) {
      const BarEngine& e = bg.engine(d);
      const int tp = top_degree(src.value(d), src.dim());
      r[q][d].resize(tp + 1);
      sizes.push_back(src.value(d).size(0));
      for (int p = 0; p <= tp; ++p) {
        auto& tab = r[q][d][p];
        tab.assign(src.value(d).size(p), 0);
        for (Id v = 1; v < tab.size(); ++v) {
          const BarCell& c = e.cell(q, p, v);
          auto g = px.representative(c.obj[0], p, c.x);
          BarCell z;
          for (int o : c.obj) z.obj.push_back(to_f[o]);
          const int cq = z.obj.back();
          z.outer = identity_outer(f->arity(cq));
          z.homs = c.homs;
          z.x = x.act(g.c, z.obj[0], g.psi, p, g.x);
          Id zid = bs.engine(cq).id_of(q, p, z);
          tab[v] = pb[q].class_of(d, p, cq, outer_as_map(c.outer, equivariant->arity(d)), zid);
        }
        std::vector<bool> hit(dst.value(d).size(p), false);
        if (dst.value(d).size(p) != tab.size()) return fail("sizes differ", q, d, p, 0);
        for (Id v = 0; v < tab.size(); ++v) {
          if (hit[tab[v]]) return fail("not injective", q, d, p, v);
          hit[tab[v]] = true;
        }
      }
    }
    rep.sizes.push_back(std::move(sizes));
  }

  for (int q = 0; q <= qmax; ++q) {
    const Diagram& src = bg.level(q);
    const Diagram& dst = pb[q].result();
    DiagramMap eps_g = bg.epsilon(q);
    DiagramMap eps_p = kan_map(pb[q], px, bs.epsilon(q));
    std::vector<DiagramMap> pf, ps;
    if (q > 0)
      for (int i = 0; i <= q; ++i) pf.push_back(kan_map(pb[q], pb[q - 1], bs.face(q, i)));
    if (q < qmax)
      for (int i = 0; i <= q; ++i) ps.push_back(kan_map(pb[q], pb[q + 1], bs.degen(q, i)));
    std::vector<DiagramMap> gf, gs;
    if (q > 0)
      for (int i = 0; i <= q; ++i) gf.push_back(bg.face(q, i));
    if (q < qmax)
      for (int i = 0; i <= q; ++i) gs.push_back(bg.degen(q, i));
    for (int d = 0; d < k; ++d) {
      const auto& sv = src.value(d);
      const auto& dv = dst.value(d);
      for (int p = 0; p <= top_degree(sv, src.dim()); ++p)
        for (Id v = 0; v < sv.size(p); ++v) {
          const Id rv = r[q][d][p][v];
          for (int g = 0; g < grp.order(); ++g)
            if (r[q][d][p][sv.act(p, g, v)] != dv.act(p, g, rv)) return fail("not equivariant", q, d, p, v);
          for (int d2 = 0; d2 < k; ++d2)
            for (const auto& phi : equivariant->homs(d, d2))
              if (r[q][d2][p][src.act(d, d2, phi, p, v)] != dst.act(d, d2, phi, p, rv))
                return fail("not natural in " + phi.str(), q, d, p, v);
          if (eps_g.component[d](p, v) != eps_p.component[d](p, rv)) return fail("epsilon differs", q, d, p, v);
          for (std::size_t i = 0; i < gf.size(); ++i)
            if (r[q - 1][d][p][gf[i].component[d](p, v)] != pf[i].component[d](p, rv))
              return fail("face d_" + std::to_string(i) + " differs", q, d, p, v);
          for (std::size_t i = 0; i < gs.size(); ++i)
            if (r[q + 1][d][p][gs[i].component[d](p, v)] != ps[i].component[d](p, rv))
              return fail("degeneracy s_" + std::to_string(i) + " differs", q, d, p, v);
          if (!sv.is_discrete() && p > 0)
            for (int i = 0; i <= p; ++i)
              if (r[q][d][p - 1][sv.face(p, i, v)] != dv.face(p, i, rv))
                return fail("internal face differs", q, d, p, v);
        }
    }
  }
  return rep;
}

ComparisonReport check_comparisons(const Diagram& y, int qmax) {
  ComparisonReport rep;
  const CatPtr& fg = y.category_ptr();
  if (fg->tag() != CatTag::FG) throw PreconditionError("comparison maps need a diagram over F_G");
  BarConstruction bn(Monad(CatTag::NG, fg), y, qmax);
  BarConstruction bs(Monad(CatTag::SigmaG, fg), y, qmax);
  BarConstruction bx(Monad(CatTag::NG, fg, Variant::Product), y, qmax);
  const int k = fg->num_objects();
  const FinGroup& grp = fg->group();
  auto note = [&](bool& flag, const std::string& what, int q, int d, int p, Id v) {
    if (flag && rep.failure.empty()) {
      std::ostringstream os;
      os << what << " at bar degree " << q << ", " << fg->object_name(d) << ", degree " << p << ", simplex " << v;
      rep.failure = os.str();
    }
    flag = false;
  };

  for (int q = 0; q <= qmax; ++q) {
    std::vector<DiagramMap> nf, sf, xf, nd, sd, xd;
    if (q > 0)
      for (int i = 0; i <= q; ++i) {
        nf.push_back(bn.face(q, i));
        sf.push_back(bs.face(q, i));
        xf.push_back(bx.face(q, i));
      }
    if (q < qmax)
      for (int i = 0; i <= q; ++i) {
        nd.push_back(bn.degen(q, i));
        sd.push_back(bs.degen(q, i));
        xd.push_back(bx.degen(q, i));
      }
    const Diagram& ln = bn.level(q);
    const Diagram& ls = bs.level(q);
    const Diagram& lx = bx.level(q);
    for (int d = 0; d < k; ++d) {
      const BarEngine& en = bn.engine(d);
      const BarEngine& es = bs.engine(d);
      const BarEngine& ex = bx.engine(d);
      for (int p = 0; p <= top_degree(ln.value(d), ln.dim()); ++p) {
        auto qmap = [&](int qq, Id v) { return v == 0 ? Id{0} : bs.engine(d).id_of(qq, p, bn.engine(d).cell(qq, p, v)); };
        auto pmap = [&](int qq, Id v) -> Id {
          if (v == 0) return 0;
          const BarCell& c = bx.engine(d).cell(qq, p, v);
          return bn.engine(d).id_of(qq, p, c);
        };
        // q
        std::vector<bool> hit(ls.value(d).size(p), false);
        for (Id v = 0; v < ln.value(d).size(p); ++v) {
          Id w = qmap(q, v);
          hit[w] = true;
          if (v != 0 && es.epsilon(es.cell(q, p, w), p) != en.epsilon(en.cell(q, p, v), p))
            note(rep.eps_q, "epsilon . q != epsilon", q, d, p, v);
          for (std::size_t i = 0; i < nf.size(); ++i)
            if (sf[i].component[d](p, w) != qmap(q - 1, nf[i].component[d](p, v)))
              note(rep.q_simplicial, "q does not commute with d_" + std::to_string(i), q, d, p, v);
          for (std::size_t i = 0; i < nd.size(); ++i)
            if (sd[i].component[d](p, w) != qmap(q + 1, nd[i].component[d](p, v)))
              note(rep.q_simplicial, "q does not commute with s_" + std::to_string(i), q, d, p, v);
          for (int g = 0; g < grp.order(); ++g)
            if (ls.value(d).act(p, g, w) != qmap(q, ln.value(d).act(p, g, v)))
              note(rep.q_simplicial, "q is not equivariant", q, d, p, v);
        }
        for (bool h : hit)
          if (!h) note(rep.q_surjective, "q misses a simplex", q, d, p, 0);
        // p
        hit.assign(ln.value(d).size(p), false);
        for (Id v = 0; v < lx.value(d).size(p); ++v) {
          Id w = pmap(q, v);
          hit[w] = true;
          if (v == 0) continue;
          const BarCell& c = ex.cell(q, p, v);
          bool has_base = c.x == 0 || std::any_of(c.homs.begin(), c.homs.end(), [](const BasedMap& h) { return h.is_zero(); });
          if (has_base != (w == 0)) note(rep.p_collapse, "p collapses the wrong simplices", q, d, p, v);
          Id eps_w = w == 0 ? 0 : en.epsilon(en.cell(q, p, w), p);
          if (eps_w != ex.epsilon(c, p)) note(rep.eps_p, "epsilon . p != epsilon", q, d, p, v);
          for (std::size_t i = 0; i < xf.size(); ++i)
            if (nf[i].component[d](p, w) != pmap(q - 1, xf[i].component[d](p, v)))
              note(rep.p_simplicial, "p does not commute with d_" + std::to_string(i), q, d, p, v);
          for (std::size_t i = 0; i < xd.size(); ++i)
            if (nd[i].component[d](p, w) != pmap(q + 1, xd[i].component[d](p, v)))
              note(rep.p_simplicial, "p does not commute with s_" + std::to_string(i), q, d, p, v);
          for (int g = 0; g < grp.order(); ++g)
            if (ln.value(d).act(p, g, w) != pmap(q, lx.value(d).act(p, g, v)))
              note(rep.p_simplicial, "p is not equivariant", q, d, p, v);
        }
        for (bool h : hit)
          if (!h) note(rep.p_surjective, "p misses a simplex", q, d, p, 0);
      }
    }
  }
  rep.reedy = check_reedy(bn) && check_reedy(bs) && check_reedy(bx);
  if (!rep.reedy && rep.failure.empty()) rep.failure = "a bar degeneracy is not injective";
  return rep;
}

NFailureReport demo_N_failure(GroupPtr group) {
  if (group->order() == 1) throw PreconditionError("the collapse needs a nontrivial group");
  const int n = std::max(2, group->order());
  auto nat = make_category(CatTag::N, group, n);
  auto nat_g = make_category(CatTag::NG, group, n);
  KanExtension p = kan_extend(unit_diagram(nat, 0), nat_g);
  const int reg = *nat_g->find_object(group->order(), GSetAction::regular(group));
  NFailureReport rep;
  rep.size_at_regular = p.result().value(reg).size(0);
  rep.size_at_trivial = p.result().value(nat_g->trivial_object(2)).size(0);
  rep.pass = rep.size_at_regular == 1 && rep.size_at_trivial > 1;
  std::ostringstream os;
  os << "Prolonging I from N to N_G: at the regular action " << nat_g->object_name(reg) << " the value has "
     << rep.size_at_regular << " point(s); at the trivial action (2;11) it has " << rep.size_at_trivial
     << ".\nN_G has no morphisms between objects with different actions, so the left Kan extension "
        "sees no summand at a non-trivial action and is the basepoint there. The N-indexed machine "
        "therefore forgets every non-trivial G-set, which is why the equivariant construction uses N_G.";
  rep.explanation = os.str();
  return rep;
}

}  // namespace segal
