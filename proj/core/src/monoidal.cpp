#include "segal/monoidal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "detail/union_find.hpp"

namespace segal {

namespace {

void require_plain_F(const IndexCategory& c, const char* what) {
  if (c.tag() != CatTag::F) throw PreconditionError(std::string(what) + " must be a diagram over F");
}

int dim_of(std::initializer_list<const Diagram*> ds) {
  int d = -1;
  for (const Diagram* x : ds)
    if (!x->is_discrete()) d = d < 0 ? x->dim() : std::min(d, x->dim());
  return std::max(d, 0);
}

// (j, a) in a free diagram F₁A at degree p.
std::pair<int, Id> free_split(const GSimplicialSet& a, int p, Id z) {
  if (z == 0) return {0, 0};
  const Id s = a.size(p) - 1;
  return {1 + static_cast<int>((z - 1) / s), 1 + (z - 1) % s};
}
Id free_join(const GSimplicialSet& a, int p, int j, Id x) {
  if (j == 0 || x == 0) return 0;
  return 1 + static_cast<Id>(j - 1) * (a.size(p) - 1) + (x - 1);
}

std::string cell_str(const Cell& c) { return c ? c->str() : std::string("*"); }

BarCell transport(const BarCell& c, const IndexCategory& from, const IndexCategory& to) {
  BarCell out = c;
  for (int& o : out.obj) o = to.trivial_object(from.arity(o));
  return out;
}

// Appends coordinates of an S^W simplex to every outer entry, before or after V's.
BarCell with_sphere(const BarCell& c, int p, int kv, int kw, Id w, bool front) {
  BarCell out = c;
  const auto tw = sphere_coords(kw, p, w);
  for (auto& y : out.outer) {
    if (y == 0) continue;
    auto t = sphere_coords(kv, p, y);
    if (front) t.insert(t.begin(), tw.begin(), tw.end());
    else t.insert(t.end(), tw.begin(), tw.end());
    y = sphere_id(p, t);
  }
  return out;
}

// [(w), id_1, ..., id_1, x] at object 1.
BarCell unit_cell(const IndexCategory& cat, int q, Id w, Id x) {
  const int one = cat.trivial_object(1);
  return BarCell{std::vector<int>(q + 1, one), {w}, std::vector<BasedMap>(q, BasedMap::identity(1)), x};
}

// Cells of one level grouped by their arity tuples.
using Buckets = std::map<std::vector<int>, std::vector<Id>>;
Buckets buckets(const BarEngine& e, int q, int p) {
  Buckets out;
  const IndexCategory& cat = e.algebra().category();
  for (Id a = 1; a < e.size(q, p); ++a) {
    const BarCell& c = e.cell(q, p, a);
    std::vector<int> ar;
    for (int o : c.obj) ar.push_back(cat.arity(o));
    out[ar].push_back(a);
  }
  return out;
}
bool fits(const std::vector<int>& a, const std::vector<int>& b, int bound) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] * b[k] > bound) return false;
  return true;
}
// Raw equality implies equal orbits, so canonical forms are only computed on mismatch.
bool same_orbit(const BarEngine& t, const Cell& u, const Cell& v, int p) {
  return u == v || t.canonical(u, p) == t.canonical(v, p);
}

std::vector<int> times(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
  return out;
}

}  // namespace

// ---- external pairings ----

std::optional<std::string> check_pairing(const ExternalPairing& e) {
  const IndexCategory &cx = e.x.category(), &cy = e.y.category(), &cz = e.z.category();
  require_plain_F(cx, "pairing source");
  require_plain_F(cy, "pairing source");
  require_plain_F(cz, "pairing target");
  const int dim = dim_of({&e.x, &e.y, &e.z});
  const int nz = cz.truncation();
  std::ostringstream err;
  for (int m = 1; m <= cx.truncation(); ++m)
    for (int n = 1; n <= cy.truncation() && m * n <= nz; ++n) {
      const int om = cx.trivial_object(m), on = cy.trivial_object(n), omn = cz.trivial_object(m * n);
      const GSimplicialSet &xm = e.x.value(om), &yn = e.y.value(on), &zmn = e.z.value(omn);
      for (int p = 0; p <= dim; ++p)
        for (Id a = 0; a < xm.size(p); ++a)
          for (Id b = 0; b < yn.size(p); ++b) {
            auto where = [&](const char* what) {
              err << what << " at (m, n) = (" << m << ", " << n << "), degree " << p << ", (" << a << ", " << b << ")";
              return err.str();
            };
            const Id z = e(m, n, p, a, b);
            if ((a == 0 || b == 0) && z != 0) return where("basepoint not preserved");
            if (z >= zmn.size(p)) return where("value out of range");
            for (int g = 0; g < cz.group().order(); ++g)
              if (e(m, n, p, xm.act(p, g, a), yn.act(p, g, b)) != zmn.act(p, g, z)) return where("not equivariant");
            if (p > 0)
              for (int i = 0; i <= p; ++i)
                if (e(m, n, p - 1, xm.face(p, i, a), yn.face(p, i, b)) != zmn.face(p, i, z))
                  return where("does not commute with faces");
            for (int m2 = 1; m2 <= cx.truncation(); ++m2)
              for (int n2 = 1; n2 <= cy.truncation() && m2 * n2 <= nz; ++n2) {
                const int om2 = cx.trivial_object(m2), on2 = cy.trivial_object(n2), omn2 = cz.trivial_object(m2 * n2);
                for (const BasedMap& al : cx.homs(om, om2)) {
                  const Id a2 = e.x.act(om, om2, al, p, a);
                  for (const BasedMap& be : cy.homs(on, on2)) {
                    const Id lhs = e(m2, n2, p, a2, e.y.act(on, on2, be, p, b));
                    if (lhs != e.z.act(omn, omn2, smash_based(al, be), p, z)) return where("not natural");
                  }
                }
              }
          }
    }
  return std::nullopt;
}

ExternalPairing free_pairing(CatPtr cat_a, const GSimplicialSet& a, CatPtr cat_b, const GSimplicialSet& b,
                             CatPtr target) {
  require_plain_F(*cat_a, "free pairing source");
  require_plain_F(*cat_b, "free pairing source");
  require_plain_F(*target, "free pairing target");
  auto sp = std::make_shared<SmashProduct>(smash(a, b));
  Diagram x = free_diagram(cat_a, a), y = free_diagram(cat_b, b), z = free_diagram(target, sp->set);
  auto pair = [a, b, sp](int, int n, int p, Id u, Id v) -> Id {
    if (u == 0 || v == 0) return 0;
    auto [j, s] = free_split(a, p, u);
    auto [k, t] = free_split(b, p, v);
    return free_join(sp->set, p, lex_index(j, k, n), sp->pair(p, s, t));
  };
  return ExternalPairing{std::move(x), std::move(y), std::move(z), pair};
}

RPairing R_monoidal(CatPtr cat, const AbGroup& a, const AbGroup& b, CatPtr target, int dim) {
  require_plain_F(*cat, "R pairing source");
  TensorProduct t = tensor_ab(a, b);
  AbGroup ab(t.group.orders(), cat->group_ptr());
  Diagram x = R_diagram(cat, a, dim), y = R_diagram(cat, b, dim), z = R_diagram(target, ab, dim);
  auto pair = [a, b, ab, t](int m, int n, int, Id u, Id v) -> Id {
    auto s = r_decode(a, m, u);
    auto r = r_decode(b, n, v);
    std::vector<AbGroup::Elem> out(m * n);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) out[lex_index(i, j, n) - 1] = t(s[i - 1], r[j - 1]);
    return r_encode(ab, out);
  };
  return RPairing{t, ExternalPairing{std::move(x), std::move(y), std::move(z), pair}};
}

ExternalPairing ring_pairing(CatPtr cat_a, CatPtr cat_b, const RingObject& r, CatPtr target, int dim) {
  AbGroup a(r.additive.orders(), cat_a->group_ptr());
  Diagram x = R_diagram(cat_a, a, dim), y = R_diagram(cat_b, a, dim), z = R_diagram(target, a, dim);
  auto pair = [a, r](int m, int n, int, Id u, Id v) -> Id {
    auto s = r_decode(a, m, u);
    auto t = r_decode(a, n, v);
    std::vector<AbGroup::Elem> out(m * n);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) out[lex_index(i, j, n) - 1] = a.normalize(r.mul(s[i - 1], t[j - 1]));
    return r_encode(a, out);
  };
  return ExternalPairing{std::move(x), std::move(y), std::move(z), pair};
}

// ---- h ----

namespace {

GSimplicialSet plus_points(const GSetAction& s) {
  std::vector<std::vector<Id>> act(s.group().order(), std::vector<Id>(s.size() + 1));
  for (int g = 0; g < s.group().order(); ++g)
    for (int i = 0; i <= s.size(); ++i) act[g][i] = s[g](i);
  return GSimplicialSet::discrete(s.group_ptr(), 0, s.size() + 1, std::move(act));
}

}  // namespace

HMap::HMap(CatPtr cat, GSetAction s) : cat_(cat), s_(std::move(s)), source_(free_diagram(cat, plus_points(s_))) {
  if (!(s_.group() == cat_->group())) throw PreconditionError("h: G-set over a different group");
}

std::vector<std::vector<long long>> HMap::operator()(int c, Id z) const {
  std::vector<std::vector<long long>> out(cat_->arity(c), std::vector<long long>(s_.size(), 0));
  if (z == 0) return out;
  const Id k = static_cast<Id>(s_.size());
  out[(z - 1) / k][(z - 1) % k] = 1;
  return out;
}

std::vector<std::vector<long long>> HMap::push(const BasedMap& f, const std::vector<std::vector<long long>>& v) const {
  std::vector<std::vector<long long>> out(f.target(), std::vector<long long>(s_.size(), 0));
  for (int i = 1; i <= f.source(); ++i)
    if (f(i))
      for (int t = 0; t < s_.size(); ++t) out[f(i) - 1][t] += v[i - 1][t];
  return out;
}

std::vector<std::vector<long long>> HMap::act(int c, int g, const std::vector<std::vector<long long>>& v) const {
  std::vector<std::vector<long long>> out(v.size(), std::vector<long long>(s_.size(), 0));
  for (int r = 1; r <= static_cast<int>(v.size()); ++r)
    for (int t = 1; t <= s_.size(); ++t) out[cat_->act_point(c, g, r) - 1][s_[g](t) - 1] = v[r - 1][t - 1];
  return out;
}

HMap h_map(CatPtr cat, const GSetAction& s) { return HMap(std::move(cat), s); }

std::optional<std::string> check_h_map(const HMap& h) {
  const Diagram& x = h.source();
  const IndexCategory& cat = x.category();
  std::ostringstream err;
  for (int c = 0; c < cat.num_objects(); ++c) {
    std::vector<std::vector<std::vector<long long>>> seen;
    for (Id z = 0; z < x.value(c).size(0); ++z) {
      const auto hz = h(c, z);
      if (z > 0) seen.push_back(hz);
      for (int g = 0; g < cat.group().order(); ++g)
        if (h(c, x.value(c).act(0, g, z)) != h.act(c, g, hz)) {
          err << "h not equivariant at " << cat.object_name(c) << ", element " << z;
          return err.str();
        }
      for (int d = 0; d < cat.num_objects(); ++d)
        for (const BasedMap& f : cat.homs(c, d))
          if (h(d, x.act(c, d, f, 0, z)) != h.push(f, hz)) {
            err << "h not natural for " << f.str() << " at element " << z;
            return err.str();
          }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return "h not injective at " + cat.object_name(c);
  }
  return std::nullopt;
}

// ---- truncated Day convolution ----

namespace {

struct DayTables {
  DayTables(CatPtr t, Diagram a, Diagram b, int ga, int gb)
      : target(std::move(t)), x(std::move(a)), y(std::move(b)), gx(ga), gy(gb) {}
  CatPtr target;
  Diagram x, y;
  int gx = 0, gy = 0, dim = 0;
  bool discrete = false;
  struct Table {
    std::map<std::pair<int, int>, Id> offset;  // (m, n) -> first node
    std::vector<DaySmash::Generator> gen;       // by node, [0] is the basepoint
    std::vector<Id> cls;                        // node -> class
    std::vector<Id> rep;                        // class -> node
  };
  std::vector<std::vector<Table>> t;  // [k][p]

  int sp(int p) const { return discrete ? 0 : p; }

  Id node(int k, int p, const DaySmash::Generator& g) const {
    if (g.x == 0 || g.y == 0 || g.psi.is_zero()) return 0;
    const Table& tb = t[k][sp(p)];
    const int omn = target->trivial_object(g.m * g.n);
    const int h = target->hom_index(omn, k, g.psi);
    if (h < 0) throw PreconditionError("coend generator outside the category");
    const Id sx = x.value(x.category().trivial_object(g.m)).size(p) - 1;
    const Id sy = y.value(y.category().trivial_object(g.n)).size(p) - 1;
    return tb.offset.at({g.m, g.n}) + (static_cast<Id>(h) * sx + (g.x - 1)) * sy + (g.y - 1);
  }

  void build(int k, int p) {
    Table& tb = t[k][p];
    const IndexCategory &cx = x.category(), &cy = y.category();
    tb.gen.push_back({});
    for (int m = 1; m <= gx; ++m)
      for (int n = 1; n <= gy && m * n <= target->truncation(); ++n) {
        const int om = cx.trivial_object(m), on = cy.trivial_object(n), omn = target->trivial_object(m * n);
        tb.offset[{m, n}] = static_cast<Id>(tb.gen.size());
        const Id sx = x.value(om).size(p), sy = y.value(on).size(p);
        for (const BasedMap& psi : target->homs(omn, k))
          for (Id a = 1; a < sx; ++a)
            for (Id b = 1; b < sy; ++b) tb.gen.push_back({m, n, psi, a, b});
      }
    detail::MinUnionFind uf(tb.gen.size());
    for (std::uint32_t i = 1; i < tb.gen.size(); ++i) {
      const auto& g = tb.gen[i];
      if (g.psi.is_zero()) uf.unite(i, 0);
    }
    // (ψ∘(α∧β), x, y) ~ (ψ, α·x, β·y)
    for (int m = 1; m <= gx; ++m)
      for (int n = 1; n <= gy && m * n <= target->truncation(); ++n)
        for (int m2 = 1; m2 <= gx; ++m2)
          for (int n2 = 1; n2 <= gy && m2 * n2 <= target->truncation(); ++n2) {
            const int om = cx.trivial_object(m), on = cy.trivial_object(n);
            const int om2 = cx.trivial_object(m2), on2 = cy.trivial_object(n2), omn2 = target->trivial_object(m2 * n2);
            const Id sx = x.value(om).size(p), sy = y.value(on).size(p);
            for (const BasedMap& al : cx.homs(om, om2))
              for (const BasedMap& be : cy.homs(on, on2)) {
                const BasedMap ab = smash_based(al, be);
                for (const BasedMap& psi : target->homs(omn2, k)) {
                  const BasedMap comp = compose_based(psi, ab);
                  for (Id a = 1; a < sx; ++a) {
                    const Id a2 = x.act(om, om2, al, p, a);
                    for (Id b = 1; b < sy; ++b) {
                      const Id lhs = node(k, p, {m, n, comp, a, b});
                      const Id rhs = a2 == 0 ? 0 : node(k, p, {m2, n2, psi, a2, y.act(on, on2, be, p, b)});
                      uf.unite(lhs, rhs);
                    }
                  }
                }
              }
          }
    std::vector<std::uint32_t> roots;
    auto c = uf.classes(&roots);
    tb.cls.assign(c.begin(), c.end());
    tb.rep.assign(roots.begin(), roots.end());
  }
};

}  // namespace

struct DaySmash::Impl {
  std::shared_ptr<DayTables> t;
  Diagram result;
};

DaySmash::DaySmash(const Diagram& x, const Diagram& y, int gx, int gy, CatPtr target) {
  require_plain_F(x.category(), "Day convolution factor");
  require_plain_F(y.category(), "Day convolution factor");
  require_plain_F(*target, "Day convolution target");
  if (gx < 1 || gy < 1 || gx > x.category().truncation() || gy > y.category().truncation())
    throw PreconditionError("generation degrees outside the truncations");
  auto t = std::make_shared<DayTables>(target, x, y, gx, gy);
  t->discrete = x.is_discrete() && y.is_discrete();
  t->dim = t->discrete ? std::max(x.dim(), y.dim()) : dim_of({&x, &y});
  const int stored = t->discrete ? 0 : t->dim;
  t->t.assign(target->num_objects(), std::vector<DayTables::Table>(stored + 1));
  for (int k = 0; k < target->num_objects(); ++k)
    for (int p = 0; p <= stored; ++p) t->build(k, p);

  const FinGroup& grp = target->group();
  std::vector<GSimplicialSet> vals;
  for (int k = 0; k < target->num_objects(); ++k) {
    auto shifted = [t, k](int p, Id cls, auto&& f) -> Id {
      auto g = t->t[k][t->sp(p)].gen[t->t[k][t->sp(p)].rep[cls]];
      return f(g);
    };
    auto cls_of = [t, k](int p, const DaySmash::Generator& g) { return t->t[k][t->sp(p)].cls[t->node(k, p, g)]; };
    auto act = [=](int p, int gi, Id c) {
      return shifted(p, c, [&](DaySmash::Generator g) {
        const IndexCategory &cx = t->x.category(), &cy = t->y.category();
        g.x = t->x.value(cx.trivial_object(g.m)).act(p, gi, g.x);
        g.y = t->y.value(cy.trivial_object(g.n)).act(p, gi, g.y);
        return cls_of(p, g);
      });
    };
    const Id size0 = static_cast<Id>(t->t[k][0].rep.size());
    if (t->discrete) {
      std::vector<std::vector<Id>> tab(grp.order(), std::vector<Id>(size0));
      for (int g = 0; g < grp.order(); ++g)
        for (Id c = 0; c < size0; ++c) tab[g][c] = act(0, g, c);
      vals.push_back(GSimplicialSet::discrete(target->group_ptr(), t->dim, size0, std::move(tab)));
      continue;
    }
    auto simplicial = [=](int p, int i, Id c, int dp) {
      return shifted(p, c, [&](DaySmash::Generator g) {
        const IndexCategory &cx = t->x.category(), &cy = t->y.category();
        const auto &xv = t->x.value(cx.trivial_object(g.m)), &yv = t->y.value(cy.trivial_object(g.n));
        g.x = dp < 0 ? xv.face(p, i, g.x) : xv.degen(p, i, g.x);
        g.y = dp < 0 ? yv.face(p, i, g.y) : yv.degen(p, i, g.y);
        return cls_of(p + dp, g);
      });
    };
    vals.push_back(GSimplicialSet::from_functions(
        target->group_ptr(), t->dim, [t, k](int p) { return static_cast<Id>(t->t[k][p].rep.size()); },
        [=](int p, int i, Id c) { return simplicial(p, i, c, -1); },
        [=](int p, int i, Id c) { return simplicial(p, i, c, 1); }, act));
  }
  auto impl = std::make_shared<Impl>(Impl{t, Diagram(
                                                 target, std::move(vals),
                                                 [t](int k, int k2, const BasedMap& f, int p, Id c) -> Id {
                                                   if (c == 0) return 0;
                                                   const auto& tb = t->t[k][t->sp(p)];
                                                   auto g = tb.gen[tb.rep[c]];
                                                   g.psi = compose_based(f, g.psi);
                                                   return t->t[k2][t->sp(p)].cls[t->node(k2, p, g)];
                                                 },
                                                 x.name() + "^" + y.name())});
  impl_ = std::move(impl);
}

const Diagram& DaySmash::result() const { return impl_->result; }

Id DaySmash::class_of(int k, int p, const Generator& gen) const {
  const auto& t = *impl_->t;
  return t.t[k][t.sp(p)].cls[t.node(k, p, gen)];
}

DaySmash::Generator DaySmash::representative(int k, int p, Id cls) const {
  const auto& t = *impl_->t;
  const auto& tb = t.t[k][t.sp(p)];
  return tb.gen[tb.rep[cls]];
}

std::optional<std::string> generation_certificate(const Diagram& x, int g) {
  require_plain_F(x.category(), "certified diagram");
  CatPtr cat = x.category_ptr();
  DaySmash d(x, unit_diagram(cat, x.dim()), g, 1, cat);
  const Diagram& px = d.result();
  const int dim = x.is_discrete() ? 0 : x.dim();
  std::ostringstream err;
  for (int k = 0; k < cat->num_objects(); ++k)
    for (int p = 0; p <= dim; ++p) {
      // counit [ψ, x, 1] ↦ X(ψ)(x)
      auto counit = [&](const DaySmash::Generator& gen) {
        return x.act(cat->trivial_object(gen.m), k, gen.psi, p, gen.x);
      };
      const Id n = px.value(k).size(p);
      std::vector<Id> image(n, 0);
      std::vector<char> hit(x.value(k).size(p), 0);
      hit[0] = 1;
      for (Id c = 1; c < n; ++c) {
        image[c] = counit(d.representative(k, p, c));
        if (hit[image[c]]) {
          err << "counit not injective at " << cat->object_name(k) << ", degree " << p;
          return err.str();
        }
        hit[image[c]] = 1;
      }
      for (Id v = 0; v < hit.size(); ++v)
        if (!hit[v]) {
          err << "element " << v << " of " << cat->object_name(k) << " in degree " << p << " is not generated in degrees <= "
              << g;
          return err.str();
        }
      // well-definedness on every generator
      for (int m = 1; m <= g; ++m) {
        const int om = cat->trivial_object(m);
        for (const BasedMap& psi : cat->homs(om, k))
          for (Id a = 1; a < x.value(om).size(p); ++a) {
            DaySmash::Generator gen{m, 1, psi, a, 1};
            if (image[d.class_of(k, p, gen)] != counit(gen)) {
              err << "counit not well defined at " << cat->object_name(k) << ", degree " << p;
              return err.str();
            }
          }
      }
    }
  return std::nullopt;
}

DaySmash day_smash_generated(const Diagram& x, const Diagram& y, int gx, int gy, CatPtr target) {
  if (auto e = generation_certificate(x, gx)) throw VerificationError("left factor: " + *e);
  if (auto e = generation_certificate(y, gy)) throw VerificationError("right factor: " + *e);
  return DaySmash(x, y, gx, gy, std::move(target));
}

DayFreeReport day_smash_free(CatPtr cat, const GSimplicialSet& a, const GSimplicialSet& b) {
  Diagram fa = free_diagram(cat, a), fb = free_diagram(cat, b);
  SmashProduct ab = smash(a, b);
  DayFreeReport r{day_smash_generated(fa, fb, 1, 1, cat), free_diagram(cat, ab.set), {}};
  const Diagram& d = r.day.result();
  for (int k = 0; k < cat->num_objects(); ++k)
    r.comparison.component.push_back(SimplicialMap::from_function(d.value(k), [&](int p, Id c) -> Id {
      if (c == 0) return 0;
      auto g = r.day.representative(k, p, c);
      auto [j, s] = free_split(a, p, g.x);
      auto [j2, t] = free_split(b, p, g.y);
      return free_join(ab.set, p, g.psi(lex_index(j, j2, 1)), ab.pair(p, s, t));
    }));
  return r;
}

std::optional<std::string> check_day_smash_free(const DayFreeReport& r) {
  if (auto e = check_diagram_map(r.comparison, r.day.result(), r.free)) return "comparison: " + *e;
  if (!is_isomorphism(r.comparison, r.day.result(), r.free)) return "comparison is not an isomorphism";
  return std::nullopt;
}

// ---- φ ----

Phi::Phi(ExternalPairing pairing, const GSetAction& v, const GSetAction& w, int dim, CatTag ground)
    : e_(std::move(pairing)), kv_(v.size()), kw_(w.size()), dim_(dim) {
  if (ground != CatTag::Sigma && ground != CatTag::N) throw PreconditionError("φ is built over Σ or ℕ");
  const IndexCategory &cx = e_.x.category(), &cy = e_.y.category(), &cz = e_.z.category();
  require_plain_F(cx, "φ factor");
  require_plain_F(cy, "φ factor");
  require_plain_F(cz, "φ target");
  auto eng = [&](const Diagram& d, const GSetAction& s) {
    auto sph = std::make_shared<const GSimplicialSet>(sphere(s, dim));
    return std::make_shared<BarEngine>(Monad(ground, d.category_ptr()), d, Outer::space(sph));
  };
  left_ = eng(e_.x, v);
  right_ = eng(e_.y, w);
  target_ = eng(e_.z, disjoint_union(v, w));
  for (int c = 0; c < cx.num_objects(); ++c) ax_.push_back(cx.arity(c));
  for (int c = 0; c < cy.num_objects(); ++c) ay_.push_back(cy.arity(c));
  for (int n = 0; n <= cz.truncation(); ++n) objz_.push_back(cz.trivial_object(n));
  for (int p = 0; p <= dim; ++p) {
    Id x = 1;
    for (int i = 0; i < kw_; ++i) x *= static_cast<Id>(p);
    pw_.push_back(x);
  }
}

bool Phi::defined(const BarCell& a, const BarCell& b) const {
  if (a.obj.size() != b.obj.size()) throw PreconditionError("φ pairs cells of equal bar degree");
  const int bound = static_cast<int>(objz_.size()) - 1;
  for (std::size_t k = 0; k < a.obj.size(); ++k)
    if (ax_[a.obj[k]] * ay_[b.obj[k]] > bound) return false;
  return true;
}

Cell Phi::operator()(const BarCell& a, const BarCell& b, int p) const {
  BarCell c;
  if (!product(a, b, p, c)) return std::nullopt;
  return c;
}

bool Phi::product(const BarCell& a, const BarCell& b, int p, BarCell& c) const {
  if (!defined(a, b)) throw PreconditionError("φ: object product above the target truncation");
  if (left_->is_base(a) || right_->is_base(b)) return false;
  c.x = e_(ax_[a.obj[0]], ay_[b.obj[0]], p, a.x, b.x);
  if (c.x == 0) return false;
  c.obj.resize(a.obj.size());
  for (std::size_t k = 0; k < a.obj.size(); ++k) c.obj[k] = objz_[ax_[a.obj[k]] * ay_[b.obj[k]]];
  c.homs.resize(a.homs.size());
  for (std::size_t k = 0; k < a.homs.size(); ++k) c.homs[k] = smash_based(a.homs[k], b.homs[k]);
  // concatenated sphere coordinates: (v, w) ↦ 1 + (v - 1) p^|W| + (w - 1)
  const std::size_t n = b.outer.size();
  const Id pw = pw_[p];
  c.outer.assign(a.outer.size() * n, 0);
  for (std::size_t i = 0; i < a.outer.size(); ++i) {
    if (a.outer[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b.outer[j] != 0) c.outer[i * n + j] = 1 + (a.outer[i] - 1) * pw + (b.outer[j] - 1);
  }
  return !target_->is_base(c);
}

Id Phi::apply(int q, int p, Id a, Id b) const {
  if (a == 0 || b == 0) return 0;
  return target_->id_of(q, p, (*this)(left_->cell(q, p, a), right_->cell(q, p, b), p));
}

BarCell random_representative(const BarEngine& e, const BarCell& c, int p, std::uint64_t seed) {
  if (e.monad().ground() == CatTag::N) return c;
  if (e.monad().ground() != CatTag::Sigma) throw PreconditionError("random representatives are built over Σ");
  const IndexCategory& cat = e.algebra().category();
  std::mt19937_64 rng(seed);
  std::vector<Permutation> s;
  for (int o : c.obj) {
    std::vector<int> im(cat.arity(o));
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = static_cast<int>(i) + 1;
    std::shuffle(im.begin(), im.end(), rng);
    s.emplace_back(std::move(im));
  }
  BarCell out = c;
  const int q = c.q();
  for (int k = 0; k < q; ++k)
    out.homs[k] = compose_based(BasedMap::from_permutation(s[k + 1]),
                                compose_based(c.homs[k], BasedMap::from_permutation(s[k].inverse())));
  for (std::size_t i = 1; i <= c.outer.size(); ++i) out.outer[s[q](static_cast<int>(i)) - 1] = c.outer[i - 1];
  out.x = e.algebra().act(c.obj[0], c.obj[0], BasedMap::from_permutation(s[0]), p, c.x);
  return out;
}

std::optional<std::string> check_phi(const Phi& phi, int qmax) {
  const BarEngine &l = phi.left(), &r = phi.right(), &t = phi.target();
  const int bound = phi.pairing().z.category().truncation();
  const FinGroup& grp = phi.pairing().z.category().group();
  for (int q = 0; q <= qmax; ++q)
    for (int p = 0; p <= phi.dim(); ++p) {
      const Buckets bl = buckets(l, q, p), br = buckets(r, q, p);
      // one shuffled representative per cell
      auto shuffled = [p, q](const BarEngine& e, std::uint64_t salt) -> std::optional<std::vector<BarCell>> {
        std::vector<BarCell> out(e.size(q, p));
        for (Id a = 1; a < e.size(q, p); ++a) {
          out[a] = random_representative(e, e.cell(q, p, a), p, salt * 1000003u + a);
          if (e.canonical(out[a], p) != Cell(e.cell(q, p, a))) return std::nullopt;
        }
        return out;
      };
      const auto rl = shuffled(l, 2 * q + 1), rr = shuffled(r, 2 * q + 2);
      if (!rl || !rr) return "orbit representative left its orbit at bar degree " + std::to_string(q);
      for (const auto& [ka, va] : bl)
        for (const auto& [kb, vb] : br) {
          if (!fits(ka, kb, bound)) continue;
          for (Id ia : va)
            for (Id ib : vb) {
              const BarCell &a = l.cell(q, p, ia), &b = r.cell(q, p, ib);
              const Cell c = phi(a, b, p);
              auto fail = [&](const std::string& what) {
                return what + " at bar degree " + std::to_string(q) + ", degree " + std::to_string(p) + ": " + a.str() +
                       " and " + b.str();
              };
              auto phi_of = [&](const Cell& u, const Cell& v, int pp) -> Cell {
                if (!u || !v) return std::nullopt;
                return phi(*u, *v, pp);
              };
              if (!same_orbit(t, phi((*rl)[ia], (*rr)[ib], p), c, p)) return fail("φ does not descend to orbits");
              if (!c) continue;
              for (int g = 0; g < grp.order(); ++g)
                if (!same_orbit(t, phi(l.act(a, p, g), r.act(b, p, g), p), t.act(*c, p, g), p))
                  return fail("φ not equivariant");
              for (int i = 0; q > 0 && i <= q; ++i)
                if (!same_orbit(t, phi_of(l.bar_face(a, i, p), r.bar_face(b, i, p), p), t.bar_face(*c, i, p), p))
                  return fail("φ does not commute with bar face " + std::to_string(i));
              for (int i = 0; q < qmax && i <= q; ++i)
                if (!same_orbit(t, phi(l.bar_degen(a, i), r.bar_degen(b, i), p), t.bar_degen(*c, i), p))
                  return fail("φ does not commute with bar degeneracy " + std::to_string(i));
              for (int i = 0; p > 0 && i <= p; ++i)
                if (!same_orbit(t, phi_of(l.simp_face(a, p, i), r.simp_face(b, p, i), p - 1), t.simp_face(*c, p, i),
                                p - 1))
                  return fail("φ does not commute with internal face " + std::to_string(i));
              for (int i = 0; p < phi.dim() && i <= p; ++i)
                if (!same_orbit(t, phi(l.simp_degen(a, p, i), r.simp_degen(b, p, i), p + 1), t.simp_degen(*c, p, i),
                                p + 1))
                  return fail("φ does not commute with internal degeneracy " + std::to_string(i));
            }
        }
    }
  return std::nullopt;
}

// ---- coherence ----

CoherenceReport check_coherence(const GSimplicialSet& x, const GSimplicialSet& y, const GSimplicialSet& z,
                                const GSetAction& v, const GSetAction& w, const GSetAction& u,
                                const CoherenceBounds& bounds, CatTag ground) {
  const GroupPtr grp = v.group_ptr();
  const int dim = bounds.dmax, qmax = bounds.qmax, np = bounds.pair_truncation;
  for (const GSimplicialSet* s : {&x, &y, &z})
    if (!s->is_discrete() && s->dim() < dim) throw PreconditionError("coherence fixture stored below the degree");
  CatPtr cn = make_category(CatTag::F, grp, bounds.truncation);
  CatPtr cp = make_category(CatTag::F, grp, np);
  const GSimplicialSet s0 = sphere(GSetAction::trivial(grp, 0), dim);
  const int kv = v.size(), kw = w.size();
  CoherenceReport rep;
  auto note = [&rep](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.failure.empty()) rep.failure = msg;
  };

  // unit diagrams
  if (bounds.unit) {
    Phi right(free_pairing(cn, x, cn, s0, cp), v, w, dim, ground);
    Phi left(free_pairing(cn, s0, cn, y, cp), v, w, dim, ground);
    const GSimplicialSet &sv = right.left().outer().space(), &sw = right.right().outer().space();
    for (int q = 0; q <= qmax; ++q)
      for (int p = 0; p <= dim; ++p) {
        for (Id a = 1; a < right.left().size(q, p) && rep.unit_right; ++a)
          for (Id s = 1; s < sw.size(p); ++s) {
            const BarCell& c = right.left().cell(q, p, a);
            Cell lhs = right(c, unit_cell(*cn, q, s, 1), p);
            BarCell rhs = with_sphere(transport(c, *cn, *cp), p, kv, kw, s, false);
            ++rep.checked;
            if (!same_orbit(right.target(), lhs, rhs, p)) {
              note(rep.unit_right, "right unit fails at " + c.str() + " with sphere simplex " + std::to_string(s));
              break;
            }
          }
        for (Id b = 1; b < left.right().size(q, p) && rep.unit_left; ++b)
          for (Id s = 1; s < sv.size(p); ++s) {
            const BarCell& c = left.right().cell(q, p, b);
            Cell lhs = left(unit_cell(*cn, q, s, 1), c, p);
            BarCell rhs = with_sphere(transport(c, *cn, *cp), p, kw, kv, s, true);
            ++rep.checked;
            if (!same_orbit(left.target(), lhs, rhs, p)) {
              note(rep.unit_left, "left unit fails at " + c.str() + " with sphere simplex " + std::to_string(s));
              break;
            }
          }
      }
    if (auto e = check_phi(right, qmax)) note(rep.phi, *e);
  }

  // associativity
  if (bounds.assoc) {
    const GSimplicialSet xy = smash(x, y).set, yz = smash(y, z).set;
    if (smash(xy, z).set.size(dim) != smash(x, yz).set.size(dim)) throw Error("smash sizes disagree");
    Phi ab(free_pairing(cn, x, cn, y, cp), v, w, dim, ground);
    Phi ab_c(free_pairing(cp, xy, cn, z, cp), disjoint_union(v, w), u, dim, ground);
    Phi bc(free_pairing(cn, y, cn, z, cp), w, u, dim, ground);
    Phi a_bc(free_pairing(cn, x, cp, yz, cp), v, disjoint_union(w, u), dim, ground);
    const BarEngine& tgt = ab_c.target();
    BarCell lbuf, rbuf;
    for (int q = 0; q <= qmax && rep.assoc; ++q)
      for (int p = 0; p <= dim && rep.assoc; ++p) {
        const Buckets b1 = buckets(ab.left(), q, p), b2 = buckets(ab.right(), q, p), b3 = buckets(bc.right(), q, p);
        for (const auto& [k2, v2] : b2)
          for (Id ib : v2) {
            const BarCell& b = ab.right().cell(q, p, ib);
            for (const auto& [k1, v1] : b1) {
              if (!fits(k1, k2, np)) continue;
              const auto k12 = times(k1, k2);
              std::vector<Cell> left_products;
              for (Id ia : v1) left_products.push_back(ab(ab.left().cell(q, p, ia), b, p));
              for (const auto& [k3, v3] : b3) {
                if (!fits(k12, k3, np)) continue;
                for (Id ic : v3) {
                  const BarCell& c = bc.right().cell(q, p, ic);
                  const Cell r1 = bc(b, c, p);
                  for (std::size_t t = 0; t < v1.size(); ++t) {
                    const BarCell& a = ab.left().cell(q, p, v1[t]);
                    const Cell& l1 = left_products[t];
                    const bool lb = l1 && ab_c.product(*l1, c, p, lbuf);
                    const bool rb = r1 && a_bc.product(a, *r1, p, rbuf);
                    ++rep.checked;
                    if (lb == rb && (!lb || lbuf == rbuf)) continue;
                    if (!same_orbit(tgt, lb ? Cell(lbuf) : Cell{}, rb ? Cell(rbuf) : Cell{}, p)) {
                      note(rep.assoc, "associativity fails at " + a.str() + ", " + b.str() + ", " + c.str());
                      goto assoc_done;
                    }
                  }
                }
              }
            }
          }
      }
  assoc_done:;
  }

  // symmetry
  if (bounds.symmetry) {
    const SmashProduct xy = smash(x, y), yx = smash(y, x);
    Phi fwd(free_pairing(cn, x, cn, y, cp), v, w, dim, ground);
    Phi bwd(free_pairing(cn, y, cn, x, cp), w, v, dim, ground);
    const BarEngine& tgt = bwd.target();
    // τ: coordinates of V⊕W rotated to W⊕V, values a∧b ↦ b∧a
    auto tau = [&](const BarCell& c, int p) {
      BarCell out = c;
      for (auto& e : out.outer) {
        if (e == 0) continue;
        auto t = sphere_coords(kv + kw, p, e);
        std::rotate(t.begin(), t.begin() + kv, t.end());
        e = sphere_id(p, t);
      }
      auto [j, s] = free_split(xy.set, p, c.x);
      auto [a, b] = xy.split(p, s);
      out.x = free_join(yx.set, p, j, yx.pair(p, b, a));
      return out;
    };
    for (int q = 0; q <= qmax && rep.symmetry; ++q)
      for (int p = 0; p <= dim && rep.symmetry; ++p) {
        const Buckets b1 = buckets(fwd.left(), q, p), b2 = buckets(fwd.right(), q, p);
        for (const auto& [k1, v1] : b1)
          for (const auto& [k2, v2] : b2) {
            if (!fits(k1, k2, np)) continue;
            for (Id ia : v1)
              for (Id ib : v2) {
                const BarCell &a = fwd.left().cell(q, p, ia), &b = fwd.right().cell(q, p, ib);
                Cell f = fwd(a, b, p);
                Cell lhs = bwd(b, a, p);
                Cell rhs = f ? Cell(tau(*f, p)) : Cell{};
                ++rep.checked;
                if (!same_orbit(tgt, lhs, rhs, p)) {
                  note(rep.symmetry, "symmetry fails at " + a.str() + ", " + b.str() + ": " + cell_str(lhs) +
                                         " vs " + cell_str(rhs));
                  goto sym_done;
                }
              }
          }
      }
  sym_done:;
  }
  return rep;
}

// ---- BPQ ----

BpqData bpq_mu(const GSimplicialSet& x, const GSetAction& v, int truncation, int qmax, int dmax) {
  const int dim = std::min(qmax, dmax);
  if (!x.is_discrete() && x.dim() < dim) throw PreconditionError("space stored below the degree");
  const GroupPtr grp = v.group_ptr();
  CatPtr cat = make_category(CatTag::F, grp, truncation);
  const GSimplicialSet xd = x.with_dim(dim);
  auto sph = std::make_shared<const GSimplicialSet>(sphere(v, dim));
  BarEngine e(Monad(CatTag::Sigma, cat), free_diagram(cat, xd), Outer::space(sph));
  const int one = cat->trivial_object(1);
  BpqData out{e.diagonal(dim), smash(*sph, xd), {}, {}, {}};
  const SmashProduct& tg = out.target;
  out.zeta = SimplicialMap::from_function(out.bar, [&](int m, Id id) -> Id {
    if (id == 0) return 0;
    const BarCell& c = e.cell(m, m, id);
    BasedMap f = BasedMap::identity(cat->arity(c.obj[0]));
    for (const BasedMap& h : c.homs) f = compose_based(h, f);
    auto [j, s] = free_split(xd, m, c.x);
    const int fj = f(j);
    return fj == 0 ? 0 : tg.pair(m, c.outer[fj - 1], s);
  });
  out.eta = SimplicialMap::from_function(tg.set, [&](int m, Id z) -> Id {
    if (z == 0) return 0;
    auto [a, s] = tg.split(m, z);
    return e.id_of(m, m, unit_cell(*cat, m, a, free_join(xd, m, 1, s)));
  });
  // t: [y, f, .., f_1, (j, s)] ↦ [y, f, .., f_1, ĵ, (1, s)]; then the homotopy
  // k_i = s_m ... s_{m-j+1} t d_{m-j+1} ... d_m with j = m - i, internally s_i.
  auto extra = [&](const BarCell& c, int p) {
    auto [j, s] = free_split(xd, p, c.x);
    BarCell out = c;
    BasedMap jh = BasedMap::zero(1, cat->arity(c.obj[0]));
    jh.set(1, j);
    out.obj.insert(out.obj.begin(), one);
    out.homs.insert(out.homs.begin(), jh);
    out.x = free_join(xd, p, 1, s);
    return out;
  };
  SimplicialHomotopy& h = out.homotopy;
  h.f = compose(out.eta, out.zeta);
  h.g = SimplicialMap::identity(out.bar);
  h.h.resize(dim);
  for (int m = 0; m < dim; ++m) {
    h.h[m].assign(m + 1, std::vector<Id>(out.bar.size(m), 0));
    for (int i = 0; i <= m; ++i) {
      const int j = m - i;
      for (Id id = 1; id < out.bar.size(m); ++id) {
        Cell c = e.cell(m, m, id);
        for (int t = 0; t < j && c; ++t) c = e.bar_face(*c, c->q(), m);
        if (!c) continue;
        BarCell r = extra(*c, m);
        for (int t = 0; t < j; ++t) r = e.bar_degen(r, r.q());
        h.h[m][i][id] = e.id_of(m + 1, m + 1, e.simp_degen(r, m, i));
      }
    }
  }
  return out;
}

std::optional<std::string> check_bpq(const BpqData& d) {
  if (auto e = check_simplicial_map(d.zeta, d.bar, d.target.set)) return "zeta: " + *e;
  if (auto e = check_simplicial_map(d.eta, d.target.set, d.bar)) return "eta: " + *e;
  if (!equal_maps(compose(d.zeta, d.eta), SimplicialMap::identity(d.target.set), d.target.set))
    return "zeta . eta is not the identity";
  if (auto e = check_homotopy(d.homotopy, d.bar, d.bar)) return "extra degeneracy homotopy: " + *e;
  return std::nullopt;
}

std::optional<std::string> check_coend_identification(const GSimplicialSet& a, const GSimplicialSet& x,
                                                      int truncation, int dim) {
  CatPtr cat = make_category(CatTag::F, a.group_ptr(), truncation);
  const SmashProduct ax = smash(a, x);
  std::ostringstream err;
  for (int p = 0; p <= dim; ++p) {
    const Id sa = a.size(p), sx = x.size(p) - 1;
    // node of (y ∈ A_p^n, (j, s)); y in mixed radix, first entry most significant
    std::vector<Id> offset(truncation + 2, 1), tuples(truncation + 1, 1);
    for (int n = 1; n <= truncation; ++n) {
      tuples[n] = tuples[n - 1] * sa;
      offset[n + 1] = offset[n] + tuples[n] * n * sx;
    }
    auto decode = [&](int n, Id yi) {
      std::vector<Id> y(n);
      for (int i = n - 1; i >= 0; --i) {
        y[i] = yi % sa;
        yi /= sa;
      }
      return y;
    };
    auto encode = [&](const std::vector<Id>& y) {
      Id r = 0;
      for (Id e : y) r = r * sa + e;
      return r;
    };
    auto node = [&](int n, Id yi, int j, Id s) -> Id {
      if (j == 0 || s == 0) return Id{0};
      return offset[n] + (yi * n + static_cast<Id>(j - 1)) * sx + (s - 1);
    };
    detail::MinUnionFind uf(offset[truncation + 1]);
    for (int n = 1; n <= truncation; ++n)
      for (int j = 1; j <= n; ++j)
        for (Id s = 1; s <= sx; ++s) uf.unite(node(n, 0, j, s), 0);
    for (int m = 1; m <= truncation; ++m)
      for (int n = 1; n <= truncation; ++n)
        for (const BasedMap& f : cat->homs(cat->trivial_object(m), cat->trivial_object(n)))
          for (Id yi = 0; yi < tuples[n]; ++yi) {
            const auto y = decode(n, yi);
            std::vector<Id> yf(m);
            for (int i = 1; i <= m; ++i) yf[i - 1] = f(i) ? y[f(i) - 1] : 0;
            const Id yfi = encode(yf);
            for (int j = 1; j <= m; ++j)
              for (Id s = 1; s <= sx; ++s) uf.unite(node(m, yfi, j, s), node(n, yi, f(j), s));
          }
    std::vector<std::uint32_t> roots;
    const auto cls = uf.classes(&roots);
    if (roots.size() != ax.set.size(p)) {
      err << "coend has " << roots.size() << " simplices in degree " << p << ", A ^ X has " << ax.set.size(p);
      return err.str();
    }
    std::vector<Id> value(roots.size(), 0);
    std::vector<char> hit(ax.set.size(p), 0);
    hit[0] = 1;
    for (int n = 1; n <= truncation; ++n)
      for (Id yi = 0; yi < tuples[n]; ++yi) {
        const auto y = decode(n, yi);
        for (int j = 1; j <= n; ++j)
          for (Id s = 1; s <= sx; ++s) {
            const Id nd = node(n, yi, j, s);
            const Id val = ax.pair(p, y[j - 1], s);
            if (roots[cls[nd]] == nd) {
              if (nd != 0) {
                if (hit[val]) return "identification is not injective in degree " + std::to_string(p);
                hit[val] = 1;
              }
              value[cls[nd]] = val;
            }
          }
      }
    for (int n = 1; n <= truncation; ++n)
      for (Id yi = 0; yi < tuples[n]; ++yi) {
        const auto y = decode(n, yi);
        for (int j = 1; j <= n; ++j)
          for (Id s = 1; s <= sx; ++s) {
            const Id nd = node(n, yi, j, s);
            if (value[cls[nd]] != ax.pair(p, y[j - 1], s))
              return "identification is not constant on classes in degree " + std::to_string(p);
          }
      }
  }
  return std::nullopt;
}

// ---- ring pairings of Eilenberg-Mac Lane levels ----

EmRingReport em_ring_pairing(const RingObject& r, GroupPtr group, const GSetAction& v, int truncation,
                             int pair_truncation, int qmax, int dmax) {
  CatPtr cn = make_category(CatTag::F, group, truncation);
  CatPtr cp = make_category(CatTag::F, group, pair_truncation);
  const AbGroup a(r.additive.orders(), group);
  const int dim = dmax, k = v.size();
  const GSetAction vv = disjoint_union(v, v);
  EmRingReport rep;
  auto note = [&rep](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.failure.empty()) rep.failure = msg;
  };
  if (auto e = check_pairing(ring_pairing(cn, cn, r, cp, dim))) note(rep.pairing_natural, *e);

  Phi ab(ring_pairing(cn, cn, r, cp, dim), v, v, dim);
  Phi ab_c(ring_pairing(cp, cn, r, cp, dim), vv, v, dim);
  Phi a_bc(ring_pairing(cn, cp, r, cp, dim), v, vv, dim);
  if (auto e = check_phi(ab, qmax)) note(rep.phi, *e);

  // unit 𝐈 -> R A through h for S = {1} and ℤ -> A, 1 ↦ 1
  const HMap h = h_map(cn, GSetAction::trivial(group, 1));
  if (auto e = check_h_map(h)) note(rep.unit_left, "h: " + *e);
  const int one = cn->trivial_object(1);
  auto hz = h(one, 1);
  const Id unit_x = r_encode(a, {a.scale(hz[0][0], r.one)});

  const BarEngine &l = ab.left(), &tgt = ab.target();
  const GSimplicialSet& sv = l.outer().space();
  for (int q = 0; q <= qmax; ++q)
    for (int p = 0; p <= dim; ++p) {
      for (Id i = 1; i < l.size(q, p); ++i)
        for (Id s = 1; s < sv.size(p); ++s) {
          const BarCell& c = l.cell(q, p, i);
          const BarCell u = unit_cell(*cn, q, s, unit_x);
          if (rep.unit_right && !same_orbit(tgt, ab(c, u, p), with_sphere(transport(c, *cn, *cp), p, k, k, s, false), p))
            note(rep.unit_right, "right unit fails at " + c.str());
          if (rep.unit_left && !same_orbit(tgt, ab(u, c, p), with_sphere(transport(c, *cn, *cp), p, k, k, s, true), p))
            note(rep.unit_left, "left unit fails at " + c.str());
        }
      const Buckets b = buckets(l, q, p);
      for (const auto& [k1, v1] : b)
        for (const auto& [k2, v2] : b) {
          if (!fits(k1, k2, pair_truncation)) continue;
          const auto k12 = times(k1, k2);
          for (const auto& [k3, v3] : b) {
            if (!fits(k12, k3, pair_truncation)) continue;
            for (Id i1 : v1)
              for (Id i2 : v2)
                for (Id i3 : v3) {
                  if (!rep.assoc) break;
                  const BarCell &x = l.cell(q, p, i1), &y = l.cell(q, p, i2), &z = l.cell(q, p, i3);
                  Cell l1 = ab(x, y, p), r1 = ab(y, z, p);
                  Cell lhs = l1 ? ab_c(*l1, z, p) : Cell{};
                  Cell rhs = r1 ? a_bc(x, *r1, p) : Cell{};
                  if (!same_orbit(ab_c.target(), lhs, rhs, p))
                    note(rep.assoc, "associativity fails at " + x.str() + ", " + y.str() + ", " + z.str());
                }
          }
        }
    }
  return rep;
}

}  // namespace segal
