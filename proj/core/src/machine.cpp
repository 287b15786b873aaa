#include <sstream>

#include "segal/barmachine.hpp"

namespace segal {

const char* to_string(MachineTag t) {
  switch (t) {
    case MachineTag::Sigma: return "S^Sigma";
    case MachineTag::SigmaG: return "S^SigmaG";
    case MachineTag::NGSmash: return "S^NG";
    case MachineTag::NGProduct: return "S~^NG";
  }
  return "?";
}

Monad machine_monad(MachineTag tag, CatPtr input_category) {
  switch (tag) {
    case MachineTag::Sigma: return Monad(CatTag::Sigma, std::move(input_category));
    case MachineTag::SigmaG: return Monad(CatTag::SigmaG, std::move(input_category));
    case MachineTag::NGSmash: return Monad(CatTag::NG, std::move(input_category));
    case MachineTag::NGProduct: return Monad(CatTag::NG, std::move(input_category), Variant::Product);
  }
  throw PreconditionError("unknown machine");
}

GSetAction disjoint_union(const GSetAction& v, const GSetAction& w) {
  if (v.group() != w.group()) throw PreconditionError("representations over different groups");
  const int a = v.size(), b = w.size();
  std::vector<Permutation> perms;
  for (int g = 0; g < v.group().order(); ++g) {
    std::vector<int> img(a + b);
    for (int i = 1; i <= a; ++i) img[i - 1] = v[g](i);
    for (int i = 1; i <= b; ++i) img[a + i - 1] = a + w[g](i);
    perms.emplace_back(std::move(img));
  }
  return GSetAction(v.group_ptr(), std::move(perms));
}

MachineOutput::MachineOutput(MachineTag tag, Diagram input, std::vector<GSetAction> spheres, int qmax, int dmax)
    : tag_(tag), input_(std::move(input)), dim_(std::min(qmax, dmax)) {
  if (dim_ < 0) throw PreconditionError("machine bounds must be non-negative");
  if (dim_ > input_.dim() && !input_.is_discrete())
    throw PreconditionError("input stored below the requested machine degree");
  if (input_.is_discrete()) {
    std::vector<GSimplicialSet> vals;
    for (int c = 0; c < input_.category().num_objects(); ++c) vals.push_back(input_.value(c).with_dim(dim_));
    Diagram x = input_;
    input_ = Diagram(x.category_ptr(), std::move(vals),
                     [x](int c, int d, const BasedMap& f, int p, Id v) { return x.act(c, d, f, p, v); }, x.name());
  }
  machine_monad(tag, input_.category_ptr());  // validates the category
  for (const auto& v : spheres) add_level(v);
}

std::size_t MachineOutput::add_level(const GSetAction& v) {
  for (std::size_t k = 0; k < reps_.size(); ++k)
    if (reps_[k] == v) return k;
  if (v.group() != input_.category().group()) throw PreconditionError("representation over the wrong group");
  auto s = std::make_shared<const GSimplicialSet>(sphere(v, dim_));
  auto e = std::make_shared<BarEngine>(machine_monad(tag_, input_.category_ptr()), input_, Outer::space(s));
  levels_.push_back(e->diagonal(dim_));
  engines_.push_back(std::move(e));
  reps_.push_back(v);
  return reps_.size() - 1;
}

Id structure_map(const MachineOutput& m, std::size_t v, std::size_t vw, int p, Id a, int w_points, Id w) {
  if (a == 0 || w == 0) return 0;
  const int kv = m.representation(v).size();
  if (m.representation(vw).size() != kv + w_points) throw PreconditionError("target level is not V + W");
  BarCell c = m.engine(v).cell(p, p, a);
  auto tw = sphere_coords(w_points, p, w);
  for (auto& y : c.outer) {
    if (y == 0) continue;
    auto t = sphere_coords(kv, p, y);
    t.insert(t.end(), tw.begin(), tw.end());
    y = sphere_id(p, t);
  }
  return m.engine(vw).id_of(p, p, c);
}

std::optional<std::string> check_structure_maps(MachineOutput& m, const GSetAction& v, const GSetAction& w,
                                                const GSetAction& w2) {
  const int dim = m.dim();
  const GSetAction empty = GSetAction::trivial(v.group_ptr(), 0);
  const GSetAction ww2 = disjoint_union(w, w2);
  const std::size_t lv = m.add_level(v);
  const std::size_t lv0 = m.add_level(disjoint_union(v, empty));
  const std::size_t lvw = m.add_level(disjoint_union(v, w));
  const std::size_t lvww = m.add_level(disjoint_union(disjoint_union(v, w), w2));
  const GSimplicialSet sw = sphere(w, dim), sw2 = sphere(w2, dim), sww = sphere(ww2, dim);
  const int kw = w.size(), kw2 = w2.size();
  const FinGroup& grp = v.group();
  std::ostringstream err;
  auto where = [&](const char* what, int p, Id a, Id x) {
    err << what << " at degree " << p << ", simplex " << a << ", sphere simplex " << x;
    return err.str();
  };
  const GSimplicialSet& src = m.level(lv);
  for (int p = 0; p <= dim; ++p)
    for (Id a = 0; a < src.size(p); ++a) {
      if (lv0 != lv || structure_map(m, lv, lv0, p, a, 0, 1) != a) return where("unit fails", p, a, 1);
      for (Id x = 0; x < sw.size(p); ++x) {
        Id s = structure_map(m, lv, lvw, p, a, kw, x);
        for (int g = 0; g < grp.order(); ++g)
          if (structure_map(m, lv, lvw, p, src.act(p, g, a), kw, sw.act(p, g, x)) != m.level(lvw).act(p, g, s))
            return where("not equivariant", p, a, x);
        if (p > 0)
          for (int i = 0; i <= p; ++i)
            if (structure_map(m, lv, lvw, p - 1, src.face(p, i, a), kw, sw.face(p, i, x)) != m.level(lvw).face(p, i, s))
              return where("does not commute with faces", p, a, x);
        for (Id x2 = 0; x2 < sw2.size(p); ++x2) {
          Id lhs = structure_map(m, lvw, lvww, p, s, kw2, x2);
          Id both = 0;
          if (x != 0 && x2 != 0) {
            auto t = sphere_coords(kw, p, x);
            auto t2 = sphere_coords(kw2, p, x2);
            t.insert(t.end(), t2.begin(), t2.end());
            both = sphere_id(p, t);
          }
          if (both >= sww.size(p)) return where("sphere coordinates out of range", p, a, x);
          if (lhs != structure_map(m, lv, lvww, p, a, kw + kw2, both)) return where("not associative", p, a, x);
        }
      }
    }
  return std::nullopt;
}

bool eta_into_sphere_level_injective(const MachineOutput& m, std::size_t k) {
  if (m.representation(k).size() != 0) throw PreconditionError("eta lands in the level of the trivial representation");
  const BarEngine& e = m.engine(k);
  const Diagram& x = e.algebra();
  const int one = x.category().trivial_object(1);
  std::vector<bool> hit(m.level(k).size(0), false);
  for (Id v = 1; v < x.value(one).size(0); ++v) {
    Id id = e.id_of(0, 0, BarCell{{one}, {1}, {}, v});
    if (id == 0 || hit[id]) return false;
    hit[id] = true;
  }
  return true;
}

namespace {

std::shared_ptr<std::vector<SmashProduct>> half_smash_values(const Diagram& x, const GSimplicialSet& a, int dim) {
  auto out = std::make_shared<std::vector<SmashProduct>>();
  for (int c = 0; c < x.category().num_objects(); ++c)
    out->push_back(half_smash(x.value(c).with_dim(dim), a.with_dim(dim)));
  return out;
}

}  // namespace

Diagram half_smash_diagram(const Diagram& x, const GSimplicialSet& a) {
  const int dim = std::min(x.dim(), a.dim());
  auto hs = half_smash_values(x, a, dim);
  std::vector<GSimplicialSet> vals;
  for (const auto& s : *hs) vals.push_back(s.set);
  return Diagram(
      x.category_ptr(), std::move(vals),
      [x, hs](int c, int d, const BasedMap& f, int p, Id z) -> Id {
        auto [u, t] = (*hs)[c].split(p, z);
        return (*hs)[d].pair(p, x.act(c, d, f, p, u), t);
      },
      x.name() + "^A+");
}

std::optional<std::string> check_tensor_with_space(MachineTag tag, const Diagram& x, const GSimplicialSet& a,
                                                   const GSetAction& v, int dim) {
  if ((!x.is_discrete() && x.dim() < dim) || a.dim() < dim) throw PreconditionError("inputs stored below the degree");
  std::vector<GSimplicialSet> vals;
  for (int c = 0; c < x.category().num_objects(); ++c) vals.push_back(x.value(c).with_dim(dim));
  Diagram xd(x.category_ptr(), std::move(vals),
             [x](int c, int d, const BasedMap& f, int p, Id u) { return x.act(c, d, f, p, u); }, x.name());
  const GSimplicialSet ad = a.with_dim(dim);
  auto hs = half_smash_values(xd, ad, dim);
  Diagram xa = half_smash_diagram(xd, ad);
  Monad mon = machine_monad(tag, x.category_ptr());
  auto sph = std::make_shared<const GSimplicialSet>(sphere(v, dim));
  BarEngine e1(mon, xa, Outer::space(sph));
  BarEngine e0(mon, xd, Outer::space(sph));
  GSimplicialSet l1 = e1.diagonal(dim);
  GSimplicialSet l0 = e0.diagonal(dim);
  SmashProduct rhs = half_smash(l0, ad);
  SimplicialMap f = SimplicialMap::from_function(l1, [&](int n, Id id) -> Id {
    if (id == 0) return 0;
    BarCell c = e1.cell(n, n, id);
    auto [u, t] = (*hs)[c.obj[0]].split(n, c.x);
    c.x = u;
    return rhs.pair(n, e0.id_of(n, n, c), t);
  });
  if (auto err = check_simplicial_map(f, l1, rhs.set)) return "tensor comparison: " + *err;
  if (!is_bijective(f, l1, rhs.set)) return "tensor comparison is not bijective";
  return std::nullopt;
}

}  // namespace segal
