#include "segal/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace segal {

namespace {

std::string at(int q, Id x) { return " at degree " + std::to_string(q) + ", simplex " + std::to_string(x); }

}  // namespace

GSimplicialSet::GSimplicialSet(GroupPtr group, int dim, std::vector<Level> levels)
    : group_(std::move(group)), dim_(dim), levels_(std::move(levels)) {
  if (!group_) throw PreconditionError("simplicial set without a group");
  if (dim_ < 0) throw PreconditionError("negative degree bound");
  if (static_cast<int>(levels_.size()) != dim_ + 1) throw PreconditionError("level count != dim + 1");
}

GSimplicialSet GSimplicialSet::from_functions(GroupPtr group, int dim, const SizeFn& size, const FaceFn& face,
                                              const FaceFn& degen, const ActFn& act) {
  std::vector<Level> levels(dim + 1);
  const int order = group->order();
  for (int q = 0; q <= dim; ++q) {
    Level& l = levels[q];
    l.size = size(q);
    if (q > 0) {
      l.face.assign(q + 1, std::vector<Id>(l.size));
      for (int i = 0; i <= q; ++i)
        for (Id x = 0; x < l.size; ++x) l.face[i][x] = face(q, i, x);
    }
    if (q < dim) {
      l.degen.assign(q + 1, std::vector<Id>(l.size));
      for (int i = 0; i <= q; ++i)
        for (Id x = 0; x < l.size; ++x) l.degen[i][x] = degen(q, i, x);
    }
    l.act.assign(order, std::vector<Id>(l.size));
    for (int g = 0; g < order; ++g)
      for (Id x = 0; x < l.size; ++x) l.act[g][x] = act(q, g, x);
  }
  return GSimplicialSet(std::move(group), dim, std::move(levels));
}

GSimplicialSet GSimplicialSet::discrete(GroupPtr group, int dim, Id size, std::vector<std::vector<Id>> act) {
  if (size < 1) throw PreconditionError("a based set has at least the basepoint");
  Level l;
  l.size = size;
  if (act.empty()) {
    std::vector<Id> ident(size);
    for (Id x = 0; x < size; ++x) ident[x] = x;
    act.assign(group->order(), ident);
  }
  if (static_cast<int>(act.size()) != group->order()) throw PreconditionError("action table has wrong length");
  l.act = std::move(act);
  GSimplicialSet s;
  s.group_ = std::move(group);
  s.dim_ = dim;
  s.discrete_ = true;
  s.levels_.push_back(std::move(l));
  return s;
}

GSimplicialSet GSimplicialSet::point(GroupPtr group, int dim) { return discrete(std::move(group), dim, 1); }

bool GSimplicialSet::is_degenerate(int q, Id x) const {
  if (discrete_) return q > 0;
  if (q == 0) return false;
  for (int i = 0; i < q; ++i)
    if (levels_[q - 1].degen[i][levels_[q].face[i][x]] == x) return true;
  return false;
}

GSimplicialSet GSimplicialSet::with_dim(int d) const {
  if (discrete_) {
    GSimplicialSet s = *this;
    s.dim_ = d;
    return s;
  }
  if (d > dim_) throw PreconditionError("cannot extend a non-discrete simplicial set");
  std::vector<Level> lv(levels_.begin(), levels_.begin() + d + 1);
  lv[d].degen.clear();
  return GSimplicialSet(group_, d, std::move(lv));
}

SimplicialMap SimplicialMap::identity(const GSimplicialSet& x) {
  return from_function(x, [](int, Id v) { return v; });
}

SimplicialMap SimplicialMap::from_function(const GSimplicialSet& src, const std::function<Id(int, Id)>& f) {
  SimplicialMap m;
  m.level.resize(src.dim() + 1);
  for (int q = 0; q <= src.dim(); ++q) {
    m.level[q].resize(src.size(q));
    for (Id x = 0; x < src.size(q); ++x) m.level[q][x] = f(q, x);
  }
  return m;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap m;
  const std::size_t d = std::min(g.level.size(), f.level.size());
  m.level.resize(d);
  for (std::size_t q = 0; q < d; ++q) {
    m.level[q].resize(f.level[q].size());
    for (std::size_t x = 0; x < f.level[q].size(); ++x) m.level[q][x] = g.level[q][f.level[q][x]];
  }
  return m;
}

std::optional<std::string> check_simplicial_identities(const GSimplicialSet& s) {
  const int order = s.group().order();
  for (int q = 0; q <= s.dim(); ++q) {
    const Id n = s.size(q);
    if (n < 1) return "empty level" + at(q, 0);
    for (int g = 0; g < order; ++g) {
      if (s.act(q, g, 0) != 0) return "G-action moves the basepoint" + at(q, 0);
      for (Id x = 0; x < n; ++x) {
        if (s.act(q, g, x) >= n) return "G-action out of range" + at(q, x);
        for (int h = 0; h < order; ++h)
          if (s.act(q, s.group().mul(g, h), x) != s.act(q, g, s.act(q, h, x)))
            return "G-action is not an action" + at(q, x);
      }
      for (Id x = 0; x < n; ++x)
        if (s.act(q, 0, x) != x) return "identity acts nontrivially" + at(q, x);
    }
    for (Id x = 0; x < n; ++x) {
      for (int i = 0; q > 0 && i <= q; ++i) {
        Id y = s.face(q, i, x);
        if (y >= s.size(q - 1)) return "face out of range" + at(q, x);
        if (x == 0 && y != 0) return "face moves the basepoint" + at(q, x);
        for (int g = 0; g < order; ++g)
          if (s.face(q, i, s.act(q, g, x)) != s.act(q - 1, g, y)) return "face not equivariant" + at(q, x);
        for (int j = i + 1; q > 1 && j <= q; ++j)
          // d_i d_j = d_{j-1} d_i for i < j
          if (s.face(q - 1, i, s.face(q, j, x)) != s.face(q - 1, j - 1, s.face(q, i, x)))
            return "d_i d_j != d_{j-1} d_i (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")" + at(q, x);
      }
      if (q < s.dim()) {
        for (int j = 0; j <= q; ++j) {
          Id y = s.degen(q, j, x);
          if (y >= s.size(q + 1)) return "degeneracy out of range" + at(q, x);
          if (x == 0 && y != 0) return "degeneracy moves the basepoint" + at(q, x);
          for (int g = 0; g < order; ++g)
            if (s.degen(q, j, s.act(q, g, x)) != s.act(q + 1, g, y))
              return "degeneracy not equivariant" + at(q, x);
          for (int i = 0; i <= q + 1; ++i) {
            Id lhs = s.face(q + 1, i, y);
            Id rhs;
            if (i < j)
              rhs = q > 0 ? s.degen(q - 1, j - 1, s.face(q, i, x)) : lhs;
            else if (i == j || i == j + 1)
              rhs = x;
            else
              rhs = q > 0 ? s.degen(q - 1, j, s.face(q, i - 1, x)) : lhs;
            if (lhs != rhs)
              return "d_i s_j identity fails (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")" + at(q, x);
          }
          for (int i = j; q + 1 < s.dim() && i <= q; ++i)
            // s_{i+1} s_j = s_j s_i for j ≤ i
            if (s.degen(q + 1, i + 1, y) != s.degen(q + 1, j, s.degen(q, i, x)))
              return "s_i s_j identity fails (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")" + at(q, x);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_simplicial_map(const SimplicialMap& f, const GSimplicialSet& src,
                                                const GSimplicialSet& dst) {
  const int d = std::min(src.dim(), dst.dim());
  if (static_cast<int>(f.level.size()) < d + 1) return "map not stored to degree " + std::to_string(d);
  for (int q = 0; q <= d; ++q) {
    if (f.level[q].size() != src.size(q)) return "map level size mismatch" + at(q, 0);
    if (f(q, 0) != 0) return "map is not based" + at(q, 0);
    for (Id x = 0; x < src.size(q); ++x) {
      Id y = f(q, x);
      if (y >= dst.size(q)) return "map out of range" + at(q, x);
      for (int g = 0; g < src.group().order(); ++g)
        if (f(q, src.act(q, g, x)) != dst.act(q, g, y)) return "map not equivariant" + at(q, x);
      for (int i = 0; q > 0 && i <= q; ++i)
        if (f(q - 1, src.face(q, i, x)) != dst.face(q, i, y))
          return "map does not commute with d_" + std::to_string(i) + at(q, x);
      for (int i = 0; q < d && i <= q; ++i)
        if (f(q + 1, src.degen(q, i, x)) != dst.degen(q, i, y))
          return "map does not commute with s_" + std::to_string(i) + at(q, x);
    }
  }
  return std::nullopt;
}

bool is_bijective(const SimplicialMap& f, const GSimplicialSet& src, const GSimplicialSet& dst) {
  const int d = std::min(src.dim(), dst.dim());
  for (int q = 0; q <= d; ++q) {
    if (src.size(q) != dst.size(q)) return false;
    std::vector<char> hit(dst.size(q), 0);
    for (Id x = 0; x < src.size(q); ++x) {
      Id y = f(q, x);
      if (y >= dst.size(q) || hit[y]) return false;
      hit[y] = 1;
    }
  }
  return true;
}

bool equal_maps(const SimplicialMap& f, const SimplicialMap& g, const GSimplicialSet& src) {
  for (int q = 0; q <= src.dim(); ++q)
    for (Id x = 0; x < src.size(q); ++x)
      if (f(q, x) != g(q, x)) return false;
  return true;
}

std::optional<SimplicialMap> inverse_map(const SimplicialMap& f, const GSimplicialSet& src,
                                         const GSimplicialSet& dst) {
  if (!is_bijective(f, src, dst)) return std::nullopt;
  SimplicialMap inv;
  const int d = std::min(src.dim(), dst.dim());
  inv.level.resize(d + 1);
  for (int q = 0; q <= d; ++q) {
    inv.level[q].resize(dst.size(q));
    for (Id x = 0; x < src.size(q); ++x) inv.level[q][f(q, x)] = x;
  }
  return inv;
}

std::vector<std::size_t> nondegenerate_counts(const GSimplicialSet& s) {
  std::vector<std::size_t> out(s.dim() + 1, 0);
  for (int q = 0; q <= s.dim(); ++q)
    for (Id x = 1; x < s.size(q); ++x)
      if (!s.is_degenerate(q, x)) ++out[q];
  return out;
}

SmashProduct smash(const GSimplicialSet& x, const GSimplicialSet& y) {
  if (!(x.group() == y.group())) throw PreconditionError("smash of simplicial sets over different groups");
  const int d = std::min(x.dim(), y.dim());
  SmashProduct out;
  for (int q = 0; q <= d; ++q) out.right_size.push_back(y.size(q));
  const SmashProduct& sp = out;
  auto size = [&](int q) { return 1 + (x.size(q) - 1) * (y.size(q) - 1); };
  auto face = [&](int q, int i, Id z) {
    auto [a, b] = sp.split(q, z);
    return sp.pair(q - 1, x.face(q, i, a), y.face(q, i, b));
  };
  auto degen = [&](int q, int i, Id z) {
    auto [a, b] = sp.split(q, z);
    return sp.pair(q + 1, x.degen(q, i, a), y.degen(q, i, b));
  };
  auto act = [&](int q, int g, Id z) {
    auto [a, b] = sp.split(q, z);
    return sp.pair(q, x.act(q, g, a), y.act(q, g, b));
  };
  if (x.is_discrete() && y.is_discrete()) {
    std::vector<std::vector<Id>> tab(x.group().order(), std::vector<Id>(size(0)));
    for (int g = 0; g < x.group().order(); ++g)
      for (Id z = 0; z < size(0); ++z) tab[g][z] = act(0, g, z);
    out.set = GSimplicialSet::discrete(x.group_ptr(), d, size(0), std::move(tab));
  } else {
    out.set = GSimplicialSet::from_functions(x.group_ptr(), d, size, face, degen, act);
  }
  return out;
}

GSimplicialSet wedge(const GSimplicialSet& x, const GSimplicialSet& y) {
  if (!(x.group() == y.group())) throw PreconditionError("wedge of simplicial sets over different groups");
  const int d = std::min(x.dim(), y.dim());
  auto size = [&](int q) { return x.size(q) + y.size(q) - 1; };
  auto lift = [&](int q, Id v) -> Id { return v == 0 ? 0 : x.size(q) - 1 + v; };
  auto through = [&](int q, Id z, int q2, auto fx, auto fy) -> Id {
    if (z < x.size(q)) return fx(z);
    return lift(q2, fy(z - x.size(q) + 1));
  };
  return GSimplicialSet::from_functions(
      x.group_ptr(), d, size,
      [&](int q, int i, Id z) {
        return through(q, z, q - 1, [&](Id a) { return x.face(q, i, a); }, [&](Id b) { return y.face(q, i, b); });
      },
      [&](int q, int i, Id z) {
        return through(q, z, q + 1, [&](Id a) { return x.degen(q, i, a); }, [&](Id b) { return y.degen(q, i, b); });
      },
      [&](int q, int g, Id z) {
        return through(q, z, q, [&](Id a) { return x.act(q, g, a); }, [&](Id b) { return y.act(q, g, b); });
      });
}

GSimplicialSet plus(const GSimplicialSet& a) {
  auto shift = [](Id v) { return v + 1; };
  if (a.is_discrete()) {
    std::vector<std::vector<Id>> tab(a.group().order(), std::vector<Id>(a.size(0) + 1, 0));
    for (int g = 0; g < a.group().order(); ++g)
      for (Id x = 0; x < a.size(0); ++x) tab[g][x + 1] = a.act(0, g, x) + 1;
    return GSimplicialSet::discrete(a.group_ptr(), a.dim(), a.size(0) + 1, std::move(tab));
  }
  return GSimplicialSet::from_functions(
      a.group_ptr(), a.dim(), [&](int q) { return a.size(q) + 1; },
      [&](int q, int i, Id z) { return z == 0 ? 0 : shift(a.face(q, i, z - 1)); },
      [&](int q, int i, Id z) { return z == 0 ? 0 : shift(a.degen(q, i, z - 1)); },
      [&](int q, int g, Id z) { return z == 0 ? 0 : shift(a.act(q, g, z - 1)); });
}

SmashProduct half_smash(const GSimplicialSet& x, const GSimplicialSet& a) { return smash(x, plus(a)); }

GSimplicialSet standard_simplex(GroupPtr group, int n, int dim) {
  // sequences per degree in lexicographic order
  std::vector<std::vector<std::vector<int>>> seqs(dim + 1);
  std::vector<std::map<std::vector<int>, Id>> index(dim + 1);
  for (int q = 0; q <= dim; ++q) {
    std::vector<int> s(q + 1, 0);
    for (;;) {
      index[q].emplace(s, static_cast<Id>(seqs[q].size()));
      seqs[q].push_back(s);
      int k = q;
      while (k >= 0 && s[k] == n) --k;
      if (k < 0) break;
      ++s[k];
      for (int j = k + 1; j <= q; ++j) s[j] = s[k];
    }
  }
  return GSimplicialSet::from_functions(
      std::move(group), dim, [&](int q) { return static_cast<Id>(seqs[q].size()); },
      [&](int q, int i, Id x) {
        auto s = seqs[q][x];
        s.erase(s.begin() + i);
        return index[q - 1].at(s);
      },
      [&](int q, int i, Id x) {
        auto s = seqs[q][x];
        s.insert(s.begin() + i, s[i]);
        return index[q + 1].at(s);
      },
      [](int, int, Id x) { return x; });
}

OrbitQuotient orbit_quotient(const GSimplicialSet& x, const AuxAction& k) {
  const int kord = k.group->order();
  const int d = x.dim();
  if (static_cast<int>(k.perm.size()) < d + 1) throw PreconditionError("auxiliary action not stored to top degree");
  OrbitQuotient out;
  out.projection.level.resize(d + 1);
  out.representative.resize(d + 1);
  for (int q = 0; q <= d; ++q) {
    const Id n = x.size(q);
    for (int a = 0; a < kord; ++a)
      for (Id v = 0; v < n; ++v) {
        Id w = k.perm[q][a][v];
        for (int g = 0; g < x.group().order(); ++g)
          if (k.perm[q][a][x.act(q, g, v)] != x.act(q, g, w))
            throw PreconditionError("auxiliary action does not commute with the G-action" + at(q, v));
        for (int i = 0; q > 0 && i <= q; ++i)
          if (k.perm[q - 1][a][x.face(q, i, v)] != x.face(q, i, w))
            throw PreconditionError("auxiliary action does not commute with faces" + at(q, v));
        for (int i = 0; q < d && i <= q; ++i)
          if (k.perm[q + 1][a][x.degen(q, i, v)] != x.degen(q, i, w))
            throw PreconditionError("auxiliary action does not commute with degeneracies" + at(q, v));
      }
    std::vector<Id> minrep(n);
    for (Id v = 0; v < n; ++v) {
      Id m = v;
      for (int a = 0; a < kord; ++a) m = std::min(m, k.perm[q][a][v]);
      minrep[v] = m;
    }
    std::vector<Id> orbit_of(n, 0);
    for (Id v = 0; v < n; ++v)
      if (minrep[v] == v) {
        orbit_of[v] = static_cast<Id>(out.representative[q].size());
        out.representative[q].push_back(v);
      }
    out.projection.level[q].resize(n);
    for (Id v = 0; v < n; ++v) out.projection.level[q][v] = orbit_of[minrep[v]];
  }
  const auto& pr = out.projection;
  const auto& rep = out.representative;
  out.set = GSimplicialSet::from_functions(
      x.group_ptr(), d, [&](int q) { return static_cast<Id>(rep[q].size()); },
      [&](int q, int i, Id o) { return pr(q - 1, x.face(q, i, rep[q][o])); },
      [&](int q, int i, Id o) { return pr(q + 1, x.degen(q, i, rep[q][o])); },
      [&](int q, int g, Id o) { return pr(q, x.act(q, g, rep[q][o])); });
  return out;
}

FixedPoints fixed_points(const GSimplicialSet& x, const std::vector<int>& subgroup) {
  if (!x.group().is_subgroup(subgroup)) throw PreconditionError("not a subgroup of the acting group");
  const int d = x.dim();
  FixedPoints out;
  out.inclusion.resize(d + 1);
  std::vector<std::vector<Id>> back(d + 1);
  for (int q = 0; q <= d; ++q) {
    back[q].assign(x.size(q), 0);
    for (Id v = 0; v < x.size(q); ++v) {
      bool fixed = std::all_of(subgroup.begin(), subgroup.end(), [&](int h) { return x.act(q, h, v) == v; });
      if (fixed) {
        back[q][v] = static_cast<Id>(out.inclusion[q].size());
        out.inclusion[q].push_back(v);
      }
    }
  }
  const auto& inc = out.inclusion;
  out.set = GSimplicialSet::from_functions(
      make_group(FinGroup::trivial()), d, [&](int q) { return static_cast<Id>(inc[q].size()); },
      [&](int q, int i, Id o) { return back[q - 1][x.face(q, i, inc[q][o])]; },
      [&](int q, int i, Id o) { return back[q + 1][x.degen(q, i, inc[q][o])]; }, [](int, int, Id o) { return o; });
  return out;
}

std::vector<int> sphere_coords(int k, int p, Id x) {
  std::vector<int> t(k, 0);
  if (x == 0) return t;
  Id r = x - 1;
  for (int i = k - 1; i >= 0; --i) {
    t[i] = static_cast<int>(r % p) + 1;
    r /= p;
  }
  return t;
}

Id sphere_id(int p, const std::vector<int>& t) {
  Id r = 0;
  for (int v : t) {
    if (v < 1 || v > p) return 0;
    r = r * p + static_cast<Id>(v - 1);
  }
  return r + 1;
}

GSimplicialSet sphere(const GSetAction& v, int dim) {
  const int k = v.size();
  auto ipow = [](Id b, int e) {
    Id r = 1;
    while (e--) r *= b;
    return r;
  };
  auto size = [&](int p) { return k == 0 ? Id{2} : (p == 0 ? Id{1} : 1 + ipow(p, k)); };
  if (k == 0) return GSimplicialSet::discrete(v.group_ptr(), dim, 2);
  // circle coordinate t = number of leading zeros in 0..01..1 of length p+1
  auto face1 = [](int i, int t) { return i < t ? t - 1 : t; };  // result in degree p-1, valid iff 1 ≤ · ≤ p-1
  auto degen1 = [](int, int i, int t) { return i < t ? t + 1 : t; };
  auto mapcoords = [&](int p, Id x, int p2, auto fn) -> Id {
    if (x == 0) return 0;
    auto t = sphere_coords(k, p, x);
    for (auto& c : t) c = fn(c);
    return sphere_id(p2, t);
  };
  return GSimplicialSet::from_functions(
      v.group_ptr(), dim, size,
      [&](int p, int i, Id x) { return mapcoords(p, x, p - 1, [&](int t) { return face1(i, t); }); },
      [&](int p, int i, Id x) { return mapcoords(p, x, p + 1, [&](int t) { return degen1(p, i, t); }); },
      [&](int p, int g, Id x) -> Id {
        if (x == 0) return 0;
        auto t = sphere_coords(k, p, x);
        std::vector<int> u(k);
        const Permutation& sg = v[g];
        for (int i = 1; i <= k; ++i) u[sg(i) - 1] = t[i - 1];  // (g·t)_{V(g) i} = t_i
        return sphere_id(p, u);
      });
}

GSimplicialSet diagonal(const Bisimplicial& b, int dim) {
  return GSimplicialSet::from_functions(
      b.group(), dim, [&](int n) { return b.size(n, n); }, [&](int n, int i, Id x) { return b.diag_face(n, i, x); },
      [&](int n, int i, Id x) { return b.diag_degen(n, i, x); },
      [&](int n, int g, Id x) { return b.act(n, n, g, x); });
}

std::optional<std::string> check_homotopy(const SimplicialHomotopy& hh, const GSimplicialSet& src,
                                          const GSimplicialSet& dst) {
  const int d = std::min(src.dim(), dst.dim());
  auto h = [&](int q, int j, Id x) { return hh.h[q][j][x]; };
  auto where = [](const char* what, int q, int i, int j, Id x) {
    std::ostringstream os;
    os << what << " (i=" << i << ", j=" << j << ") at degree " << q << ", simplex " << x;
    return os.str();
  };
  if (static_cast<int>(hh.h.size()) < d) return "homotopy not stored below degree " + std::to_string(d);
  for (int q = 0; q < d; ++q) {
    for (Id x = 0; x < src.size(q); ++x) {
      for (int j = 0; j <= q; ++j) {
        Id y = h(q, j, x);
        if (y >= dst.size(q + 1)) return where("h out of range", q, 0, j, x);
        if (x == 0 && y != 0) return where("h not based", q, 0, j, x);
        for (int g = 0; g < src.group().order(); ++g)
          if (h(q, j, src.act(q, g, x)) != dst.act(q + 1, g, y)) return where("h not equivariant", q, 0, j, x);
        for (int i = 0; i <= q + 1; ++i) {
          Id lhs = dst.face(q + 1, i, y);
          if (i < j) {
            if (lhs != h(q - 1, j - 1, src.face(q, i, x))) return where("d_i h_j != h_{j-1} d_i", q, i, j, x);
          } else if (i == j && i > 0) {
            if (lhs != dst.face(q + 1, i, h(q, j - 1, x))) return where("d_j h_j != d_j h_{j-1}", q, i, j, x);
          } else if (i > j + 1) {
            if (lhs != h(q - 1, j, src.face(q, i - 1, x))) return where("d_i h_j != h_j d_{i-1}", q, i, j, x);
          }
        }
        if (q + 1 < d)
          for (int i = 0; i <= q + 1; ++i) {
            Id lhs = dst.degen(q + 1, i, y);
            Id rhs = i <= j ? h(q + 1, j + 1, src.degen(q, i, x)) : h(q + 1, j, src.degen(q, i - 1, x));
            if (lhs != rhs) return where(i <= j ? "s_i h_j != h_{j+1} s_i" : "s_i h_j != h_j s_{i-1}", q, i, j, x);
          }
      }
      if (dst.face(q + 1, 0, h(q, 0, x)) != hh.f(q, x)) return where("d_0 h_0 != f", q, 0, 0, x);
      if (dst.face(q + 1, q + 1, h(q, q, x)) != hh.g(q, x)) return where("d_{q+1} h_q != g", q, q + 1, q, x);
    }
  }
  return std::nullopt;
}

SimplicialHomotopy constant_homotopy(const SimplicialMap& f, const GSimplicialSet& src, const GSimplicialSet& dst) {
  SimplicialHomotopy h;
  h.f = f;
  h.g = f;
  const int d = std::min(src.dim(), dst.dim());
  h.h.resize(d);
  for (int q = 0; q < d; ++q) {
    h.h[q].assign(q + 1, std::vector<Id>(src.size(q)));
    for (int j = 0; j <= q; ++j)
      for (Id x = 0; x < src.size(q); ++x) h.h[q][j][x] = dst.degen(q, j, f(q, x));
  }
  return h;
}

}  // namespace segal
