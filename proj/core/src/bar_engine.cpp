#include <algorithm>
#include <array>
#include <cstring>
#include <limits>
#include <mutex>
#include <sstream>

#include "segal/barmachine.hpp"

namespace segal {

namespace {

constexpr int kMaxSymmetricArity = 8;

// S_n as 1-based image arrays, inverses, and based maps n -> n.
struct PermTable {
  std::vector<std::array<std::uint8_t, kMaxArity + 1>> img, inv;
  std::vector<BasedMap> as_map;
};

const PermTable& perm_table(int n) {
  if (n > kMaxSymmetricArity) throw PreconditionError("orbit canonicalization limited to arity " +
                                                      std::to_string(kMaxSymmetricArity));
  static std::array<std::unique_ptr<PermTable>, kMaxSymmetricArity + 1> tables;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!tables[n]) {
    auto t = std::make_unique<PermTable>();
    for (const auto& p : all_permutations(n)) {
      std::array<std::uint8_t, kMaxArity + 1> a{}, b{};
      for (int i = 1; i <= n; ++i) {
        a[i] = static_cast<std::uint8_t>(p(i));
        b[p(i)] = static_cast<std::uint8_t>(i);
      }
      t->img.push_back(a);
      t->inv.push_back(b);
      t->as_map.push_back(BasedMap::from_permutation(p));
    }
    tables[n] = std::move(t);
  }
  return *tables[n];
}

// Least y∘τ⁻¹ over τ ∈ S_n, and the τ attaining it.
std::vector<Id> outer_step(const std::vector<Id>& y, std::vector<int>& cand) {
  const int n = static_cast<int>(y.size());
  const auto& t = perm_table(n);
  std::vector<Id> best = y;
  std::sort(best.begin(), best.end());
  cand.clear();
  for (std::size_t k = 0; k < t.img.size(); ++k) {
    bool eq = true;
    for (int i = 1; i <= n && eq; ++i) eq = y[t.inv[k][i] - 1] == best[i - 1];
    if (eq) cand.push_back(static_cast<int>(k));
  }
  return best;
}

// Least σ∘h∘τ⁻¹ over σ ∈ above and τ ∈ S_m; `cand` receives the attaining τ.
BasedMap hom_step(const BasedMap& h, const std::vector<int>& above, std::vector<int>& cand) {
  const int m = h.source(), n = h.target();
  const auto& tn = perm_table(n);
  const auto& tm = perm_table(m);
  std::vector<std::array<std::uint8_t, kMaxArity + 1>> attained;
  std::array<std::uint8_t, kMaxArity + 1> best{};
  bool have = false;
  for (int s : above) {
    std::array<std::uint8_t, kMaxArity + 1> a{};
    for (int i = 1; i <= m; ++i) a[i] = tn.img[s][h(i)];
    std::array<std::uint8_t, kMaxArity + 1> sorted = a;
    std::sort(sorted.begin() + 1, sorted.begin() + 1 + m);
    if (!have || sorted < best) {
      best = sorted;
      attained.clear();
      have = true;
    }
    if (sorted == best) attained.push_back(a);
  }
  std::sort(attained.begin(), attained.end());
  attained.erase(std::unique(attained.begin(), attained.end()), attained.end());
  cand.clear();
  for (std::size_t k = 0; k < tm.img.size(); ++k)
    for (const auto& a : attained) {
      bool eq = true;
      for (int i = 1; i <= m && eq; ++i) eq = a[tm.inv[k][i]] == best[i];
      if (eq) {
        cand.push_back(static_cast<int>(k));
        break;
      }
    }
  BasedMap out = BasedMap::zero(m, n);
  for (int i = 1; i <= m; ++i) out.set(i, best[i]);
  return out;
}

BasedMap map_from_outer(const std::vector<Id>& y, int target) {
  BasedMap f = BasedMap::zero(static_cast<int>(y.size()), target);
  for (std::size_t i = 0; i < y.size(); ++i) f.set(static_cast<int>(i) + 1, static_cast<int>(y[i]));
  return f;
}

}  // namespace

// ---- Monad ----

Monad::Monad(CatTag ground, CatPtr ambient, Variant variant)
    : ground_(ground), ambient_(std::move(ambient)), variant_(variant) {
  const bool eq = is_equivariant(ground);
  if (ground != CatTag::Sigma && ground != CatTag::N && ground != CatTag::SigmaG && ground != CatTag::NG)
    throw PreconditionError(std::string("no monad over ") + to_string(ground));
  if (ambient_->tag() != (eq ? CatTag::FG : CatTag::F))
    throw PreconditionError(std::string("ground ") + to_string(ground) + " does not match ambient " +
                            to_string(ambient_->tag()));
  if (variant == Variant::Product && ground != CatTag::NG)
    throw PreconditionError("the product variant exists only over the equivariant natural numbers");
  for (int c = 0; c < ambient_->num_objects(); ++c)
    if (ground != CatTag::SigmaG || ambient_->object(c).alpha.is_trivial()) cell_objects_.push_back(c);
}

int Monad::representative_object(int c) const {
  return ground_ == CatTag::SigmaG ? ambient_->trivial_object(ambient_->arity(c)) : c;
}

std::string Monad::name() const {
  std::string s = variant_ == Variant::Product ? "x" : "^";
  s += ambient_->tag() == CatTag::FG ? "F_G" : "F";
  s += "^";
  s += to_string(ground_);
  return s;
}

// ---- BarCell / Outer ----

std::string BarCell::str() const {
  std::ostringstream os;
  os << "[y=(";
  for (std::size_t i = 0; i < outer.size(); ++i) os << (i ? "," : "") << outer[i];
  os << ")";
  for (int k = static_cast<int>(homs.size()) - 1; k >= 0; --k) os << ", " << homs[k].str();
  os << ", x=" << x << " | objs";
  for (int c : obj) os << " " << c;
  os << "]";
  return os.str();
}

Outer Outer::hom_into(CatPtr ambient, int d) {
  Outer o;
  o.ambient_ = std::move(ambient);
  o.target_ = d;
  return o;
}

Outer Outer::space(std::shared_ptr<const GSimplicialSet> a) {
  Outer o;
  o.space_ = std::move(a);
  return o;
}

Id Outer::values(int p, int) const {
  return is_hom() ? static_cast<Id>(ambient_->arity(target_) + 1) : space_->size(p);
}

Id Outer::act(int p, int g, Id v) const {
  return is_hom() ? static_cast<Id>(ambient_->act_point(target_, g, static_cast<int>(v))) : space_->act(p, g, v);
}

// ---- BarEngine ----

BarEngine::BarEngine(Monad monad, Diagram x, Outer outer)
    : monad_(std::move(monad)), x_(std::move(x)), outer_(std::move(outer)) {
  auto incl = x_.category().inclusion_into(monad_.ambient());
  if (!incl || x_.category().num_objects() != monad_.ambient().num_objects())
    throw PreconditionError("algebra " + x_.name() + " is not a diagram over " + monad_.name() + "'s category");
  if (!outer_.is_hom() && outer_.space().group() != x_.category().group())
    throw PreconditionError("sphere and algebra have different groups");
}

bool BarEngine::is_base(const BarCell& c) const {
  if (std::all_of(c.outer.begin(), c.outer.end(), [](Id v) { return v == 0; })) return true;
  if (monad_.variant() == Variant::Product) return false;
  if (c.x == 0) return true;
  return std::any_of(c.homs.begin(), c.homs.end(), [](const BasedMap& h) { return h.is_zero(); });
}

Cell BarEngine::canonical(const Cell& in, int p) const {
  if (!in || is_base(*in)) return std::nullopt;
  BarCell c = *in;
  const IndexCategory& amb = monad_.ambient();
  for (std::size_t k = 0; k < c.obj.size(); ++k) {
    int r = monad_.representative_object(c.obj[k]);
    if (r == c.obj[k]) continue;
    if (k == 0) c.x = x_.act(c.obj[0], r, BasedMap::identity(amb.arity(r)), p, c.x);
    c.obj[k] = r;
  }
  if (!monad_.symmetric()) return c;
  const int q = c.q();
  std::vector<int> cand, next;
  c.outer = outer_step(c.outer, cand);
  for (int k = q - 1; k >= 0; --k) {
    c.homs[k] = hom_step(c.homs[k], cand, next);
    cand.swap(next);
  }
  const auto& t = perm_table(amb.arity(c.obj[0]));
  Id best = std::numeric_limits<Id>::max();
  for (int k : cand) best = std::min(best, x_.act(c.obj[0], c.obj[0], t.as_map[k], p, c.x));
  c.x = best;
  return c;
}

Cell BarEngine::bar_face(const BarCell& c, int i, int p) const {
  const int q = c.q();
  if (q < 1 || i < 0 || i > q) throw PreconditionError("bar face index out of range");
  BarCell r;
  if (i == 0) {
    const BasedMap& h = c.homs[q - 1];
    r.obj.assign(c.obj.begin(), c.obj.end() - 1);
    r.homs.assign(c.homs.begin(), c.homs.end() - 1);
    r.outer.resize(h.source());
    for (int j = 1; j <= h.source(); ++j) r.outer[j - 1] = h(j) == 0 ? 0 : c.outer[h(j) - 1];
    r.x = c.x;
  } else if (i == q) {
    r.obj.assign(c.obj.begin() + 1, c.obj.end());
    r.homs.assign(c.homs.begin() + 1, c.homs.end());
    r.outer = c.outer;
    r.x = x_.act(c.obj[0], c.obj[1], c.homs[0], p, c.x);
  } else {
    const int k = q - i;
    r.obj = c.obj;
    r.obj.erase(r.obj.begin() + k);
    r.homs = c.homs;
    r.homs[k - 1] = compose_based(c.homs[k], c.homs[k - 1]);
    r.homs.erase(r.homs.begin() + k);
    r.outer = c.outer;
    r.x = c.x;
  }
  if (is_base(r)) return std::nullopt;
  return r;
}

BarCell BarEngine::bar_degen(const BarCell& c, int i) const {
  const int q = c.q();
  if (i < 0 || i > q) throw PreconditionError("bar degeneracy index out of range");
  const int k = q - i;
  BarCell r = c;
  r.obj.insert(r.obj.begin() + k, c.obj[k]);
  r.homs.insert(r.homs.begin() + k, BasedMap::identity(monad_.ambient().arity(c.obj[k])));
  return r;
}

Cell BarEngine::simp_face(const BarCell& c, int p, int i) const {
  BarCell r = c;
  for (auto& v : r.outer) v = outer_.face(p, i, v);
  r.x = x_.value(c.obj[0]).face(p, i, c.x);
  if (is_base(r)) return std::nullopt;
  return r;
}

BarCell BarEngine::simp_degen(const BarCell& c, int p, int i) const {
  BarCell r = c;
  for (auto& v : r.outer) v = outer_.degen(p, i, v);
  r.x = x_.value(c.obj[0]).degen(p, i, c.x);
  return r;
}

BarCell BarEngine::act(const BarCell& c, int p, int g) const {
  const IndexCategory& amb = monad_.ambient();
  BarCell r = c;
  const int top = c.obj.back();
  for (std::size_t j = 1; j <= c.outer.size(); ++j)
    r.outer[amb.act_point(top, g, static_cast<int>(j)) - 1] = outer_.act(p, g, c.outer[j - 1]);
  for (std::size_t k = 0; k < c.homs.size(); ++k) r.homs[k] = amb.act_on_hom(g, c.obj[k], c.obj[k + 1], c.homs[k]);
  r.x = x_.value(c.obj[0]).act(p, g, c.x);
  return r;
}

BarCell BarEngine::extra_outer(const BarCell& c) const {
  if (!outer_.is_hom()) throw PreconditionError("extra degeneracy needs a representable outer factor");
  const int d = outer_.target();
  const int n = monad_.ambient().arity(d);
  BarCell r = c;
  r.obj.push_back(monad_.representative_object(d));
  r.homs.push_back(map_from_outer(c.outer, n));
  r.outer.resize(n);
  for (int j = 0; j < n; ++j) r.outer[j] = static_cast<Id>(j + 1);
  return r;
}

std::string BarEngine::key(const BarCell& c) const {
  std::string s;
  s.reserve(8 + c.obj.size() + 4 * c.outer.size() + 8 * c.homs.size());
  auto put = [&s](const void* p, std::size_t n) { s.append(static_cast<const char*>(p), n); };
  for (int o : c.obj) s.push_back(static_cast<char>(o));
  s.push_back('|');
  for (Id v : c.outer) put(&v, sizeof v);
  for (const auto& h : c.homs) {
    std::uint64_t b = h.pack();
    put(&b, sizeof b);
  }
  put(&c.x, sizeof c.x);
  return s;
}

const BarEngine::Level& BarEngine::level(int q, int p) const {
  if (q < 0 || p < 0) throw PreconditionError("negative degree");
  if (p > x_.dim() || (!outer_.is_hom() && p > outer_.space().dim()))
    throw PreconditionError("internal degree " + std::to_string(p) + " not stored");
  auto& slot = levels_[{q, p}];
  if (!slot) {
    auto lv = std::make_unique<Level>();
    lv->cells.emplace_back();
    enumerate(q, p, *lv);
    slot = std::move(lv);
  }
  return *slot;
}

// Orderly generation: each prefix (outer, homs from the outside in) must already be the
// least in its orbit, so every orbit is produced once, as its canonical cell.
void BarEngine::enumerate(int q, int p, Level& out) const {
  const IndexCategory& amb = monad_.ambient();
  const bool smash = monad_.variant() == Variant::Smash;
  const bool sym = monad_.symmetric();
  BarCell c;
  c.obj.assign(q + 1, 0);
  c.homs.resize(q);

  auto emit = [&](const BarCell& cell) {
    Id id = static_cast<Id>(out.cells.size());
    out.index.emplace(key(cell), id);
    out.cells.push_back(cell);
  };

  std::function<void(int, const std::vector<int>&)> inner = [&](int k, const std::vector<int>& cand) {
    if (k < 0) {
      const int c0 = c.obj[0];
      const Id nx = x_.value(c0).size(p);
      const auto* t = sym ? &perm_table(amb.arity(c0)) : nullptr;
      for (Id x = smash ? 1 : 0; x < nx; ++x) {
        if (sym) {
          bool least = true;
          for (int s : cand)
            if (x_.act(c0, c0, t->as_map[s], p, x) < x) {
              least = false;
              break;
            }
          if (!least) continue;
        }
        c.x = x;
        emit(c);
      }
      return;
    }
    const int above = c.obj[k + 1];
    for (int ck : monad_.cell_objects()) {
      if (smash && amb.arity(ck) == 0) continue;
      c.obj[k] = ck;
      for (const BasedMap& h : amb.homs(ck, above)) {
        if (smash && h.is_zero()) continue;
        std::vector<int> next;
        if (sym) {
          if (hom_step(h, cand, next) != h) continue;
        }
        c.homs[k] = h;
        inner(k - 1, next);
      }
    }
  };

  for (int cq : monad_.cell_objects()) {
    const int n = amb.arity(cq);
    if (n == 0) continue;  // the outer factor would be empty, hence the basepoint
    c.obj[q] = cq;
    const Id nv = outer_.values(p, n);
    std::vector<Id> y(n, 0);
    for (;;) {
      bool nonzero = std::any_of(y.begin(), y.end(), [](Id v) { return v != 0; });
      if (nonzero && (!sym || std::is_sorted(y.begin(), y.end()))) {
        std::vector<int> cand;
        if (sym) outer_step(y, cand);
        c.outer = y;
        inner(q - 1, cand);
      }
      int j = n - 1;
      while (j >= 0 && y[j] + 1 == nv) y[j--] = 0;
      if (j < 0) break;
      ++y[j];
    }
  }
}

Id BarEngine::size(int q, int p) const { return static_cast<Id>(level(q, stored_p(p)).cells.size()); }

const BarCell& BarEngine::cell(int q, int p, Id id) const {
  const Level& lv = level(q, stored_p(p));
  if (id == 0 || id >= lv.cells.size()) throw PreconditionError("no bar cell with id " + std::to_string(id));
  return lv.cells[id];
}

Id BarEngine::id_of(int q, int p, const Cell& c) const {
  Cell k = canonical(c, p);
  if (!k) return 0;
  const Level& lv = level(q, stored_p(p));
  auto it = lv.index.find(key(*k));
  if (it == lv.index.end()) throw PreconditionError("bar cell " + k->str() + " lies outside the truncation");
  return it->second;
}

GSimplicialSet BarEngine::diagonal(int dim) const {
  if (dim > x_.dim() || (!outer_.is_hom() && dim > outer_.space().dim()))
    throw PreconditionError("diagonal requested above the stored degree");
  return GSimplicialSet::from_functions(
      x_.category().group_ptr(), dim, [this](int n) { return size(n, n); },
      [this](int n, int i, Id v) -> Id {
        if (v == 0) return 0;
        Cell b = bar_face(cell(n, n, v), i, n);
        if (!b) return 0;
        return id_of(n - 1, n - 1, simp_face(*b, n, i));
      },
      [this](int n, int i, Id v) -> Id {
        if (v == 0) return 0;
        return id_of(n + 1, n + 1, simp_degen(bar_degen(cell(n, n, v), i), n, i));
      },
      [this](int n, int g, Id v) -> Id { return v == 0 ? 0 : id_of(n, n, act(cell(n, n, v), n, g)); });
}

BasedMap BarEngine::composite(const BarCell& c) const {
  if (!outer_.is_hom()) throw PreconditionError("composite needs a representable outer factor");
  BasedMap f = map_from_outer(c.outer, monad_.ambient().arity(outer_.target()));
  for (int k = c.q() - 1; k >= 0; --k) f = compose_based(f, c.homs[k]);
  return f;
}

Id BarEngine::epsilon(const BarCell& c, int p) const {
  return x_.act(c.obj[0], outer_.target(), composite(c), p, c.x);
}

}  // namespace segal
