#include "segal/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "segal/snf.hpp"

namespace segal {

namespace {

long long mod(long long a, long long n) {
  if (n == 0) return a;
  long long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

AbGroup::AbGroup() : group_(make_group(FinGroup::trivial())) {}

AbGroup::AbGroup(std::vector<long long> orders, GroupPtr group)
    : orders_(std::move(orders)), group_(group ? std::move(group) : make_group(FinGroup::trivial())) {
  for (long long o : orders_)
    if (o < 0 || o == 1) throw PreconditionError("cyclic factor orders must be 0 (for Z) or at least 2");
}

AbGroup AbGroup::with_action(GroupPtr group, std::vector<std::vector<std::vector<long long>>> act) const {
  AbGroup out(orders_, group);
  if (static_cast<int>(act.size()) != group->order()) throw PreconditionError("need one matrix per group element");
  for (const auto& mtx : act) {
    if (static_cast<int>(mtx.size()) != rank()) throw PreconditionError("action matrix has wrong size");
    for (const auto& row : mtx)
      if (static_cast<int>(row.size()) != rank()) throw PreconditionError("action matrix has wrong size");
  }
  out.act_ = std::move(act);
  // well defined: each column image must respect the order of its generator
  for (int g = 0; g < group->order(); ++g)
    for (int j = 0; j < rank(); ++j) {
      Elem col(rank());
      for (int i = 0; i < rank(); ++i) col[i] = out.act_[g][i][j] * orders_[j];
      if (!out.is_zero(col)) throw PreconditionError("action matrix not compatible with the cyclic orders");
    }
  for (int g = 0; g < group->order(); ++g)
    for (int h = 0; h < group->order(); ++h)
      for (int j = 0; j < rank(); ++j) {
        Elem e = out.generator(j);
        if (out.act(group->mul(g, h), e) != out.act(g, out.act(h, e)))
          throw PreconditionError("matrices do not define a group action");
      }
  for (int j = 0; j < rank(); ++j)
    if (out.act(0, out.generator(j)) != out.generator(j)) throw PreconditionError("identity must act trivially");
  return out;
}

bool AbGroup::finite() const {
  return std::none_of(orders_.begin(), orders_.end(), [](long long o) { return o == 0; });
}

Id AbGroup::order() const {
  if (!finite()) throw PreconditionError("infinite abelian group has no finite order");
  unsigned long long n = 1;
  for (long long o : orders_) {
    n *= static_cast<unsigned long long>(o);
    if (n > 0xffffffffull) throw PreconditionError("abelian group too large to enumerate");
  }
  return static_cast<Id>(n);
}

AbGroup::Elem AbGroup::generator(int i) const {
  Elem e = zero();
  e[i] = 1;
  return normalize(e);
}

AbGroup::Elem AbGroup::normalize(Elem a) const {
  if (a.size() != orders_.size()) throw PreconditionError("element has wrong number of coordinates");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i], orders_[i]);
  return a;
}

AbGroup::Elem AbGroup::add(const Elem& a, const Elem& b) const {
  Elem c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return normalize(std::move(c));
}

AbGroup::Elem AbGroup::neg(const Elem& a) const { return scale(-1, a); }

AbGroup::Elem AbGroup::scale(long long k, const Elem& a) const {
  Elem c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
  return normalize(std::move(c));
}

AbGroup::Elem AbGroup::act(int g, const Elem& a) const {
  if (act_.empty()) return a;
  Elem c(a.size(), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) c[i] += act_[g][i][j] * a[j];
  return normalize(std::move(c));
}

bool AbGroup::is_zero(const Elem& a) const {
  Elem n = normalize(a);
  return std::all_of(n.begin(), n.end(), [](long long v) { return v == 0; });
}

Id AbGroup::index(const Elem& a) const {
  Id r = 0;
  for (int i = 0; i < rank(); ++i) r = r * static_cast<Id>(orders_[i]) + static_cast<Id>(mod(a[i], orders_[i]));
  return r;
}

AbGroup::Elem AbGroup::element(Id idx) const {
  Elem e(orders_.size());
  for (int i = rank() - 1; i >= 0; --i) {
    e[i] = static_cast<long long>(idx % orders_[i]);
    idx /= static_cast<Id>(orders_[i]);
  }
  return e;
}

std::string AbGroup::str() const {
  if (orders_.empty()) return "0";
  std::ostringstream os;
  for (int i = 0; i < rank(); ++i) {
    if (i) os << " + ";
    if (orders_[i] == 0)
      os << "Z";
    else
      os << "Z/" << orders_[i];
  }
  return os.str();
}

std::vector<long long> invariant_factors(const AbGroup& a) {
  const std::size_t k = a.orders().size();
  BigMatrix m(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = a.orders()[i];
  auto s = smith_normal_form(std::move(m), k);
  std::vector<long long> out;
  for (const auto& d : s.diagonal)
    if (d != 1) out.push_back(static_cast<long long>(d));
  for (std::size_t i = s.diagonal.size(); i < k; ++i) out.push_back(0);
  return out;
}

bool isomorphic(const AbGroup& a, const AbGroup& b) { return invariant_factors(a) == invariant_factors(b); }

AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
  auto o = a.orders();
  o.insert(o.end(), b.orders().begin(), b.orders().end());
  return AbGroup(std::move(o));
}

TensorProduct tensor_ab(const AbGroup& a, const AbGroup& b) {
  if (!a.trivial_action() || !b.trivial_action())
    throw PreconditionError("tensor_ab is implemented for trivial group actions only");
  const int ka = a.rank(), kb = b.rank(), g = ka * kb;
  // generators e_i ⊗ f_j at column i*kb + j; relations a_i (e_i⊗f_j) and b_j (e_i⊗f_j)
  BigMatrix rel;
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < kb; ++j) {
      for (long long o : {a.orders()[i], b.orders()[j]}) {
        if (o == 0) continue;
        std::vector<BigInt> r(g, 0);
        r[i * kb + j] = o;
        rel.push_back(std::move(r));
      }
    }
  auto s = smith_normal_form(rel, static_cast<std::size_t>(g), true);
  // quotient coordinates y = x V; coordinate c has order diagonal[c] (or Z past the rank)
  std::vector<long long> orders;
  std::vector<int> keep;
  for (int c = 0; c < g; ++c) {
    long long o = c < static_cast<int>(s.diagonal.size()) ? static_cast<long long>(s.diagonal[c]) : 0;
    if (o == 1) continue;
    orders.push_back(o);
    keep.push_back(c);
  }
  // torsion first, ascending; free summands last
  std::vector<int> perm(keep.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    long long ox = orders[x] == 0 ? -1 : orders[x], oy = orders[y] == 0 ? -1 : orders[y];
    if ((ox < 0) != (oy < 0)) return oy < 0;
    return ox < oy;
  });
  std::vector<long long> sorted_orders;
  for (int p : perm) sorted_orders.push_back(orders[p]);
  TensorProduct out{AbGroup(sorted_orders), {}};
  out.gen_image.assign(ka, std::vector<AbGroup::Elem>(kb));
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < kb; ++j) {
      AbGroup::Elem e(perm.size());
      for (std::size_t k = 0; k < perm.size(); ++k)
        e[k] = static_cast<long long>(s.col_transform[i * kb + j][keep[perm[k]]]);
      out.gen_image[i][j] = out.group.normalize(e);
    }
  return out;
}

AbGroup::Elem TensorProduct::operator()(const AbGroup::Elem& a, const AbGroup::Elem& b) const {
  AbGroup::Elem r = group.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] == 0 || b[j] == 0) continue;
      r = group.add(r, group.scale(a[i] * b[j], gen_image[i][j]));
    }
  return r;
}

AbGroup::Elem RingObject::mul(const AbGroup::Elem& a, const AbGroup::Elem& b) const {
  AbGroup::Elem r = additive.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] == 0 || b[j] == 0) continue;
      r = additive.add(r, additive.scale(a[i] * b[j], gen_mult[i][j]));
    }
  return r;
}

RingObject RingObject::integers_mod(long long n) {
  if (n == 1) return RingObject{AbGroup(), {}, {}};
  AbGroup a = AbGroup::cyclic(n);
  return RingObject{a, {{a.generator(0)}}, a.generator(0)};
}

}  // namespace segal
