#include "segal/fingroups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace segal {

FinGroup::FinGroup(int order, std::vector<int> table, std::string name)
    : order_(order), table_(std::move(table)), inverse_(order, -1), name_(std::move(name)) {
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == 0) inverse_[a] = b;
}

FinGroup FinGroup::trivial() { return FinGroup(1, {0}, "e"); }

FinGroup FinGroup::cyclic(int n) {
  if (n < 1) throw PreconditionError("cyclic group order must be positive");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FinGroup(n, std::move(t), n == 1 ? "e" : "C" + std::to_string(n));
}

FinGroup FinGroup::symmetric(int n) {
  const auto& perms = all_permutations(n);
  const int k = static_cast<int>(perms.size());
  std::map<Permutation, int> index;
  for (int i = 0; i < k; ++i) index.emplace(perms[i], i);
  std::vector<int> t(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a * k + b] = index.at(perms[a] * perms[b]);
  return FinGroup(k, std::move(t), "S" + std::to_string(n));
}

FinGroup FinGroup::product(const FinGroup& g, const FinGroup& h) {
  const int k = g.order() * h.order();
  std::vector<int> t(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int ga = a / h.order(), ha = a % h.order();
      int gb = b / h.order(), hb = b % h.order();
      t[a * k + b] = g.mul(ga, gb) * h.order() + h.mul(ha, hb);
    }
  return FinGroup(k, std::move(t), g.name() + "x" + h.name());
}

FinGroup FinGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  const int k = static_cast<int>(table.size());
  if (k == 0) throw PreconditionError("group table is empty");
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(k) * k);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != k) throw PreconditionError("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= k) throw PreconditionError("group table entry out of range");
      t.push_back(v);
    }
  }
  auto m = [&](int a, int b) { return t[a * k + b]; };
  for (int a = 0; a < k; ++a)
    if (m(0, a) != a || m(a, 0) != a) throw PreconditionError("element 0 is not the identity");
  for (int a = 0; a < k; ++a) {
    bool has_inv = false;
    for (int b = 0; b < k; ++b) has_inv |= (m(a, b) == 0 && m(b, a) == 0);
    if (!has_inv) throw PreconditionError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (m(m(a, b), c) != m(a, m(b, c)))
          throw PreconditionError("group table is not associative");
  return FinGroup(k, std::move(t), std::move(name));
}

bool FinGroup::is_subgroup(std::span<const int> elems) const {
  std::vector<char> in(order_, 0);
  for (int e : elems) {
    if (e < 0 || e >= order_) return false;
    in[e] = 1;
  }
  if (!in[0]) return false;
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (in[a] && in[b] && !in[mul(a, b)]) return false;
  return true;
}

std::vector<int> FinGroup::closure(std::span<const int> gens) const {
  std::vector<char> in(order_, 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      int c = mul(out[i], g);
      if (!in[c]) {
        in[c] = 1;
        out.push_back(c);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

GroupPtr make_group(FinGroup g) { return std::make_shared<const FinGroup>(std::move(g)); }

// ---- Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v]) throw PreconditionError("image is not a bijection of {1..n}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::swap(im[i - 1], im[j - 1]);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (size() != o.size()) throw PreconditionError("permutation arity mismatch");
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[i] = image_[o.image_[i] - 1];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[image_[i] - 1] = i + 1;
  return Permutation(std::move(im));
}

const std::vector<Permutation>& all_permutations(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<Permutation>>> cache;
  if (n < 0 || n > 10) throw PreconditionError("symmetric group degree out of range");
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<Permutation>>();
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    do slot->emplace_back(im);
    while (std::next_permutation(im.begin(), im.end()));
  }
  return *slot;
}

// ---- GSetAction

GSetAction::GSetAction(GroupPtr group, std::vector<Permutation> perms)
    : group_(std::move(group)), perms_(std::move(perms)) {
  if (!group_) throw PreconditionError("G-set action without a group");
  if (static_cast<int>(perms_.size()) != group_->order())
    throw PreconditionError("need one permutation per group element");
  n_ = perms_.empty() ? 0 : perms_[0].size();
  for (const auto& p : perms_)
    if (p.size() != n_) throw PreconditionError("permutations of differing arity");
  if (!perms_[0].is_identity()) throw PreconditionError("identity must act trivially");
  for (int g = 0; g < group_->order(); ++g)
    for (int h = 0; h < group_->order(); ++h)
      if (perms_[group_->mul(g, h)] != perms_[g] * perms_[h])
        throw PreconditionError("action is not a homomorphism");
}

GSetAction GSetAction::trivial(GroupPtr group, int n) {
  std::vector<Permutation> p(group->order(), Permutation::identity(n));
  return GSetAction(std::move(group), std::move(p));
}

GSetAction GSetAction::regular(GroupPtr group) {
  const int k = group->order();
  std::vector<Permutation> p;
  for (int g = 0; g < k; ++g) {
    std::vector<int> im(k);
    for (int h = 0; h < k; ++h) im[h] = group->mul(g, h) + 1;
    p.emplace_back(std::move(im));
  }
  return GSetAction(std::move(group), std::move(p));
}

bool GSetAction::is_trivial() const {
  return std::all_of(perms_.begin(), perms_.end(), [](const Permutation& p) { return p.is_identity(); });
}

// ---- BasedMap

BasedMap::BasedMap(int n, std::initializer_list<int> image)
    : BasedMap(n, std::span<const int>(image.begin(), image.size())) {}

BasedMap::BasedMap(int n, std::span<const int> image) {
  if (image.size() > static_cast<std::size_t>(kMaxArity) || n > kMaxArity || n < 0)
    throw PreconditionError("based map arity exceeds " + std::to_string(kMaxArity));
  m_ = static_cast<std::uint8_t>(image.size());
  n_ = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 0 || image[i] > n) throw PreconditionError("based map value out of range");
    img_[i] = static_cast<std::uint8_t>(image[i]);
  }
}

BasedMap BasedMap::identity(int n) {
  BasedMap f = zero(n, n);
  for (int i = 1; i <= n; ++i) f.img_[i - 1] = static_cast<std::uint8_t>(i);
  return f;
}

BasedMap BasedMap::zero(int m, int n) {
  if (m > kMaxArity || n > kMaxArity || m < 0 || n < 0)
    throw PreconditionError("based map arity exceeds " + std::to_string(kMaxArity));
  BasedMap f;
  f.m_ = static_cast<std::uint8_t>(m);
  f.n_ = static_cast<std::uint8_t>(n);
  return f;
}

BasedMap BasedMap::from_permutation(const Permutation& p) { return BasedMap(p.size(), p.image()); }

void BasedMap::set(int i, int v) {
  if (i < 1 || i > m_ || v < 0 || v > n_) throw PreconditionError("based map index out of range");
  img_[i - 1] = static_cast<std::uint8_t>(v);
}

bool BasedMap::is_zero() const {
  for (int i = 0; i < m_; ++i)
    if (img_[i]) return false;
  return true;
}

bool BasedMap::is_identity() const {
  if (m_ != n_) return false;
  for (int i = 0; i < m_; ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

bool BasedMap::is_partial_injective() const {
  unsigned seen = 0;
  for (int i = 0; i < m_; ++i) {
    if (!img_[i]) continue;
    unsigned bit = 1u << img_[i];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool BasedMap::is_permutation() const {
  if (m_ != n_) return false;
  for (int i = 0; i < m_; ++i)
    if (!img_[i]) return false;
  return is_partial_injective();
}

std::uint64_t BasedMap::pack() const {
  std::uint64_t b = 0;
  for (int i = 0; i < m_; ++i) b |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
  return b;
}

BasedMap BasedMap::unpack(int m, int n, std::uint64_t bits) {
  BasedMap f = zero(m, n);
  for (int i = 0; i < m; ++i) f.img_[i] = static_cast<std::uint8_t>((bits >> (4 * i)) & 0xF);
  return f;
}

std::string BasedMap::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m_; ++i) os << (i ? "," : "") << int(img_[i]);
  os << "]:" << int(m_) << "->" << int(n_);
  return os.str();
}

BasedMap compose_based(const BasedMap& psi, const BasedMap& phi) {
  if (phi.target() != psi.source())
    throw PreconditionError("compose_based arity mismatch: " + psi.str() + " after " + phi.str());
  BasedMap out = BasedMap::zero(phi.source(), psi.target());
  for (int i = 1; i <= phi.source(); ++i) out.set(i, psi(phi(i)));
  return out;
}

BasedMap smash_based(const BasedMap& phi, const BasedMap& psi) {
  const int m = phi.source(), p = phi.target(), n = psi.source(), q = psi.target();
  BasedMap out = BasedMap::zero(m * n, p * q);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) out.set(lex_index(i, j, n), lex_index(phi(i), psi(j), q));
  return out;
}

const char* to_string(BaseCat c) {
  switch (c) {
    case BaseCat::F: return "F";
    case BaseCat::Pi: return "Pi";
    case BaseCat::Sigma: return "Sigma";
    case BaseCat::N: return "N";
  }
  return "?";
}

bool hom_in(BaseCat cat, const BasedMap& f) {
  switch (cat) {
    case BaseCat::F: return true;
    case BaseCat::Pi: return f.is_partial_injective();
    case BaseCat::Sigma: return f.is_permutation();
    case BaseCat::N: return f.is_identity();
  }
  return false;
}

std::vector<BasedMap> enumerate_homs(BaseCat cat, int m, int n) {
  if (m < 0 || n < 0) throw PreconditionError("negative arity");
  std::vector<BasedMap> out;
  if ((cat == BaseCat::Sigma || cat == BaseCat::N) && m != n) return out;
  if (cat == BaseCat::N) return {BasedMap::identity(n)};
  std::vector<int> im(m, 0);
  for (;;) {
    BasedMap f(n, im);
    if (hom_in(cat, f)) out.push_back(f);
    int k = m - 1;
    while (k >= 0 && im[k] == n) im[k--] = 0;
    if (k < 0) break;
    ++im[k];
  }
  return out;
}

BasedMap conjugation_action(int g, const BasedMap& phi, const GSetAction& alpha, const GSetAction& beta) {
  if (alpha.size() != phi.source() || beta.size() != phi.target())
    throw PreconditionError("conjugation_action arity mismatch");
  const Permutation& a = alpha[alpha.group().inv(g)];
  const Permutation& b = beta[g];
  BasedMap out = BasedMap::zero(phi.source(), phi.target());
  for (int i = 1; i <= phi.source(); ++i) out.set(i, b(phi(a(i))));
  return out;
}

std::vector<GraphSubgroup> graph_subgroups(const FinGroup& g, int n) {
  const auto& perms = all_permutations(n);
  const long sn = static_cast<long>(perms.size());
  if (g.order() * sn > kMaxAmbientOrder)
    throw PreconditionError("G x S_n larger than " + std::to_string(kMaxAmbientOrder));
  FinGroup sym = FinGroup::symmetric(n);
  FinGroup amb = FinGroup::product(g, sym);
  auto is_graph = [&](const std::vector<int>& sub) {
    std::vector<char> seen(g.order(), 0);
    for (int e : sub) {
      int ge = e / static_cast<int>(sn);
      if (seen[ge]) return false;
      seen[ge] = 1;
    }
    return true;
  };
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier{{0}};
  found.insert({0});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& sub : frontier)
      for (int e = 0; e < amb.order(); ++e) {
        if (std::binary_search(sub.begin(), sub.end(), e)) continue;
        std::vector<int> gens = sub;
        gens.push_back(e);
        auto c = amb.closure(gens);
        if (!is_graph(c)) continue;
        if (found.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  std::vector<GraphSubgroup> out;
  for (const auto& sub : found) {
    GraphSubgroup l;
    l.n = n;
    for (int e : sub) l.elements.emplace_back(e / static_cast<int>(sn), perms[e % sn]);
    std::sort(l.elements.begin(), l.elements.end());
    out.push_back(std::move(l));
  }
  std::sort(out.begin(), out.end(), [](const GraphSubgroup& a, const GraphSubgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

}  // namespace segal
