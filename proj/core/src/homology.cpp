#include "segal/homology.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <map>
#include <sstream>
#include <unordered_map>

namespace segal {

ChainComplex normalized_chains(const GSimplicialSet& x, int top) {
  if (top > x.dim()) throw PreconditionError("chains requested above the stored degree");
  ChainComplex c;
  std::vector<std::unordered_map<Id, std::uint32_t>> pos(top + 1);
  for (int q = 0; q <= top; ++q) {
    std::vector<Id> b;
    for (Id s = 1; s < x.size(q); ++s)
      if (q == 0 || !x.is_degenerate(q, s)) b.push_back(s);
    for (std::uint32_t i = 0; i < b.size(); ++i) pos[q][b[i]] = i;
    c.basis.push_back(std::move(b));
  }
  c.boundary.resize(top + 1);
  c.boundary[0].rows = c.basis[0].size();
  for (int q = 1; q <= top; ++q) {
    SparseMatrix& m = c.boundary[q];
    m.rows = c.basis[q].size();
    m.cols = c.basis[q - 1].size();
    m.row.resize(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
      std::map<std::uint32_t, long long> acc;
      for (int i = 0; i <= q; ++i) {
        Id f = x.face(q, i, c.basis[q][r]);
        auto it = pos[q - 1].find(f);
        if (it != pos[q - 1].end()) acc[it->second] += (i % 2 ? -1 : 1);
      }
      for (auto [col, v] : acc)
        if (v) m.row[r].push_back({col, v});
    }
  }
  return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (std::size_t q = 2; q < c.boundary.size(); ++q) {
    const auto& a = c.boundary[q];
    const auto& b = c.boundary[q - 1];
    for (const auto& r : a.row) {
      std::map<std::uint32_t, long long> acc;
      for (auto [mid, v] : r)
        for (auto [col, w] : b.row[mid]) acc[col] += v * w;
      for (auto [col, v] : acc)
        if (v) return false;
    }
  }
  return true;
}

namespace {

bool checked_axpy(long long a, long long k, long long b, long long& out) {
  long long t;
  if (__builtin_mul_overflow(k, b, &t)) return false;
  return !__builtin_sub_overflow(a, t, &out);
}

}  // namespace

// Unit pivots are eliminated sparsely; whatever is left goes to the dense Smith form.
MatrixInvariants matrix_invariants(const SparseMatrix& input) {
  using Row = std::vector<std::pair<std::uint32_t, long long>>;
  std::vector<Row> rows = input.row;
  std::vector<std::vector<std::uint32_t>> col_rows(input.cols);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (auto [c, v] : rows[r]) col_rows[c].push_back(r);
  std::vector<bool> row_alive(rows.size(), true), col_alive(input.cols, true);
  MatrixInvariants out;

  auto entry = [&](std::uint32_t r, std::uint32_t c) -> long long {
    auto it = std::lower_bound(rows[r].begin(), rows[r].end(), std::make_pair(c, LLONG_MIN));
    return (it != rows[r].end() && it->first == c) ? it->second : 0;
  };

  std::vector<std::uint32_t> order(input.cols);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return col_rows[a].size() < col_rows[b].size(); });

  bool overflow = false, progress = true;
  while (progress && !overflow) {
    progress = false;
    for (std::uint32_t c : order) {
      if (!col_alive[c]) continue;
      // live rows through c, deduplicated
      std::vector<std::uint32_t> live;
      for (auto r : col_rows[c])
        if (row_alive[r] && entry(r, c) != 0) live.push_back(r);
      std::sort(live.begin(), live.end());
      live.erase(std::unique(live.begin(), live.end()), live.end());
      col_rows[c] = live;
      if (live.empty()) {
        col_alive[c] = false;
        continue;
      }
      std::uint32_t piv = UINT32_MAX;
      for (auto r : live) {
        long long v = entry(r, c);
        if ((v == 1 || v == -1) && (piv == UINT32_MAX || rows[r].size() < rows[piv].size())) piv = r;
      }
      if (piv == UINT32_MAX) continue;
      const long long u = entry(piv, c);
      std::vector<std::pair<std::uint32_t, Row>> updates;
      for (auto r : live) {
        if (r == piv) continue;
        const long long k = entry(r, c) * u;  // u = ±1, so the pivot inverse is u
        Row merged;
        auto a = rows[r].begin(), b = rows[piv].begin();
        while (a != rows[r].end() || b != rows[piv].end()) {
          if (b == rows[piv].end() || (a != rows[r].end() && a->first < b->first)) {
            merged.push_back(*a++);
          } else if (a == rows[r].end() || b->first < a->first) {
            long long v;
            if (!checked_axpy(0, k, b->second, v)) overflow = true;
            merged.push_back({b->first, v});
            ++b;
          } else {
            long long v;
            if (!checked_axpy(a->second, k, b->second, v)) overflow = true;
            if (v) merged.push_back({a->first, v});
            ++a;
            ++b;
          }
        }
        updates.emplace_back(r, std::move(merged));
      }
      if (overflow) break;
      for (auto& [r, merged] : updates) {
        for (auto [cc, v] : merged)
          if (!std::binary_search(rows[r].begin(), rows[r].end(), std::make_pair(cc, LLONG_MIN),
                                  [](auto x, auto y) { return x.first < y.first; }))
            col_rows[cc].push_back(r);
        rows[r] = std::move(merged);
      }
      row_alive[piv] = false;
      col_alive[c] = false;
      ++out.rank;
      progress = true;
    }
  }

  // dense remainder
  std::vector<std::uint32_t> rr, cc;
  std::vector<std::int64_t> col_index(input.cols, -1);
  for (std::uint32_t c = 0; c < input.cols; ++c)
    if (col_alive[c]) {
      col_index[c] = static_cast<std::int64_t>(cc.size());
      cc.push_back(c);
    }
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    if (row_alive[r] && std::any_of(rows[r].begin(), rows[r].end(), [&](auto e) { return col_alive[e.first]; }))
      rr.push_back(r);
  if (rr.empty() || cc.empty()) return out;
  BigMatrix dense(rr.size(), std::vector<BigInt>(cc.size(), 0));
  for (std::size_t i = 0; i < rr.size(); ++i)
    for (auto [c, v] : rows[rr[i]])
      if (col_index[c] >= 0) dense[i][col_index[c]] = v;
  auto snf = smith_normal_form(std::move(dense), cc.size());
  out.rank += snf.diagonal.size();
  for (const auto& d : snf.diagonal)
    if (abs(d) > 1) out.torsion.push_back(abs(d));
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

std::string HomologyGroup::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string HomologyResult::str() const {
  std::ostringstream os;
  for (std::size_t q = 0; q < degree.size(); ++q) os << "H_" << q << " = " << degree[q].str() << "\n";
  return os.str();
}

HomologyResult reduced_homology(const GSimplicialSet& x, int top) {
  if (top + 1 > x.dim()) throw PreconditionError("homology in degree " + std::to_string(top) +
                                                 " needs the simplicial set stored to degree " +
                                                 std::to_string(top + 1));
  ChainComplex c = normalized_chains(x, top + 1);
  std::vector<MatrixInvariants> inv(top + 2);
  for (int q = 1; q <= top + 1; ++q) inv[q] = matrix_invariants(c.boundary[q]);
  HomologyResult out;
  for (int q = 0; q <= top; ++q) {
    HomologyGroup h;
    h.free_rank = c.basis[q].size() - inv[q].rank - inv[q + 1].rank;
    h.torsion = inv[q + 1].torsion;
    out.degree.push_back(std::move(h));
  }
  return out;
}

HomologyResult fixed_homology(const GSimplicialSet& x, const std::vector<int>& subgroup, int top) {
  return reduced_homology(fixed_points(x, subgroup).set, top);
}

GSimplicialSet nerve_of_group(const FinGroup& a, int dim) {
  const Id n = static_cast<Id>(a.order());
  auto size = [n](int q) {
    Id s = 1;
    for (int i = 0; i < q; ++i) s *= n;
    return s;
  };
  auto decode = [n](int q, Id x) {
    std::vector<int> t(q);
    for (int i = q - 1; i >= 0; --i) {
      t[i] = static_cast<int>(x % n);
      x /= n;
    }
    return t;
  };
  auto encode = [n](const std::vector<int>& t) {
    Id x = 0;
    for (int v : t) x = x * n + static_cast<Id>(v);
    return x;
  };
  return GSimplicialSet::from_functions(
      make_group(FinGroup::trivial()), dim, size,
      [&](int q, int i, Id x) {
        auto t = decode(q, x);
        std::vector<int> u;
        if (i == 0) u.assign(t.begin() + 1, t.end());
        else if (i == q) u.assign(t.begin(), t.end() - 1);
        else {
          u.assign(t.begin(), t.begin() + i - 1);
          u.push_back(a.mul(t[i - 1], t[i]));
          u.insert(u.end(), t.begin() + i + 1, t.end());
        }
        return encode(u);
      },
      [&](int q, int i, Id x) {
        auto t = decode(q, x);
        t.insert(t.begin() + i, FinGroup::identity());
        return encode(t);
      },
      [](int, int, Id x) { return x; });
}

bool StabilityReport::all_agree() const {
  for (const auto& row : agree)
    for (bool b : row)
      if (!b) return false;
  return true;
}

std::string StabilityReport::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < truncations.size(); ++k) {
    os << "N=" << truncations[k] << ":";
    for (std::size_t q = 0; q < results[k].degree.size(); ++q) os << " H_" << q << "=" << results[k].degree[q].str();
    os << "\n";
  }
  for (std::size_t k = 0; k < agree.size(); ++k) {
    os << "N=" << truncations[k] << " vs N=" << truncations[k + 1] << ":";
    for (std::size_t q = 0; q < agree[k].size(); ++q) os << " " << q << (agree[k][q] ? ":agree" : ":differ");
    os << "\n";
  }
  return os.str();
}

StabilityReport stability_run(const std::function<HomologyResult(int)>& run, const std::vector<int>& truncations) {
  StabilityReport r;
  r.truncations = truncations;
  for (int n : truncations) r.results.push_back(run(n));
  for (std::size_t k = 0; k + 1 < truncations.size(); ++k) {
    const auto& a = r.results[k].degree;
    const auto& b = r.results[k + 1].degree;
    std::vector<bool> row;
    for (std::size_t q = 0; q < std::min(a.size(), b.size()); ++q) row.push_back(a[q] == b[q]);
    r.agree.push_back(row);
  }
  return r;
}

}  // namespace segal
