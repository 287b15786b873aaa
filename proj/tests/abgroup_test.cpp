#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "segal/abgroup.hpp"
#include "segal/snf.hpp"

using namespace segal;

namespace {

// k-th determinantal divisor: gcd of all k×k minors (small matrices only).
long long det(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    r += (j % 2 ? -1 : 1) * m[0][j] * det(sub);
  }
  return r;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<long long> invariant_factors_by_minors(const std::vector<std::vector<long long>>& m) {
  const std::size_t r = m.size(), c = m[0].size();
  std::vector<long long> d{1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(r, k, 0, cur, rs);
    subsets(c, k, 0, cur, cs);
    long long g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        g = std::gcd(g, std::llabs(det(sub)));
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<long long> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  return out;
}

}  // namespace

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-6, 6), dim(1, 4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = dim(rng), c = dim(rng);
    std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
    BigMatrix b(r, std::vector<BigInt>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b[i][j] = m[i][j] = val(rng);
    auto snf = smith_normal_form(b, c);
    auto oracle = invariant_factors_by_minors(m);
    ASSERT_EQ(snf.diagonal.size(), oracle.size()) << "trial " << t;
    for (std::size_t k = 0; k < oracle.size(); ++k) EXPECT_EQ(snf.diagonal[k], BigInt(oracle[k]));
  }
}

TEST(Smith, ColumnTransformIsUnimodular) {
  BigMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto s = smith_normal_form(m, 3, true);
  EXPECT_EQ(s.diagonal, (std::vector<BigInt>{2, 6, 12}));
  // determinant of V is ±1
  std::vector<std::vector<long long>> v(3, std::vector<long long>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[i][j] = static_cast<long long>(s.col_transform[i][j]);
  EXPECT_EQ(std::llabs(det(v)), 1);
}

TEST(AbGroup, ElementNumbering) {
  AbGroup a({2, 3});
  EXPECT_EQ(a.order(), 6u);
  for (Id i = 0; i < 6; ++i) EXPECT_EQ(a.index(a.element(i)), i);
  EXPECT_EQ(a.index(a.zero()), 0u);
  EXPECT_EQ(a.add({1, 2}, {1, 2}), (AbGroup::Elem{0, 1}));
  EXPECT_THROW(AbGroup({1}), PreconditionError);
  EXPECT_THROW(AbGroup::free(1).order(), PreconditionError);
}

TEST(Tensor, Examples) {
  EXPECT_EQ(invariant_factors(tensor_ab(AbGroup::cyclic(2), AbGroup::cyclic(3)).group), std::vector<long long>{});
  EXPECT_EQ(invariant_factors(tensor_ab(AbGroup::cyclic(2), AbGroup::cyclic(2)).group), std::vector<long long>{2});
  EXPECT_EQ(invariant_factors(tensor_ab(AbGroup::free(1), AbGroup::cyclic(4)).group), std::vector<long long>{4});
  EXPECT_EQ(invariant_factors(tensor_ab(AbGroup::cyclic(4), AbGroup::cyclic(6)).group), std::vector<long long>{2});
  EXPECT_EQ(invariant_factors(tensor_ab(AbGroup::free(2), AbGroup::free(1)).group), (std::vector<long long>{0, 0}));
}

TEST(Tensor, UniversalMapIsBilinearAndOntoGenerators) {
  AbGroup a({2, 4}), b({6});
  auto t = tensor_ab(a, b);
  for (Id i = 0; i < a.order(); ++i)
    for (Id j = 0; j < a.order(); ++j)
      for (Id k = 0; k < b.order(); ++k) {
        auto x = a.element(i), y = a.element(j), z = b.element(k);
        EXPECT_EQ(t(a.add(x, y), z), t.group.add(t(x, z), t(y, z)));
      }
  // |A ⊗ B| = 2·2
  EXPECT_EQ(t.group.order(), 4u);
}

TEST(Tensor, SymmetricAndDistributive) {
  std::vector<AbGroup> gs{AbGroup::cyclic(2), AbGroup::cyclic(3), AbGroup({2, 4}), AbGroup({6}), AbGroup::free(1)};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      EXPECT_TRUE(isomorphic(tensor_ab(a, b).group, tensor_ab(b, a).group));
      for (const auto& c : gs)
        EXPECT_TRUE(isomorphic(tensor_ab(direct_sum(a, b), c).group,
                               direct_sum(tensor_ab(a, c).group, tensor_ab(b, c).group)));
    }
}

TEST(Ring, IntegersMod) {
  auto r = RingObject::integers_mod(6);
  EXPECT_EQ(r.mul({2}, {3}), AbGroup::Elem{0});
  EXPECT_EQ(r.mul({5}, {5}), AbGroup::Elem{1});
  EXPECT_EQ(r.mul(r.one, {4}), AbGroup::Elem{4});
}
