#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "segal/fingroups.hpp"

using namespace segal;

namespace {

// Subset search over all subsets of a small group; independent of closure growth.
std::vector<std::vector<int>> subgroups_by_subsets(const FinGroup& g) {
  std::vector<std::vector<int>> out;
  const int n = g.order();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (g.is_subgroup(s)) out.push_back(s);
  }
  return out;
}

int ipow(int b, int e) {
  int r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(FinGroup, CyclicAndSymmetricTables) {
  auto c3 = FinGroup::cyclic(3);
  EXPECT_EQ(c3.order(), 3);
  EXPECT_EQ(c3.mul(2, 2), 1);
  EXPECT_EQ(c3.inv(1), 2);
  auto s3 = FinGroup::symmetric(3);
  EXPECT_EQ(s3.order(), 6);
  for (int a = 0; a < 6; ++a) EXPECT_EQ(s3.mul(a, s3.inv(a)), 0);
  EXPECT_NO_THROW(FinGroup::from_table({{0, 1}, {1, 0}}));
}

TEST(FinGroup, RejectsBadTables) {
  EXPECT_THROW(FinGroup::from_table({{0, 1}, {0, 1}}), PreconditionError);
  EXPECT_THROW(FinGroup::from_table({{1, 0}, {0, 1}}), PreconditionError);
  // identity ok, inverses ok, not associative
  EXPECT_THROW(FinGroup::from_table({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}), PreconditionError);
}

TEST(FinGroup, ProductIsGroup) {
  auto g = FinGroup::product(FinGroup::cyclic(2), FinGroup::symmetric(2));
  std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  EXPECT_NO_THROW(FinGroup::from_table(t));
}

TEST(GSetAction, RegularAndValidation) {
  auto c2 = make_group(FinGroup::cyclic(2));
  auto reg = GSetAction::regular(c2);
  EXPECT_EQ(reg.size(), 2);
  EXPECT_FALSE(reg.is_trivial());
  EXPECT_EQ(reg[1](1), 2);
  EXPECT_TRUE(GSetAction::trivial(c2, 3).is_trivial());
  auto c3 = make_group(FinGroup::cyclic(3));
  // sending the generator to a transposition is not a homomorphism from C3
  std::vector<Permutation> bad{Permutation::identity(2), Permutation::transposition(2, 1, 2),
                               Permutation::transposition(2, 1, 2)};
  EXPECT_THROW(GSetAction(c3, bad), PreconditionError);
}

TEST(BasedMap, ComposeExamples) {
  auto id2 = BasedMap::identity(2);
  EXPECT_EQ(compose_based(id2, id2), id2);
  BasedMap d1(1, {1, 0});
  BasedMap tau(2, {2, 1});
  EXPECT_EQ(compose_based(d1, tau), BasedMap(1, {0, 1}));
  auto z = BasedMap::zero(2, 1);
  EXPECT_TRUE(compose_based(z, tau).is_zero());
  EXPECT_THROW(compose_based(d1, d1), PreconditionError);
}

TEST(BasedMap, SmashLexicographic) {
  EXPECT_EQ(smash_based(BasedMap::identity(2), BasedMap::identity(2)), BasedMap::identity(4));
  EXPECT_EQ(lex_index(1, 1, 2), 1);
  EXPECT_EQ(lex_index(1, 2, 2), 2);
  EXPECT_EQ(lex_index(2, 1, 2), 3);
  EXPECT_EQ(lex_index(2, 2, 2), 4);
  EXPECT_EQ(smash_based(BasedMap(1, {1, 0}), BasedMap::identity(1)), BasedMap(1, {1, 0}));
}

TEST(BasedMap, PackRoundTrip) {
  for (const auto& f : enumerate_homs(BaseCat::F, 3, 3))
    EXPECT_EQ(BasedMap::unpack(3, 3, f.pack()), f);
}

TEST(Homs, Counts) {
  EXPECT_EQ(enumerate_homs(BaseCat::F, 2, 1).size(), 4u);
  EXPECT_EQ(enumerate_homs(BaseCat::Pi, 2, 2).size(), 7u);
  EXPECT_EQ(enumerate_homs(BaseCat::Sigma, 3, 3).size(), 6u);
  EXPECT_EQ(enumerate_homs(BaseCat::Sigma, 2, 3).size(), 0u);
  EXPECT_EQ(enumerate_homs(BaseCat::N, 2, 2).size(), 1u);
  EXPECT_EQ(enumerate_homs(BaseCat::N, 1, 2).size(), 0u);
}

TEST(Homs, CountsMatchFormulaAndInclusions) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto f = enumerate_homs(BaseCat::F, m, n);
      EXPECT_EQ(static_cast<int>(f.size()), ipow(n + 1, m));
      EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
      EXPECT_EQ(std::set<BasedMap>(f.begin(), f.end()).size(), f.size());
      std::set<BasedMap> fs(f.begin(), f.end());
      auto pi = enumerate_homs(BaseCat::Pi, m, n);
      for (const auto& x : pi) EXPECT_TRUE(fs.count(x));
      std::set<BasedMap> ps(pi.begin(), pi.end());
      for (const auto& x : enumerate_homs(BaseCat::Sigma, m, n)) EXPECT_TRUE(ps.count(x));
      std::set<BasedMap> ss;
      for (const auto& x : enumerate_homs(BaseCat::Sigma, m, n)) ss.insert(x);
      for (const auto& x : enumerate_homs(BaseCat::N, m, n)) EXPECT_TRUE(ss.count(x));
    }
}

TEST(Conjugation, Examples) {
  auto c2 = make_group(FinGroup::cyclic(2));
  auto reg = GSetAction::regular(c2);
  auto triv = GSetAction::trivial(c2, 2);
  BasedMap d1(1, {1, 0});
  auto triv1 = GSetAction::trivial(c2, 1);
  EXPECT_EQ(conjugation_action(0, d1, reg, triv1), d1);
  EXPECT_EQ(conjugation_action(1, d1, reg, triv1), BasedMap(1, {0, 1}));
  BasedMap f(2, {1, 0});
  EXPECT_EQ(conjugation_action(1, f, triv, triv), f);
  EXPECT_THROW(conjugation_action(1, f, triv1, triv), PreconditionError);
}

TEST(Conjugation, IsGroupAction) {
  auto s3 = make_group(FinGroup::symmetric(3));
  std::vector<Permutation> perms(all_permutations(3));
  GSetAction nat(s3, perms);
  auto reg2 = GSetAction(s3, [&] {
    // sign action on 2 points
    std::vector<Permutation> p;
    for (const auto& s : perms) {
      int inv = 0;
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) inv += s(i) > s(j);
      p.push_back(inv % 2 ? Permutation::transposition(2, 1, 2) : Permutation::identity(2));
    }
    return p;
  }());
  for (const auto& phi : enumerate_homs(BaseCat::F, 3, 2))
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h)
        EXPECT_EQ(conjugation_action(s3->mul(g, h), phi, nat, reg2),
                  conjugation_action(g, conjugation_action(h, phi, nat, reg2), nat, reg2));
}

TEST(GraphSubgroups, Examples) {
  EXPECT_EQ(graph_subgroups(FinGroup::trivial(), 3).size(), 1u);
  EXPECT_EQ(graph_subgroups(FinGroup::cyclic(2), 1).size(), 2u);
  auto l = graph_subgroups(FinGroup::cyclic(2), 2);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0].order(), 1);
  EXPECT_THROW(graph_subgroups(FinGroup::symmetric(4), 7), PreconditionError);
}

TEST(GraphSubgroups, MatchSubsetOracle) {
  for (auto [gord, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {1, 3}, {4, 2}}) {
    auto g = FinGroup::cyclic(gord);
    auto amb = FinGroup::product(g, FinGroup::symmetric(n));
    const int sn = static_cast<int>(all_permutations(n).size());
    std::size_t expected = 0;
    for (const auto& s : subgroups_by_subsets(amb)) {
      std::set<int> proj;
      for (int e : s) proj.insert(e / sn);
      if (proj.size() == s.size()) ++expected;
    }
    auto got = graph_subgroups(g, n);
    EXPECT_EQ(got.size(), expected) << "C" << gord << " x S" << n;
    for (const auto& l : got) {
      std::set<int> firsts;
      for (const auto& [a, p] : l.elements) firsts.insert(a);
      EXPECT_EQ(firsts.size(), l.elements.size());
    }
  }
}

TEST(GraphSubgroups, BruteForceKleinHasFiveSubgroups) {
  auto amb = FinGroup::product(FinGroup::cyclic(2), FinGroup::symmetric(2));
  EXPECT_EQ(subgroups_by_subsets(amb).size(), 5u);
}
