#include <gtest/gtest.h>

#include "segal/homology.hpp"
#include "segal/monoidal.hpp"

using namespace segal;

namespace segal {
void PrintTo(const BarCell& c, std::ostream* os) { *os << c.str(); }
}  // namespace segal

namespace {

GroupPtr e() { return make_group(FinGroup::trivial()); }
GroupPtr c2() { return make_group(FinGroup::cyclic(2)); }

GSimplicialSet S(GroupPtr g, int k, int dim) { return sphere(GSetAction::trivial(std::move(g), k), dim); }

CatPtr F(GroupPtr g, int n) { return make_category(CatTag::F, std::move(g), n); }

// Pairing that flattens m ∧ n column-major; inconsistent with smash_based.
ExternalPairing colex(ExternalPairing p, const GSimplicialSet& a, const GSimplicialSet& b) {
  auto sp = std::make_shared<SmashProduct>(smash(a, b));
  p.pair = [a, b, sp](int m, int, int q, Id u, Id v) -> Id {
    if (u == 0 || v == 0) return 0;
    const Id sa = a.size(q) - 1, sb = b.size(q) - 1, sab = sp->set.size(q) - 1;
    const int j = 1 + static_cast<int>((u - 1) / sa), k = 1 + static_cast<int>((v - 1) / sb);
    const Id s = 1 + (u - 1) % sa, t = 1 + (v - 1) % sb;
    return 1 + static_cast<Id>((k - 1) * m + j - 1) * sab + (sp->pair(q, s, t) - 1);
  };
  return p;
}

}  // namespace

TEST(Pairing, FreePairingIsNatural) {
  auto cn = F(e(), 2), cp = F(e(), 4);
  for (int a : {0, 1})
    for (int b : {0, 1}) {
      auto p = free_pairing(cn, S(e(), a, 2), cn, S(e(), b, 2), cp);
      EXPECT_EQ(check_pairing(p), std::nullopt);
    }
}

TEST(Pairing, EquivariantFreePairing) {
  auto cn = F(c2(), 2), cp = F(c2(), 4);
  GSimplicialSet sreg = sphere(GSetAction::regular(c2()), 2);
  EXPECT_EQ(check_pairing(free_pairing(cn, sreg, cn, S(c2(), 1, 2), cp)), std::nullopt);
}

TEST(Pairing, ColumnMajorFlatteningIsNotNatural) {
  auto cn = F(e(), 2), cp = F(e(), 4);
  auto s0 = S(e(), 0, 1);
  auto bad = colex(free_pairing(cn, s0, cn, s0, cp), s0, s0);
  auto err = check_pairing(bad);
  ASSERT_TRUE(err.has_value());
  EXPECT_NE(err->find("not natural"), std::string::npos);
}

TEST(Pairing, RMonoidal) {
  auto cn = F(e(), 2), cp = F(e(), 4);
  auto r23 = R_monoidal(cn, AbGroup::cyclic(2), AbGroup::cyclic(3), cp);
  EXPECT_EQ(r23.tensor.group.order(), 1u);
  EXPECT_EQ(check_pairing(r23.pairing), std::nullopt);
  auto r22 = R_monoidal(cn, AbGroup::cyclic(2), AbGroup::cyclic(2), cp);
  EXPECT_TRUE(isomorphic(r22.tensor.group, AbGroup::cyclic(2)));
  EXPECT_EQ(check_pairing(r22.pairing), std::nullopt);
  // (1, 1): a ∧ b ↦ ab mod 2; (2, 2): (a1, a2) ∧ (b1, b2) ↦ (a1b1, a1b2, a2b1, a2b2)
  for (Id a = 0; a < 2; ++a)
    for (Id b = 0; b < 2; ++b) EXPECT_EQ(r22.pairing(1, 1, 0, a, b), a * b);
  const AbGroup z2 = AbGroup::cyclic(2);
  Id x = r_encode(z2, {{1}, {0}}), y = r_encode(z2, {{1}, {1}});
  EXPECT_EQ(r_decode(z2, 4, r22.pairing(2, 2, 0, x, y)), (std::vector<AbGroup::Elem>{{1}, {1}, {0}, {0}}));
}

TEST(Pairing, RingPairingOfZ4) {
  auto cn = F(e(), 2), cp = F(e(), 4);
  EXPECT_EQ(check_pairing(ring_pairing(cn, cn, RingObject::integers_mod(4), cp)), std::nullopt);
}

TEST(HMap, EmptySetGivesBasepoints) {
  auto h = h_map(F(e(), 3), GSetAction::trivial(e(), 0));
  for (int c = 0; c < 4; ++c) EXPECT_EQ(h.source().value(c).size(0), 1u);
  EXPECT_EQ(check_h_map(h), std::nullopt);
}

TEST(HMap, SingletonIsTheUnitOfZ) {
  auto cat = F(e(), 3);
  auto h = h_map(cat, GSetAction::trivial(e(), 1));
  const int one = cat->trivial_object(1);
  EXPECT_EQ(h.source().value(one).size(0), 2u);
  EXPECT_EQ(h(one, 1), (std::vector<std::vector<long long>>{{1}}));
  // δ_1: 2 -> 1 sends (2, s) to the basepoint and (1, s) to (1, s)
  const int two = cat->trivial_object(2);
  BasedMap d1(1, {1, 0});
  EXPECT_EQ(h(one, h.source().act(two, one, d1, 0, 2)), h.push(d1, h(two, 2)));
  EXPECT_EQ(h.push(d1, h(two, 2)), (std::vector<std::vector<long long>>{{0}}));
  EXPECT_EQ(check_h_map(h), std::nullopt);
}

TEST(HMap, RegularC2Set) {
  auto h = h_map(F(c2(), 3), GSetAction::regular(c2()));
  EXPECT_EQ(check_h_map(h), std::nullopt);
}

TEST(DaySmash, FreeTimesFree) {
  auto cat = F(e(), 3);
  for (int a : {0, 1})
    for (int b : {0, 1}) {
      auto r = day_smash_free(cat, S(e(), a, 2), S(e(), b, 2));
      EXPECT_EQ(check_day_smash_free(r), std::nullopt);
      // F₁(S^{a+b})(k)_p has 1 + k p^{a+b} simplices
      for (int k = 0; k <= 3; ++k)
        for (int p = 0; p <= 2; ++p) {
          Id pw = 1;
          for (int i = 0; i < a + b; ++i) pw *= p;
          EXPECT_EQ(r.day.result().value(k).size(p), 1 + static_cast<Id>(k) * pw) << a << b << k << p;
        }
    }
}

TEST(DaySmash, UnitTimesUnitIsUnit) {
  auto cat = F(e(), 3);
  auto s0 = S(e(), 0, 0);
  auto r = day_smash_free(cat, s0, s0);
  Diagram u = unit_diagram(cat, 0);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(r.day.result().value(k).size(0), u.value(k).size(0));
  EXPECT_EQ(check_diagram(r.day.result()), std::nullopt);
}

TEST(DaySmash, BasepointFactor) {
  auto cat = F(e(), 3);
  auto pt = GSimplicialSet::point(e(), 1);
  auto r = day_smash_free(cat, pt, S(e(), 1, 1));
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(r.day.result().value(k).size(1), 1u);
}

TEST(DaySmash, EquivariantValues) {
  auto cat = F(c2(), 2);
  auto r = day_smash_free(cat, sphere(GSetAction::regular(c2()), 1), S(c2(), 0, 1));
  EXPECT_EQ(check_day_smash_free(r), std::nullopt);
}

TEST(DaySmash, GenerationCertificates) {
  auto cat = F(e(), 3);
  EXPECT_EQ(generation_certificate(unit_diagram(cat, 0), 1), std::nullopt);
  EXPECT_EQ(generation_certificate(free_diagram(cat, S(e(), 1, 2)), 1), std::nullopt);
  // (a, b) ∈ (Z/2)^2 with a, b ≠ 0 is not pushed forward from a single coordinate
  Diagram r2 = R_diagram(cat, AbGroup::cyclic(2), 0);
  EXPECT_TRUE(generation_certificate(r2, 1).has_value());
  EXPECT_TRUE(generation_certificate(r2, 2).has_value());
  EXPECT_EQ(generation_certificate(r2, 3), std::nullopt);
  EXPECT_THROW(day_smash_generated(r2, unit_diagram(cat, 0), 1, 1, cat), VerificationError);
}

TEST(DaySmash, UnitIsLeftUnitForGeneratedDiagrams) {
  auto cat = F(e(), 3);
  Diagram r2 = R_diagram(cat, AbGroup::cyclic(2), 0);
  DaySmash d = day_smash_generated(unit_diagram(cat, 0), r2, 1, 3, cat);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(d.result().value(k).size(0), r2.value(k).size(0)) << k;
  EXPECT_EQ(check_diagram(d.result()), std::nullopt);
  Diagram x = free_diagram(cat, S(e(), 1, 2));
  DaySmash d2 = day_smash_generated(x, unit_diagram(cat, 2), 1, 1, cat);
  for (int k = 0; k <= 3; ++k)
    for (int p = 0; p <= 2; ++p) EXPECT_EQ(d2.result().value(k).size(p), x.value(k).size(p));
}

TEST(Phi, DegreeZeroOnUnitIsLexicographicMultiplication) {
  auto cn = F(e(), 2), cp = F(e(), 4);
  auto s0 = S(e(), 0, 0);
  Phi phi(free_pairing(cn, s0, cn, s0, cp), GSetAction::trivial(e(), 0), GSetAction::trivial(e(), 0), 0);
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
          BarCell a{{cn->trivial_object(m)}, std::vector<Id>(m, 1), {}, static_cast<Id>(i)};
          BarCell b{{cn->trivial_object(n)}, std::vector<Id>(n, 1), {}, static_cast<Id>(j)};
          Cell c = phi(a, b, 0);
          ASSERT_TRUE(c.has_value());
          EXPECT_EQ(c->x, static_cast<Id>((i - 1) * n + j));
          EXPECT_EQ(cp->arity(c->obj[0]), m * n);
        }
}

TEST(Phi, DescendsAndCommutesWithStructureMaps) {
  auto cn = F(e(), 2), cp = F(e(), 4);
  auto v = GSetAction::trivial(e(), 1);
  Phi phi(free_pairing(cn, S(e(), 0, 2), cn, S(e(), 1, 2), cp), v, v, 2);
  EXPECT_EQ(check_phi(phi, 1), std::nullopt);
}

TEST(Phi, EquivariantLevels) {
  auto cn = F(c2(), 2), cp = F(c2(), 4);
  Phi phi(free_pairing(cn, S(c2(), 0, 1), cn, S(c2(), 0, 1), cp), GSetAction::regular(c2()),
          GSetAction::trivial(c2(), 1), 1);
  EXPECT_EQ(check_phi(phi, 1), std::nullopt);
}

TEST(Phi, ColumnMajorPairingBreaksBarFaces) {
  auto cn = F(e(), 2), cp = F(e(), 4);
  auto s0 = S(e(), 0, 1);
  auto v = GSetAction::trivial(e(), 1);
  Phi phi(colex(free_pairing(cn, s0, cn, s0, cp), s0, s0), v, v, 1);
  EXPECT_TRUE(check_phi(phi, 1).has_value());
}

TEST(Phi, RandomRepresentativeStaysInOrbit) {
  auto cn = F(e(), 3);
  auto sph = std::make_shared<const GSimplicialSet>(S(e(), 1, 2));
  BarEngine eng(Monad(CatTag::Sigma, cn), free_diagram(cn, S(e(), 1, 2)), Outer::space(sph));
  for (Id a = 1; a < eng.size(2, 2); a += 7)
    for (std::uint64_t s = 0; s < 3; ++s)
      EXPECT_EQ(eng.canonical(random_representative(eng, eng.cell(2, 2, a), 2, s), 2), Cell(eng.cell(2, 2, a)));
}

TEST(Coherence, SigmaVariantSmall) {
  auto g = e();
  auto v = GSetAction::trivial(g, 1);
  CoherenceBounds b{2, 4, 1, 2};
  auto s0 = S(g, 0, 2), s1 = S(g, 1, 2);
  auto r = check_coherence(s0, s1, s0, v, v, v, b);
  EXPECT_TRUE(r.ok()) << r.failure;
  EXPECT_GT(r.checked, 0u);
}

TEST(Coherence, NVariantFailsOnlySymmetry) {
  auto g = e();
  auto v = GSetAction::trivial(g, 1);
  CoherenceBounds b{2, 4, 0, 1};
  auto s0 = S(g, 0, 1);
  auto r = check_coherence(s0, s0, s0, v, v, v, b, CatTag::N);
  EXPECT_TRUE(r.unit_left && r.unit_right && r.assoc && r.phi) << r.failure;
  EXPECT_FALSE(r.symmetry);
  EXPECT_NE(r.failure.find("symmetry"), std::string::npos);
  auto rs = check_coherence(s0, s0, s0, v, v, v, b, CatTag::Sigma);
  EXPECT_TRUE(rs.ok()) << rs.failure;
}

TEST(Coherence, DiagramSelection) {
  auto g = e();
  auto v = GSetAction::trivial(g, 1);
  auto s0 = S(g, 0, 1);
  CoherenceBounds b{2, 4, 0, 1};
  b.symmetry = false;
  auto r = check_coherence(s0, s0, s0, v, v, v, b, CatTag::N);
  EXPECT_TRUE(r.ok()) << r.failure;
  CoherenceBounds only{2, 4, 0, 1};
  only.unit = only.assoc = false;
  auto f = check_coherence(s0, s0, s0, v, v, v, only, CatTag::N);
  EXPECT_FALSE(f.symmetry);
  EXPECT_LT(f.checked, r.checked);
}

TEST(Coherence, C2Levels) {
  auto g = c2();
  CoherenceBounds b{2, 4, 1, 1};
  auto s0 = S(g, 0, 1);
  auto r = check_coherence(s0, S(g, 1, 1), s0, GSetAction::regular(g), GSetAction::trivial(g, 1),
                           GSetAction::trivial(g, 0), b);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Bpq, SphereZeroIsTrivial) {
  auto g = e();
  auto d = bpq_mu(S(g, 0, 2), GSetAction::trivial(g, 0), 2, 2, 2);
  EXPECT_EQ(check_bpq(d), std::nullopt);
  for (int p = 0; p <= 2; ++p) EXPECT_EQ(d.target.set.size(p), 2u);
}

TEST(Bpq, CircleLevel) {
  auto g = e();
  auto d = bpq_mu(S(g, 0, 3), GSetAction::trivial(g, 1), 3, 3, 2);
  EXPECT_EQ(check_bpq(d), std::nullopt);
  auto h = reduced_homology(d.bar, 1);
  EXPECT_EQ(h.degree[0], HomologyGroup{});
  EXPECT_EQ(h.degree[1], (HomologyGroup{1, {}}));
  EXPECT_EQ(h, reduced_homology(d.target.set, 1));
}

TEST(Bpq, WrongHomotopyIsRejected) {
  auto g = e();
  auto d = bpq_mu(S(g, 0, 2), GSetAction::trivial(g, 1), 2, 2, 2);
  auto bad = d;
  std::swap(bad.homotopy.f, bad.homotopy.g);
  EXPECT_TRUE(check_bpq(bad).has_value());
}

TEST(Bpq, CoendIdentification) {
  auto g = e();
  for (int a : {0, 1})
    for (int x : {0, 1}) EXPECT_EQ(check_coend_identification(S(g, a, 2), S(g, x, 2), 3, 2), std::nullopt) << a << x;
  EXPECT_EQ(check_coend_identification(sphere(GSetAction::regular(c2()), 1), S(c2(), 1, 1), 2, 1), std::nullopt);
}

TEST(EmRing, Z2) {
  auto r = em_ring_pairing(RingObject::integers_mod(2), e(), GSetAction::trivial(e(), 1), 2, 4, 1, 2);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(EmRing, TrivialRing) {
  auto r = em_ring_pairing(RingObject::integers_mod(1), e(), GSetAction::trivial(e(), 1), 2, 4, 1, 1);
  EXPECT_TRUE(r.ok()) << r.failure;
}
