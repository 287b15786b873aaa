#include <gtest/gtest.h>

#include <map>
#include <set>

#include "segal/barmachine.hpp"
#include "segal/homology.hpp"

using namespace segal;

namespace segal {
void PrintTo(const BarCell& c, std::ostream* os) { *os << c.str(); }
}  // namespace segal

namespace {

GroupPtr e() { return make_group(FinGroup::trivial()); }
GroupPtr c2() { return make_group(FinGroup::cyclic(2)); }

Diagram R2(const CatPtr& cat, int dim = 2) { return R_diagram(cat, AbGroup({2}, cat->group_ptr()), dim); }

// Orbit minimum by trying every tuple of permutations (σ_0, ..., σ_q), after moving
// every object to its trivial representative.
BarCell brute_canonical(const BarEngine& eng, BarCell c, int p) {
  const Monad& m = eng.monad();
  const IndexCategory& amb = m.ambient();
  for (std::size_t k = 0; k < c.obj.size(); ++k) {
    int r = m.representative_object(c.obj[k]);
    if (k == 0 && r != c.obj[0]) c.x = eng.algebra().act(c.obj[0], r, BasedMap::identity(amb.arity(r)), p, c.x);
    c.obj[k] = r;
  }
  const int q = c.q();
  std::vector<std::size_t> idx(q + 1, 0);
  auto order = [](const BarCell& a) {
    std::vector<std::uint64_t> key(a.outer.begin(), a.outer.end());
    for (int k = a.q() - 1; k >= 0; --k)
      for (int i = 1; i <= a.homs[k].source(); ++i) key.push_back(a.homs[k](i));
    key.push_back(a.x);
    return key;
  };
  BarCell best = c;
  for (;;) {
    std::vector<const Permutation*> s;
    for (int k = 0; k <= q; ++k) s.push_back(&all_permutations(amb.arity(c.obj[k]))[idx[k]]);
    BarCell t = c;
    const Permutation top_inv = s[q]->inverse();
    for (std::size_t j = 1; j <= c.outer.size(); ++j) t.outer[j - 1] = c.outer[top_inv(static_cast<int>(j)) - 1];
    for (int k = 0; k < q; ++k)
      t.homs[k] = compose_based(BasedMap::from_permutation(*s[k + 1]),
                                compose_based(c.homs[k], BasedMap::from_permutation(s[k]->inverse())));
    t.x = eng.algebra().act(c.obj[0], c.obj[0], BasedMap::from_permutation(*s[0]), p, c.x);
    if (order(t) < order(best)) best = t;
    int k = 0;
    while (k <= q && ++idx[k] == all_permutations(amb.arity(c.obj[k])).size()) idx[k++] = 0;
    if (k > q) break;
  }
  return best;
}

// All non-basepoint raw cells with objects from the full ambient category.
std::vector<BarCell> raw_cells(const BarEngine& eng, int q, int p) {
  const IndexCategory& amb = eng.monad().ambient();
  std::vector<BarCell> out;
  BarCell c;
  c.obj.resize(q + 1);
  c.homs.resize(q);
  std::function<void(int)> rec = [&](int k) {
    if (k < 0) {
      for (Id x = 0; x < eng.algebra().value(c.obj[0]).size(p); ++x) {
        c.x = x;
        if (!eng.is_base(c)) out.push_back(c);
      }
      return;
    }
    for (int o = 0; o < amb.num_objects(); ++o) {
      c.obj[k] = o;
      for (const auto& h : amb.homs(o, c.obj[k + 1])) {
        c.homs[k] = h;
        rec(k - 1);
      }
    }
  };
  for (int top = 0; top < amb.num_objects(); ++top) {
    const int n = amb.arity(top);
    c.obj[q] = top;
    std::vector<Id> y(n, 0);
    const Id nv = eng.outer().values(p, n);
    if (n == 0) continue;
    for (;;) {
      c.outer = y;
      rec(q - 1);
      int j = n - 1;
      while (j >= 0 && y[j] + 1 == nv) y[j--] = 0;
      if (j < 0) break;
      ++y[j];
    }
  }
  return out;
}

void expect_matches_brute_force(const BarEngine& eng, int q, int p) {
  std::set<std::string> orbits;
  for (const auto& c : raw_cells(eng, q, p)) {
    BarCell b = brute_canonical(eng, c, p);
    Cell k = eng.canonical(c, p);
    ASSERT_TRUE(k.has_value());
    EXPECT_EQ(*k, b) << c.str();
    orbits.insert(b.str());
    EXPECT_EQ(eng.cell(q, p, eng.id_of(q, p, c)), b);
  }
  EXPECT_EQ(orbits.size() + 1, eng.size(q, p)) << "q=" << q << " p=" << p;
}

}  // namespace

TEST(Monad, SigmaOnUnitAtOneHasTwoSimplices) {
  auto cat = make_category(CatTag::F, e(), 1);
  BarConstruction b(Monad(CatTag::Sigma, cat), unit_diagram(cat, 0), 0);
  EXPECT_EQ(b.level(0).value(1).size(0), 2u);
  EXPECT_FALSE(check_diagram(b.level(0)).has_value());
}

TEST(Monad, NaturalNumbersContainXViaIdentitySummand) {
  auto cat = make_category(CatTag::F, e(), 2);
  auto x = R2(cat, 0);
  BarConstruction b(Monad(CatTag::N, cat), x, 0);
  auto eta = b.eta();
  for (int n = 0; n <= 2; ++n) {
    std::set<Id> img;
    for (Id v = 0; v < x.value(n).size(0); ++v) img.insert(eta.component[n](0, v));
    EXPECT_EQ(img.size(), x.value(n).size(0));
  }
}

TEST(Monad, RejectsMismatchedGround) {
  auto f = make_category(CatTag::F, c2(), 2);
  auto fg = make_category(CatTag::FG, c2(), 2);
  EXPECT_THROW(Monad(CatTag::SigmaG, f), PreconditionError);
  EXPECT_THROW(Monad(CatTag::Sigma, fg), PreconditionError);
  EXPECT_THROW(Monad(CatTag::SigmaG, fg, Variant::Product), PreconditionError);
  EXPECT_THROW(BarConstruction(Monad(CatTag::Sigma, make_category(CatTag::F, c2(), 3)), R2(f), 0), PreconditionError);
}

TEST(Monad, LawsHoldForAllFourMonads) {
  auto g = c2();
  auto f = make_category(CatTag::F, g, 2);
  auto fg = make_category(CatTag::FG, g, 2);
  EXPECT_FALSE(check_monad_laws(Monad(CatTag::Sigma, f), R2(f, 0)));
  EXPECT_FALSE(check_monad_laws(Monad(CatTag::Sigma, f), unit_diagram(f, 0)));
  EXPECT_FALSE(check_monad_laws(Monad(CatTag::N, f), unit_diagram(f, 0)));
  EXPECT_FALSE(check_monad_laws(Monad(CatTag::SigmaG, fg), R2(fg, 0)));
  EXPECT_FALSE(check_monad_laws(Monad(CatTag::NG, fg), unit_diagram(fg, 0)));
  EXPECT_FALSE(check_monad_laws(Monad(CatTag::NG, fg, Variant::Product), unit_diagram(fg, 0)));
}

TEST(Canonical, MatchesBruteForceOrbitMinimum) {
  auto g = c2();
  auto f = make_category(CatTag::F, g, 2);
  auto fg = make_category(CatTag::FG, g, 2);
  for (int d : {1, 2}) {
    BarEngine eng(Monad(CatTag::Sigma, f), R2(f, 0), Outer::hom_into(f, d));
    for (int q = 0; q <= 2; ++q) expect_matches_brute_force(eng, q, 0);
  }
  for (int d = 0; d < fg->num_objects(); ++d) {
    BarEngine eng(Monad(CatTag::SigmaG, fg), R2(fg, 0), Outer::hom_into(fg, d));
    for (int q = 0; q <= 2; ++q) expect_matches_brute_force(eng, q, 0);
  }
  // sphere outer factor, internal degree 1 and 2
  auto s1 = std::make_shared<const GSimplicialSet>(sphere(GSetAction::trivial(g, 1), 2));
  BarEngine es(Monad(CatTag::Sigma, f), unit_diagram(f, 2), Outer::space(s1));
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) expect_matches_brute_force(es, q, p);
  auto s2 = std::make_shared<const GSimplicialSet>(sphere(GSetAction::regular(g), 2));
  BarEngine eg(Monad(CatTag::SigmaG, fg), unit_diagram(fg, 2), Outer::space(s2));
  for (int q = 0; q <= 1; ++q) expect_matches_brute_force(eg, q, 2);
}

TEST(Canonical, NaturalNumbersNeedNoQuotient) {
  auto fg = make_category(CatTag::FG, c2(), 2);
  BarEngine eng(Monad(CatTag::NG, fg), R2(fg, 0), Outer::hom_into(fg, 2));
  EXPECT_EQ(raw_cells(eng, 1, 0).size() + 1, eng.size(1, 0));
}

TEST(Bar, SimplicialIdentitiesAndDiagramMaps) {
  auto g = c2();
  auto f = make_category(CatTag::F, g, 2);
  auto fg = make_category(CatTag::FG, g, 2);
  EXPECT_FALSE(check_bar_identities(BarConstruction(Monad(CatTag::Sigma, f), R2(f, 0), 2)));
  EXPECT_FALSE(check_bar_identities(BarConstruction(Monad(CatTag::SigmaG, fg), R2(fg, 0), 1)));
  // no orbit quotient over N_G: bar degree 3 already has ~10^5 simplices per object
  EXPECT_FALSE(check_bar_identities(BarConstruction(Monad(CatTag::NG, fg), unit_diagram(fg, 0), 1)));
  EXPECT_FALSE(check_bar_identities(BarConstruction(Monad(CatTag::NG, fg, Variant::Product), unit_diagram(fg, 0), 1)));
  auto s1 = sphere(GSetAction::trivial(g, 1), 2);
  EXPECT_FALSE(check_bar_identities(BarConstruction(Monad(CatTag::Sigma, f), free_diagram(f, s1), 1)));
  for (int q = 0; q <= 1; ++q)
    EXPECT_FALSE(check_diagram(BarConstruction(Monad(CatTag::SigmaG, fg), R2(fg, 0), 1).level(q)));
}

TEST(Bar, ZeroSimplicesAreEX) {
  auto f = make_category(CatTag::F, e(), 2);
  BarConstruction b(Monad(CatTag::Sigma, f), R2(f, 0), 0);
  auto eps = b.epsilon(0);
  auto eta = b.eta();
  for (int d = 0; d <= 2; ++d)
    for (Id v = 0; v < b.algebra().value(d).size(0); ++v) EXPECT_EQ(eps.component[d](0, eta.component[d](0, v)), v);
}

TEST(Reedy, DegeneraciesInjectiveAndCorruptionDetected) {
  auto g = c2();
  auto fg = make_category(CatTag::FG, g, 2);
  BarConstruction b(Monad(CatTag::SigmaG, fg), R2(fg, 0), 2);
  ReedyData r = reedy_data(b);
  EXPECT_TRUE(check_reedy(r));
  EXPECT_TRUE(check_reedy(BarConstruction(Monad(CatTag::NG, fg, Variant::Product), R2(fg, 0), 2)));
  auto& tab = r.degen[1][0][2][0];
  ASSERT_GE(tab.size(), 3u);
  tab[2] = tab[1];
  EXPECT_FALSE(check_reedy(r));
}

TEST(EpsEta, ExtraDegeneracyHomotopy) {
  auto f = make_category(CatTag::F, e(), 2);
  BarConstruction b(Monad(CatTag::Sigma, f), R2(f, 2), 2);
  for (int d = 0; d <= 2; ++d) {
    auto data = eps_eta_homotopy(b, d, 2);
    EXPECT_FALSE(check_eps_eta(data)) << *check_eps_eta(data);
  }
  auto g = c2();
  auto fg = make_category(CatTag::FG, g, 2);
  BarConstruction bg(Monad(CatTag::SigmaG, fg), R2(fg, 2), 2);
  for (int d = 0; d < fg->num_objects(); ++d) {
    auto data = eps_eta_homotopy(bg, d, 2);
    auto err = check_eps_eta(data);
    EXPECT_FALSE(err) << *err;
  }
  // basepoint algebra: everything is the point
  BarConstruction bp(Monad(CatTag::Sigma, f), point_diagram(f, 2), 2);
  auto data = eps_eta_homotopy(bp, 2, 2);
  EXPECT_EQ(data.bar.size(2), 1u);
  EXPECT_FALSE(check_eps_eta(data));
}

TEST(IsoR, RegularC2AndUnit) {
  auto g = c2();
  auto f = make_category(CatTag::F, g, 2);
  auto fg = make_category(CatTag::FG, g, 2);
  auto rep = iso_r(R2(f, 0), fg, 2);
  EXPECT_TRUE(rep.ok) << rep.failure;
  auto ru = iso_r(unit_diagram(f, 0), fg, 2);
  EXPECT_TRUE(ru.ok) << ru.failure;
  ASSERT_EQ(ru.sizes.size(), 3u);
  auto rp = iso_r(point_diagram(f, 0), fg, 1);
  EXPECT_TRUE(rp.ok);
  for (const auto& row : rp.sizes)
    for (auto s : row) EXPECT_EQ(s, 1u);
  auto rs = iso_r(free_diagram(f, sphere(GSetAction::trivial(g, 1), 1)), fg, 1);
  EXPECT_TRUE(rs.ok) << rs.failure;
}

TEST(Comparisons, QAndPCommuteWithEpsilon) {
  auto g = c2();
  auto fg = make_category(CatTag::FG, g, 2);
  for (const auto& y : {R2(fg, 0), unit_diagram(fg, 0)}) {
    auto rep = check_comparisons(y, 2);
    EXPECT_TRUE(rep.ok()) << rep.failure;
  }
}

TEST(NFailure, CollapseAtRegularOnly) {
  auto rep = demo_N_failure(c2());
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.size_at_regular, 1u);
  EXPECT_EQ(rep.size_at_trivial, 3u);
  EXPECT_FALSE(rep.explanation.empty());
  EXPECT_TRUE(demo_N_failure(make_group(FinGroup::cyclic(3))).pass);
  EXPECT_THROW(demo_N_failure(e()), PreconditionError);
}

TEST(Machine, EtaIntoZeroSphereLevel) {
  auto f = make_category(CatTag::F, e(), 2);
  MachineOutput m(MachineTag::Sigma, R2(f, 0), {GSetAction::trivial(e(), 0)}, 2, 2);
  EXPECT_TRUE(eta_into_sphere_level_injective(m, 0));
  EXPECT_THROW(eta_into_sphere_level_injective(MachineOutput(MachineTag::Sigma, R2(f, 0),
                                                             {GSetAction::trivial(e(), 1)}, 1, 1), 0),
               PreconditionError);
}

TEST(Machine, StructureMapsUnitalAssociativeSimplicial) {
  auto f = make_category(CatTag::F, e(), 2);
  MachineOutput m(MachineTag::Sigma, R2(f, 0), {}, 2, 2);
  auto t0 = GSetAction::trivial(e(), 0), t1 = GSetAction::trivial(e(), 1);
  auto err = check_structure_maps(m, t0, t1, t1);
  EXPECT_FALSE(err) << *err;
  err = check_structure_maps(m, t1, t0, t1);
  EXPECT_FALSE(err) << *err;

  auto g = c2();
  auto fg = make_category(CatTag::FG, g, 2);
  for (auto tag : {MachineTag::SigmaG, MachineTag::NGSmash, MachineTag::NGProduct}) {
    MachineOutput mg(tag, R2(fg, 0), {}, 1, 1);
    auto e0 = GSetAction::trivial(g, 0);
    auto err2 = check_structure_maps(mg, e0, GSetAction::regular(g), GSetAction::trivial(g, 1));
    EXPECT_FALSE(err2) << to_string(tag) << ": " << *err2;
  }
}

TEST(Machine, CircleLevelOfRZ2IsK1) {
  auto f = make_category(CatTag::F, e(), 2);
  MachineOutput m(MachineTag::Sigma, R2(f, 0), {GSetAction::trivial(e(), 1)}, 3, 3);
  EXPECT_FALSE(check_simplicial_identities(m.level(0)));
  auto h = reduced_homology(m.level(0), 2);
  EXPECT_EQ(h.degree[0].str(), "0");
  EXPECT_EQ(h.degree[1].str(), "Z/2");
}

TEST(Tensor, HalfSmashCommutesWithMachine) {
  auto f = make_category(CatTag::F, e(), 2);
  auto t0 = GSetAction::trivial(e(), 0), t1 = GSetAction::trivial(e(), 1);
  auto u = unit_diagram(f, 2);
  auto pt = GSimplicialSet::point(e(), 2);
  auto err = check_tensor_with_space(MachineTag::Sigma, u, pt, t1, 2);
  EXPECT_FALSE(err) << *err;
  err = check_tensor_with_space(MachineTag::Sigma, u, standard_simplex(e(), 1, 2), t0, 2);
  EXPECT_FALSE(err) << *err;
  auto two = GSimplicialSet::discrete(e(), 2, 2);
  err = check_tensor_with_space(MachineTag::Sigma, u, two, t1, 2);
  EXPECT_FALSE(err) << *err;
  // two points: a wedge of two copies
  MachineOutput m(MachineTag::Sigma, u, {t1}, 2, 2);
  MachineOutput m2(MachineTag::Sigma, half_smash_diagram(u, two), {t1}, 2, 2);
  for (int p = 0; p <= 2; ++p) EXPECT_EQ(m2.level(0).size(p) - 1, 2 * (m.level(0).size(p) - 1));
  auto g = c2();
  auto fg = make_category(CatTag::FG, g, 2);
  for (auto tag : {MachineTag::SigmaG, MachineTag::NGSmash}) {
    err = check_tensor_with_space(tag, unit_diagram(fg, 1), standard_simplex(g, 1, 1), GSetAction::regular(g), 1);
    EXPECT_FALSE(err) << to_string(tag) << ": " << *err;
  }
  // [y, f, *] survives in the product variant but has |A| preimages on the right
  EXPECT_TRUE(check_tensor_with_space(MachineTag::NGProduct, unit_diagram(fg, 1), standard_simplex(g, 1, 1),
                                      GSetAction::regular(g), 1));
}
