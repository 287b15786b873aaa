#include "suites.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "segal/homology.hpp"
#include "segal/kan.hpp"
#include "segal/monoidal.hpp"

namespace segalwb {

using namespace segal;
using nlohmann::json;

namespace {

GroupPtr group_or(const RunConfig& c, const char* fallback) {
  return c.group ? *c.group : parse_group_name(fallback);
}

int bound(const std::optional<int>& v, int fallback) { return v.value_or(fallback); }

Diagram make_diagram(const DiagramSpec& d, const CatPtr& cat, int dim) {
  GroupPtr g = cat->group_ptr();
  if (d.kind == "unit") return unit_diagram(cat, dim);
  if (d.kind == "point") return point_diagram(cat, dim);
  if (d.kind == "free") return free_diagram(cat, sphere(GSetAction::trivial(g, d.sphere), dim));
  AbGroup a(d.factors, g);
  if (!d.action.empty()) a = a.with_action(g, d.action);
  return R_diagram(cat, a, dim);
}

Diagram diagram_or_R2(const RunConfig& c, const CatPtr& cat, int dim) {
  return make_diagram(c.diagram.value_or(DiagramSpec{}), cat, dim);
}

GSetAction sphere_rep(const SphereSpec& s, const GroupPtr& g) {
  if (std::holds_alternative<int>(s)) return GSetAction::trivial(g, std::get<int>(s));
  return GSetAction::regular(g);
}

std::string sphere_name(const SphereSpec& s) {
  return std::holds_alternative<int>(s) ? "S" + std::to_string(std::get<int>(s)) : "Sreg";
}

// HomologyResult::str without the trailing newline.
std::string homology(const HomologyResult& h) {
  std::string s = h.str();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

CheckResult verdict(bool ok, const std::string& witness, json data = nullptr) {
  CheckResult r;
  if (!ok) r.failure = witness;
  r.data = std::move(data);
  return r;
}

CheckResult from_optional(const std::optional<std::string>& err, json data = nullptr) {
  return verdict(!err, err.value_or(""), std::move(data));
}

CheckResult skipped(const std::string& why) {
  CheckResult r;
  r.skipped = true;
  r.data = {{"reason", why}};
  return r;
}

void iso_r_suite(const RunConfig& c, Report& rep) {
  auto g = group_or(c, "C2");
  const int n = bound(c.truncation, 2), q = bound(c.qmax, 2), d = bound(c.dmax, 3);
  auto f = make_category(CatTag::F, g, n);
  auto fg = make_category(CatTag::FG, g, n);
  auto x = diagram_or_R2(c, f, d);
  rep.run("iso-r.isomorphism",
          "B^{Sigma_G}(P X) -> P(B^Sigma X) is a levelwise bijection commuting with G, faces, degeneracies and eps",
          [&] {
            auto r = iso_r(x, fg, q);
            json sizes = r.sizes;
            return verdict(r.ok, r.failure, {{"sizes_by_q_and_object", sizes}});
          });
}

void comparisons_suite(const RunConfig& c, Report& rep) {
  auto g = group_or(c, "C2");
  const int n = bound(c.truncation, 2), q = bound(c.qmax, 2), d = bound(c.dmax, 3);
  auto fg = make_category(CatTag::FG, g, n);
  auto y = diagram_or_R2(c, fg, d);
  auto r = std::make_shared<ComparisonReport>();
  rep.run("comparisons.eps", "eps o q = eps and eps o p = eps on every stored simplex", [&] {
    *r = check_comparisons(y, q);
    return verdict(r->eps_q && r->eps_p, r->failure);
  });
  rep.run("comparisons.surjective", "q and p are levelwise surjective",
          [&] { return verdict(r->q_surjective && r->p_surjective, r->failure); });
  rep.run("comparisons.p-collapse", "p collapses exactly the simplices with a zero map or basepoint",
          [&] { return verdict(r->p_collapse, r->failure); });
  rep.run("comparisons.simplicial", "q and p commute with faces and degeneracies",
          [&] { return verdict(r->q_simplicial && r->p_simplicial, r->failure); });
  rep.run("comparisons.reedy", "bar-direction degeneracies are levelwise injective",
          [&] { return verdict(r->reedy, r->failure); });
}

void n_failure_suite(const RunConfig& c, Report& rep) {
  auto g = group_or(c, "C2");
  rep.run("n-failure.witness",
          "prolongation of the unit along N -> N_G is a point at the regular G-set but not at the trivial one",
          [&] {
            auto r = demo_N_failure(g);
            return verdict(r.pass, r.explanation,
                           {{"size_at_regular", r.size_at_regular},
                            {"size_at_trivial", r.size_at_trivial},
                            {"explanation", r.explanation}});
          });
}

void coherence_suite(const RunConfig& c, Report& rep) {
  auto g = group_or(c, "e");
  CoherenceBounds b;
  b.truncation = bound(c.truncation, 3);
  b.pair_truncation = bound(c.pair_truncation, std::max(4, b.truncation));
  b.qmax = bound(c.qmax, 2);
  b.dmax = bound(c.dmax, 3);
  auto v = c.spheres && !c.spheres->empty() ? sphere_rep(c.spheres->front(), g) : GSetAction::trivial(g, 1);
  std::vector<int> fixtures{0, 1};
  if (c.diagram && c.diagram->kind == "free") fixtures = {c.diagram->sphere};
  if (c.diagram && c.diagram->kind == "unit") fixtures = {0};
  if (c.diagram && (c.diagram->kind == "R" || c.diagram->kind == "point"))
    throw ConfigError("coherence runs on free diagrams F1 S^k and the unit only");
  auto s = [&](int k) { return sphere(GSetAction::trivial(g, k), b.dmax); };
  if (std::find(fixtures.begin(), fixtures.end(), 0) != fixtures.end())
    rep.run("coherence.unit-is-free-S0", "the unit diagram equals F1 S0 on every object and morphism", [&] {
      auto cat = make_category(CatTag::F, g, b.truncation);
      auto u = unit_diagram(cat, b.dmax), f = free_diagram(cat, s(0));
      for (int i = 0; i < cat->num_objects(); ++i)
        for (int p = 0; p <= b.dmax; ++p)
          for (Id x = 0; x < u.value(i).size(p); ++x)
            for (int j = 0; j < cat->num_objects(); ++j)
              for (const auto& h : cat->homs(i, j))
                if (f.value(i).size(p) != u.value(i).size(p) || u.act(i, j, h, p, x) != f.act(i, j, h, p, x))
                  return verdict(false, "differs at object " + cat->object_name(i));
      return verdict(true, "");
    });
  for (int x : fixtures)
    for (int y : fixtures)
      for (int z : fixtures) {
        std::string name = "coherence.S" + std::to_string(x) + ".S" + std::to_string(y) + ".S" + std::to_string(z);
        rep.run(name, "unit, associativity and symmetry diagrams for phi commute on all simplices", [&] {
          auto r = check_coherence(s(x), s(y), s(z), v, v, v, b);
          return verdict(r.ok(), r.failure, {{"checked", r.checked}});
        });
      }
  rep.run("coherence.n-variant-control", "over N instead of Sigma the symmetry square fails on a concrete simplex",
          [&] {
            CoherenceBounds sym_only = b;
            sym_only.unit = sym_only.assoc = false;
            auto r = check_coherence(s(0), s(0), s(0), v, v, v, sym_only, CatTag::N);
            return verdict(!r.symmetry, "the symmetry diagram commutes over N", {{"counterexample", r.failure}});
          });
}

void bpq_suite(const RunConfig& c, Report& rep) {
  auto g = group_or(c, "e");
  const int n = bound(c.truncation, 3), q = bound(c.qmax, 3), d = bound(c.dmax, 2);
  const int xk = c.diagram && c.diagram->kind == "free" ? c.diagram->sphere : 0;
  auto v = c.spheres && !c.spheres->empty() ? sphere_rep(c.spheres->front(), g) : GSetAction::trivial(g, 1);
  auto x = sphere(GSetAction::trivial(g, xk), std::max(q, d));
  auto data = std::make_shared<std::optional<BpqData>>();
  rep.run("bpq.homotopy", "zeta o eta = id and the extra degeneracy gives eta o zeta ~ id", [&] {
    *data = bpq_mu(x, v, n, q, d);
    return from_optional(check_bpq(**data));
  });
  const int dim = std::min(q, d);
  rep.run("bpq.coend", "the coend of A^n smash (n smash X) over F is A smash X", [&] {
    return from_optional(check_coend_identification(sphere(v, dim), x.with_dim(dim), n, dim));
  });
  rep.run("bpq.homology", "bar diagonal and A smash X have equal reduced homology", [&] {
    if (dim < 1) return skipped("needs min(qmax, dmax) >= 1");
    if (!*data) return skipped("bar construction failed");
    auto hb = reduced_homology((*data)->bar, dim - 1);
    auto ht = reduced_homology((*data)->target.set, dim - 1);
    return verdict(hb == ht, "bar: " + homology(hb) + " target: " + homology(ht), {{"homology", homology(hb)}});
  });
}

void em_suite(const RunConfig& c, Report& rep) {
  auto g = group_or(c, "C2");
  auto e = make_group(FinGroup::trivial());
  const int n = bound(c.truncation, 2), q = bound(c.qmax, 1), d = bound(c.dmax, 2);
  const int np = bound(c.pair_truncation, std::max(4, n));
  DiagramSpec spec = c.diagram.value_or(DiagramSpec{});
  if (spec.kind != "R") throw ConfigError("em runs on R diagrams");
  DiagramSpec plain = spec;
  plain.action.clear();
  rep.run("em.special", "R A is special over F (G = e)",
          [&] { return verdict(is_special_discrete(make_diagram(plain, make_category(CatTag::F, e, n), 0)), "Segal map not bijective"); });
  rep.run("em.special-equivariant", "R A is special over F and F_G, on graph-subgroup fixed points", [&] {
    if (g->is_trivial()) return skipped("group is trivial");
    bool ok = is_special_discrete(make_diagram(spec, make_category(CatTag::F, g, n), 0)) &&
              is_special_discrete_equivariant(make_diagram(spec, make_category(CatTag::FG, g, n), 0));
    return verdict(ok, "Segal map not bijective on some fixed points");
  });
  rep.run("em.eps-eta", "extra-degeneracy homotopy id ~ eta o eps on B(F^Sigma, F^Sigma, R A)", [&] {
    auto f = make_category(CatTag::F, e, n);
    BarConstruction bar(Monad(CatTag::Sigma, f), make_diagram(plain, f, d), q);
    for (int k = 0; k < f->num_objects(); ++k)
      if (auto err = check_eps_eta(eps_eta_homotopy(bar, k, std::min(q, d)))) return verdict(false, *err);
    return verdict(true, "");
  });
  rep.run("em.ring-pairing", "ring pairing of the machine levels of R A is associative and unital", [&] {
    if (spec.factors.size() != 1) return skipped("ring structure only for a single cyclic factor");
    auto r = em_ring_pairing(RingObject::integers_mod(spec.factors[0]), e, GSetAction::trivial(e, 1), n, np, q, d);
    return verdict(r.ok(), r.failure);
  });
}

void machine_suite(const RunConfig& c, Report& rep) {
  const MachineTag tag = c.tag.value_or(MachineTag::Sigma);
  auto g = group_or(c, "e");
  const int n = bound(c.truncation, 2), q = bound(c.qmax, 4), d = bound(c.dmax, 2);
  auto cat = make_category(tag == MachineTag::Sigma ? CatTag::F : CatTag::FG, g, n);
  auto x = diagram_or_R2(c, cat, 0);
  std::vector<SphereSpec> spheres = c.spheres.value_or(std::vector<SphereSpec>{1});
  std::vector<GSetAction> reps;
  for (const auto& s : spheres) reps.push_back(sphere_rep(s, g));
  auto m = std::make_shared<std::optional<MachineOutput>>();
  rep.run("machine.build", std::string("machine ") + to_string(tag) + " levels of " + x.name(), [&] {
    m->emplace(tag, x, reps, q, d);
    return verdict(true, "", {{"dim", (*m)->dim()}});
  });
  for (std::size_t k = 0; k < spheres.size(); ++k)
    rep.run("machine.level." + sphere_name(spheres[k]), "level is a simplicial set; reduced homology", [&, k] {
      if (!*m) return skipped("machine construction failed");
      const auto& lv = (*m)->level(k);
      if (auto err = check_simplicial_identities(lv)) return verdict(false, *err);
      json data{{"sizes", json::array()}};
      for (int p = 0; p <= lv.dim(); ++p) data["sizes"].push_back(lv.size(p));
      if (lv.dim() >= 1) data["homology"] = homology(reduced_homology(lv, lv.dim() - 1));
      return verdict(true, "", data);
    });
}

using SuiteFn = void (*)(const RunConfig&, Report&);
const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"iso-r", iso_r_suite},     {"comparisons", comparisons_suite}, {"n-failure", n_failure_suite},
      {"coherence", coherence_suite}, {"bpq", bpq_suite},             {"em", em_suite},
      {"machine", machine_suite}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : suites()) v.push_back(k);
    return v;
  }();
  return names;
}

void run_suite(const std::string& name, const RunConfig& cfg, Report& report) {
  for (const auto& [k, f] : suites())
    if (k == name) return f(cfg, report);
  throw ConfigError("unknown suite '" + name + "'");
}

void describe_categories(const RunConfig& cfg, std::ostream& out) {
  auto g = group_or(cfg, "C2");
  const int n = bound(cfg.truncation, 2);
  std::vector<CatTag> tags{CatTag::F, CatTag::Pi, CatTag::Sigma, CatTag::N};
  if (!g->is_trivial())
    for (auto t : {CatTag::FG, CatTag::PiG, CatTag::SigmaG, CatTag::NG}) tags.push_back(t);
  out << "group " << g->name() << " of order " << g->order() << ", truncation " << n << "\n";
  for (auto t : tags) {
    auto cat = make_category(t, g, n);
    out << to_string(t) << ": " << cat->num_objects() << " objects\n";
    for (int i = 0; i < cat->num_objects(); ++i) {
      out << "  " << std::left << std::setw(14) << cat->object_name(i) << " homs to each object:";
      for (int j = 0; j < cat->num_objects(); ++j) out << ' ' << cat->homs(i, j).size();
      out << "\n";
    }
  }
}

}  // namespace segalwb
