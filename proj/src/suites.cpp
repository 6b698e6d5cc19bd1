#include "finbound/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "finbound/functor.hpp"
#include "finbound/strictness.hpp"

namespace finbound::suites {

using namespace cats;
using colimit::Verdict;

namespace {

const std::string kPass = colimit::to_string(Verdict::PassProbeLimited);
const std::string kFail = colimit::to_string(Verdict::FailCertified);
const std::string kExhausted = colimit::to_string(Verdict::Exhausted);

json certificate(const std::string& kind, json params, const std::string& verdict, json witness) {
  return {{"kind", kind}, {"params", std::move(params)}, {"verdict", verdict}, {"witness", std::move(witness)}};
}

json opt_mor(const std::optional<Mor>& m) { return m ? to_json(*m) : json(nullptr); }

int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// ---- counterexample functors ------------------------------------------------

functor::FunctorHandle functor_named(const std::string& name) {
  if (name == "un") return functor::un_counterexample();
  if (name == "graph") return functor::graph_counterexample();
  throw SchemaError("unknown functor '" + name + "'");
}

json finitarity(const json& p) {
  const auto name = p.at("functor").get<std::string>();
  const int k = p.at("k").get<int>();
  if (k < 1 || k > 6) throw SchemaError("finitarity: k must lie in 1..6");
  const Cocone chain = name == "un" ? prime_cycle_chain(k + 2) : path_chain(k + 2);
  auto c = functor::finitarity_certificate(functor_named(name), chain, k);
  json merged = nullptr;
  if (c.merged) merged = {std::get<0>(*c.merged), std::get<1>(*c.merged), std::get<2>(*c.merged)};
  return certificate("finitarity", p, colimit::to_string(c.verdict),
                     {{"functor", c.functor},
                      {"chain", c.chain},
                      {"lhs_size", c.lhs_size},
                      {"rhs_size", c.rhs_size ? json(*c.rhs_size) : json(nullptr)},
                      {"merged", merged},
                      {"persists", c.persists}});
}

json bounded_all(const json& p) {
  auto f = functor_named(p.at("functor").get<std::string>());
  const AnyObject a = any_from_json(p.at("object"));
  const int m0_bound = p.at("m0_bound").get<int>();
  const int search = p.at("search_bound").get<int>();
  const Obj fa = functor::apply_finite(f, a);
  std::size_t total = 0, found = 0, most_tried = 0;
  for (const auto& m0 : subobjects(fa, m0_bound)) {
    ++total;
    auto w = functor::finitely_bounded_witness(f, a, m0, search);
    if (w.found() && functor::verify(f, a, w)) ++found;
    most_tried = std::max(most_tried, w.candidates_tried);
  }
  return certificate("finitarity", p, found == total ? kPass : kFail,
                     {{"subobjects", total}, {"witnessed", found}, {"most_candidates_tried", most_tried}});
}

json bounded(const json& p) {
  auto f = functor_named(p.at("functor").get<std::string>());
  const AnyObject a = any_from_json(p.at("object"));
  const Mor m0 = mor_from_json(p.at("m0"));
  auto w = functor::finitely_bounded_witness(f, a, m0, p.at("search_bound").get<int>());
  const bool ok = w.found() && functor::verify(f, a, w);
  return certificate("finitarity", p, ok ? kPass : kFail,
                     {{"m", opt_mor(w.m)}, {"mediating", opt_mor(w.mediating)}, {"candidates_tried", w.candidates_tried}});
}

json colimit_check(const json& p) {
  const int k = p.at("k").get<int>();
  if (k < 1 || k > 6) throw SchemaError("colimit: k must lie in 1..6");
  std::vector<Obj> probes;
  for (const auto& o : p.at("probes")) probes.push_back(obj_from_json(o));
  auto r = colimit::reflect_colimit_test(prime_cycle_chain(k), probes);
  json unmerged = nullptr;
  if (r.unmerged) unmerged = {to_json(r.unmerged->first), to_json(r.unmerged->second)};
  return certificate("colimit-test", p, colimit::to_string(r.verdict),
                     {{"morphisms_checked", r.morphisms_checked},
                      {"window_exhausted", r.window_exhausted},
                      {"unfactorized", opt_mor(r.unfactorized)},
                      {"unmerged", unmerged}});
}

json no_finitary_endo(const json& p) {
  auto c = strictness::no_finitary_endo_certificate(symbolic_from_json(p.at("object")));
  json ray = nullptr;
  if (c.ray) {
    ray = {{"window", c.ray->window}, {"rows", json::array()}};
    for (const auto& row : c.ray->rows)
      ray["rows"].push_back({{"k", row.k}, {"homs_in_window", row.homs_in_window}, {"advance", row.all_advance_by_one}});
  }
  std::string verdict = kExhausted;
  if (!c.refused) verdict = c.holds ? kFail : kExhausted;
  return certificate("no-finitary-endo", p, verdict,
                     {{"refused", c.refused},
                      {"reason", c.reason},
                      {"primes", c.primes},
                      {"prime_hom_table", c.prime_hom_table},
                      {"ray", ray},
                      {"inference", c.inference},
                      {"holds", c.holds}});
}

json semistrict(const json& p) {
  auto r = strictness::semistrictness_witness(any_from_json(p.at("object")), p.at("bound").get<int>());
  json w = nullptr;
  std::string verdict = r.exhausted ? kExhausted : kFail;
  if (r.witness) {
    const auto& fz = r.witness->factorization;
    w = {{"description", r.witness->description}, {"u", to_json(fz.u)}, {"v", to_json(fz.v)}, {"w", to_json(fz.w)}};
    verdict = fz.holds() ? kPass : kFail;
  }
  return certificate("strictness-witness", p, verdict, {{"endo", w}, {"exhausted", r.exhausted}});
}

// ---- strictness ---------------------------------------------------------------

json finset_exhaustive(const json& p) {
  const int max_dom = p.at("max_dom").get<int>(), max_cod = p.at("max_cod").get<int>();
  if (max_dom < 0 || max_dom > 5 || max_cod < 0 || max_cod > 6) throw SchemaError("finset-exhaustive: sizes too large");
  std::size_t total = 0, witnessed = 0;
  std::map<std::string, std::size_t> constructions;
  for (int d = 0; d <= max_dom; ++d)
    for (int c = 0; c <= max_cod; ++c)
      for (const auto& t : all_functions(d, c)) {
        ++total;
        auto r = strictness::strictness_witness(make_mor(finset(d), finset(c), {t}), std::max(d, 1));
        if (r.witness && r.witness->holds()) {
          ++witnessed;
          ++constructions[r.witness->construction];
        }
      }
  return certificate("strictness-witness", p, witnessed == total ? kPass : kFail,
                     {{"morphisms", total}, {"witnessed", witnessed}, {"constructions", constructions}});
}

json strict(const json& p) {
  auto r = strictness::strictness_witness(mor_from_json(p.at("b")), p.at("bound").get<int>());
  json w = nullptr;
  std::string verdict = r.exhausted ? kExhausted : kFail;
  if (r.witness) {
    w = {{"bprime", to_json(r.witness->bprime)}, {"f", to_json(r.witness->f)}, {"construction", r.witness->construction}};
    verdict = r.witness->holds() ? kPass : kFail;
  }
  return certificate("strictness-witness", p, verdict, {{"split", w}});
}

json lin_strict(const json& p) {
  auto w = strictness::strictness_witness(linmap_from_json(p.at("b")));
  return certificate("strictness-witness", p, w.holds() ? kPass : kFail,
                     {{"bprime", to_json(w.bprime)}, {"f", to_json(w.f)}});
}

// ---- atoms ----------------------------------------------------------------------

json atoms(const json& p) {
  auto g = groupoid_from_json(p.at("groupoid"));
  auto as = strictness::atoms_of_presheaves(g);
  bool ok = true;
  json list = json::array();
  for (std::size_t i = 0; i < as.size(); ++i) {
    ok = ok && strictness::is_atom(as[i]);
    for (std::size_t j = 0; j < i; ++j) ok = ok && !isomorphic(as[i], as[j]);
    list.push_back(to_json(as[i]));
  }
  return certificate("atoms", p, ok ? kPass : kFail, {{"count", as.size()}, {"atoms", list}});
}

json decompose(const json& p) {
  const Obj x = obj_from_json(p.at("object"));
  auto parts = strictness::decompose_into_atoms(x);
  std::vector<Obj> doms;
  json sizes = json::array();
  bool atomic = true;
  for (const auto& m : parts) {
    doms.push_back(m.dom);
    sizes.push_back(m.dom.total_size());
    atomic = atomic && strictness::is_atom(m.dom);
  }
  auto sum = coproduct(x.cat, doms);
  const bool iso = is_iso(copair(sum, parts));
  return certificate("atoms", p, iso && atomic ? kPass : kFail,
                     {{"summand_sizes", sizes}, {"all_atoms", atomic}, {"copair_iso", iso}});
}

// ---- super-finitary functors --------------------------------------------------

superfin::SetFunctor set_functor_from(const json& j) {
  if (j.is_object()) return superfin::from_presentation(presentation_from_json(j.at("presentation")));
  const auto name = j.get<std::string>();
  if (name == "powfin") return superfin::powfin();
  if (name == "id") return superfin::identity_set_functor();
  if (name.rfind("hom", 0) == 0) return superfin::hom_set_functor(std::stoi(name.substr(3)));
  throw SchemaError("unknown set functor '" + name + "'");
}

json kan_hom(const json& p) {
  const int m = p.at("m").get<int>(), n = p.at("n").get<int>();
  auto pres = superfin::hom_presentation(m, n);
  json classes = json::array();
  bool ok = true;
  for (int x : p.at("probes").get<std::vector<int>>()) {
    const int c = superfin::evaluate(pres, x).classes;
    classes.push_back(c);
    ok = ok && c == ipow(x, m);
  }
  return certificate("superfin", p, ok ? kPass : kFail, {{"classes", classes}});
}

json coverage(const json& p) {
  auto f = set_functor_from(p.at("functor"));
  auto r = superfin::superfinitary_test(f, p.at("n").get<int>(), p.at("probes").get<std::vector<int>>());
  return certificate("superfin", p, colimit::to_string(r.verdict),
                     {{"failing_x", r.failing_x}, {"uncovered", r.uncovered}});
}

json powfin_endos(const json& p) {
  auto fams = superfin::powfin_endo_probe(p.at("m").get<int>());
  bool identity_only = fams.size() == 1;
  if (identity_only)
    for (const auto& level : fams[0])
      for (std::size_t i = 0; i < level.size(); ++i) identity_only = identity_only && level[i] == static_cast<int>(i);
  return certificate("superfin", p, identity_only ? kPass : kFail,
                     {{"families", fams.size()}, {"identity_only", identity_only}});
}

// ---- nominal sets ----------------------------------------------------------------

json nom_finitarity(const json& p) {
  auto c = nominal::nom_finitarity_certificate(p.at("k").get<int>());
  return certificate("nominal", p, colimit::to_string(c.verdict),
                     {{"lhs_orbits", c.lhs_orbits},
                      {"rhs_orbits", c.rhs_orbits},
                      {"homs_into_colimit", c.homs_into_colimit},
                      {"persists", c.persists}});
}

json rigidity(const json& p) {
  auto s = nominal::rigidity_sweep(p.at("k").get<int>(), p.at("pool").get<int>());
  json reports = json::array();
  for (const auto& r : s.reports)
    reports.push_back({{"elements_checked", r.elements_checked},
                       {"transposition_steps", r.transposition_steps},
                       {"rigid", r.rigid}});
  return certificate("nominal", p, s.all_rigid ? kPass : kFail, {{"candidates", s.candidates}, {"reports", reports}});
}

json nom_value(const json& p) {
  auto r = nominal::nom_counterexample(nominal_set_from_json(p.at("x")), p.at("bound").get<int>());
  return certificate("nominal", p, kPass,
                     {{"missing_n", r.missing_n ? json(*r.missing_n) : json(nullptr)}, {"value", to_json(r.value)}});
}

json subgroups(const json& p) {
  const int n = p.at("n").get<int>();
  if (n < 0 || n > 5) throw SchemaError("subgroups: n must lie in 0..5");
  return certificate("nominal", p, kPass, {{"count", nominal::subgroups_of_Sn(n).size()}});
}

json orbits(const json& p) {
  const int n = p.at("n").get<int>();
  if (n < 0 || n > 4) throw SchemaError("orbits: n must lie in 0..4");
  json list = json::array();
  auto os = nominal::single_orbit_enumerate(n);
  for (const auto& o : os) list.push_back(to_json(o));
  return certificate("nominal", p, kPass, {{"count", os.size()}, {"orbits", list}});
}

json roundtrip(const json& p) {
  const int n = p.at("n").get<int>();
  if (n < 0 || n > 4) throw SchemaError("roundtrip: n must lie in 0..4");
  std::size_t ok = 0, total = 0;
  for (const auto& s : nominal::subgroups_of_Sn(n)) {
    ++total;
    if (nominal::subgroup_from_quotient(n, nominal::equivalence_from_subgroup(s)) == s) ++ok;
  }
  return certificate("nominal", p, ok == total ? kPass : kFail, {{"subgroups", total}, {"roundtrips", ok}});
}

// ---- Hausdorff --------------------------------------------------------------------

json h_metric(const json& p) {
  auto x = space_from_json(p.at("space"));
  auto h = hausdorff::H_obj(x);
  auto bad = hausdorff::axiom_violation(h);
  return certificate("hausdorff", p, bad ? kFail : kPass,
                     {{"points", h.n}, {"violation", bad ? json(*bad) : json(nullptr)}});
}

json h_functor(const json& p) {
  using namespace hausdorff;
  auto x = space_from_json(p.at("x")), y = space_from_json(p.at("y")), z = space_from_json(p.at("z"));
  auto f = make_map(x, y, p.at("f").get<std::vector<int>>());
  auto g = make_map(y, z, p.at("g").get<std::vector<int>>());
  auto hf = H_mor(f), hg = H_mor(g);
  const bool nonexp = is_nonexpanding(hf.dom, hf.cod, hf.f) && is_nonexpanding(hg.dom, hg.cod, hg.f);
  const bool comp = H_mor(compose(g, f)) == compose(hg, hf);
  const bool id = H_mor(identity_map(x)) == identity_map(H_obj(x));
  return certificate("hausdorff", p, nonexp && comp && id ? kPass : kFail,
                     {{"nonexpanding", nonexp}, {"composition", comp}, {"identity", id}});
}

json h_mono(const json& p) {
  using namespace hausdorff;
  auto f = make_map(space_from_json(p.at("x")), space_from_json(p.at("y")), p.at("f").get<std::vector<int>>());
  if (!is_isometric_embedding(f)) throw SchemaError("mono: f is not an isometric embedding");
  auto hf = H_mor(f);
  auto img = hf.f;
  std::sort(img.begin(), img.end());
  const bool injective = std::adjacent_find(img.begin(), img.end()) == img.end();
  const bool isometric = is_isometric_embedding(hf);
  return certificate("hausdorff", p, injective ? kPass : kFail, {{"injective", injective}, {"isometric", isometric}});
}

json h_bounded(const json& p) {
  auto x = space_from_json(p.at("space"));
  auto w = hausdorff::boundedness_witness(x, p.at("m0").get<std::vector<hausdorff::Subset>>());
  return certificate("hausdorff", p, w.holds() ? kPass : kFail,
                     {{"m", w.m}, {"inclusion", w.inclusion.f}, {"preimages", w.preimages}});
}

// ---- dispatch -------------------------------------------------------------------

struct Check {
  const char* kind;
  std::function<json(const json&)> run;
};

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table{
      {"finitarity", {"finitarity", finitarity}},
      {"bounded-all", {"finitarity", bounded_all}},
      {"bounded", {"finitarity", bounded}},
      {"colimit", {"colimit-test", colimit_check}},
      {"no-finitary-endo", {"no-finitary-endo", no_finitary_endo}},
      {"semistrict", {"strictness-witness", semistrict}},
      {"finset-exhaustive", {"strictness-witness", finset_exhaustive}},
      {"strict", {"strictness-witness", strict}},
      {"lin-strict", {"strictness-witness", lin_strict}},
      {"atoms", {"atoms", atoms}},
      {"decompose", {"atoms", decompose}},
      {"kan-hom", {"superfin", kan_hom}},
      {"coverage", {"superfin", coverage}},
      {"powfin-endos", {"superfin", powfin_endos}},
      {"nom-finitarity", {"nominal", nom_finitarity}},
      {"rigidity", {"nominal", rigidity}},
      {"nom-value", {"nominal", nom_value}},
      {"subgroups", {"nominal", subgroups}},
      {"orbits", {"nominal", orbits}},
      {"roundtrip", {"nominal", roundtrip}},
      {"h-metric", {"hausdorff", h_metric}},
      {"h-functor", {"hausdorff", h_functor}},
      {"h-mono", {"hausdorff", h_mono}},
      {"h-bounded", {"hausdorff", h_bounded}},
  };
  return table;
}

json compute(const json& params) {
  if (!params.is_object() || !params.contains("check")) throw SchemaError("params must name a check");
  const auto name = params.at("check").get<std::string>();
  auto it = checks().find(name);
  if (it == checks().end()) throw SchemaError("unknown check '" + name + "'");
  try {
    return it->second.run(params);
  } catch (const json::exception& e) {
    throw SchemaError(name + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw SchemaError(name + ": " + e.what());
  }
}

// ---- suite builders ----------------------------------------------------------------

struct SuiteBuilder {
  json checks = json::array();
  void add(const std::string& id, const std::string& expected, const json& params) {
    json cert = compute(params);
    checks.push_back({{"id", id}, {"expected", expected}, {"certificate", cert}, {"ok", cert.at("verdict") == expected}});
  }
};

Obj random_unary_obj(std::mt19937& rng, int n) {
  std::vector<int> t(n);
  for (int& v : t) v = uniform(rng, 0, n - 1);
  return unary(t);
}

Obj random_graph_obj(std::mt19937& rng, int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (uniform(rng, 0, 3) == 0) e.emplace_back(u, v);
  return graph(n, e);
}

/// Coproduct of random coset presheaves H\G(-, x), total size <= max_size.
Obj random_coset_presheaf(std::mt19937& rng, const std::shared_ptr<const FiniteGroupoid>& g, int max_size) {
  std::vector<Obj> parts;
  int total = 0;
  for (int attempt = 0; attempt < 12; ++attempt) {
    const int x = uniform(rng, 0, g->object_count() - 1);
    auto hs = strictness::vertex_subgroups(*g, x);
    Obj c = strictness::coset_presheaf(g, x, hs[uniform(rng, 0, static_cast<int>(hs.size()) - 1)]);
    if (total + c.total_size() > max_size) continue;
    total += c.total_size();
    parts.push_back(c);
  }
  return coproduct(Category::presheaf(g), parts).object;
}

std::optional<Mor> random_hom(std::mt19937& rng, const Obj& x, const Obj& y) {
  auto hs = hom_set(x, y);
  if (hs.empty()) return std::nullopt;
  return hs[uniform(rng, 0, static_cast<int>(hs.size()) - 1)];
}

json un_counterexample_suite(std::mt19937& rng, const Options& opt) {
  SuiteBuilder b;
  b.add("finitarity k=3", kFail, {{"check", "finitarity"}, {"functor", "un"}, {"k", 3}});
  b.add("finitarity k=4", kFail, {{"check", "finitarity"}, {"functor", "un"}, {"k", 4}});
  const Obj c23 = coproduct(Category::unary(), {cycle(2), cycle(3)}).object;
  const std::vector<std::pair<std::string, AnyObject>> as{{"C2+C3", c23}, {"CycleFamily", cycle_family()}};
  for (const auto& [label, a] : as)
    b.add("bounded all " + label, kPass,
          {{"check", "bounded-all"}, {"functor", "un"}, {"object", to_json(a)}, {"m0_bound", opt.bound},
           {"search_bound", opt.bound + 1}});
  const Obj fa = functor::apply_finite(functor::un_counterexample(), c23);
  auto subs = subobjects(fa, opt.bound);
  for (int t = 0; t < 3 && !subs.empty(); ++t)
    b.add("bounded sample " + std::to_string(t), kPass,
          {{"check", "bounded"}, {"functor", "un"}, {"object", to_json(c23)},
           {"m0", to_json(subs[uniform(rng, 0, static_cast<int>(subs.size()) - 1)])}, {"search_bound", opt.bound + 1}});
  json probes = json::array({to_json(cycle(2)), to_json(cycle(3)), to_json(cycle(5))});
  b.add("prime chain colimit", kPass, {{"check", "colimit"}, {"k", 3}, {"probes", probes}});
  b.add("CycleFamily has no finitary endo", kFail,
        {{"check", "no-finitary-endo"}, {"object", to_json(cycle_family())}});
  return b.checks;
}

json graph_counterexample_suite(std::mt19937&, const Options& opt) {
  SuiteBuilder b;
  b.add("finitarity k=3", kFail, {{"check", "finitarity"}, {"functor", "graph"}, {"k", 3}});
  b.add("finitarity k=4", kFail, {{"check", "finitarity"}, {"functor", "graph"}, {"k", 4}});
  b.add("Ray has no finitary endo", kFail, {{"check", "no-finitary-endo"}, {"object", to_json(ray())}});
  b.add("LoopRay is semi-strict", kPass,
        {{"check", "semistrict"}, {"object", to_json(loop_ray())}, {"bound", opt.bound}});
  b.add("Ray semi-strictness exhausted", kExhausted,
        {{"check", "semistrict"}, {"object", to_json(ray())}, {"bound", opt.bound}});
  return b.checks;
}

json nom_counterexample_suite(std::mt19937&, const Options&) {
  SuiteBuilder b;
  b.add("finitarity k=3", kFail, {{"check", "nom-finitarity"}, {"k", 3}});
  b.add("rigidity P1+P2+P3", kPass, {{"check", "rigidity"}, {"k", 3}, {"pool", 10}});
  for (const auto& ns : std::vector<std::vector<int>>{{1}, {1, 2}, {1, 2, 3}})
    b.add("F(P_sum " + json(ns).dump() + ")", kPass,
          {{"check", "nom-value"}, {"x", to_json(nominal::p_sum(ns))}, {"bound", 4}});
  return b.checks;
}

json strictness_suite(std::mt19937& rng, const Options& opt) {
  SuiteBuilder b;
  b.add("FinSet exhaustive", kPass, {{"check", "finset-exhaustive"}, {"max_dom", 4}, {"max_cod", 5}});
  auto z2 = FiniteGroupoid::cyclic(2);
  for (int t = 0; t < 6; ++t) {
    Obj x, y;
    switch (t % 3) {
      case 0:
        x = random_unary_obj(rng, uniform(rng, 1, 3));
        y = random_unary_obj(rng, uniform(rng, 1, 4));
        break;
      case 1:
        x = random_graph_obj(rng, uniform(rng, 1, 3));
        y = random_graph_obj(rng, uniform(rng, 1, 3));
        break;
      default:
        x = random_coset_presheaf(rng, z2, 4);
        y = random_coset_presheaf(rng, z2, 6);
    }
    auto h = random_hom(rng, x, y);
    if (!h) continue;
    b.add("split " + std::to_string(t), kPass, {{"check", "strict"}, {"b", to_json(*h)}, {"bound", opt.bound + 2}});
  }
  for (int t = 0; t < 3; ++t) {
    const int q = t == 1 ? 3 : 2, d = uniform(rng, 1, 3), c = uniform(rng, 1, 3);
    fqvec::Matrix a(c, std::vector<int>(d));
    for (auto& row : a)
      for (int& v : row) v = uniform(rng, 0, q - 1);
    b.add("F_q split " + std::to_string(t), kPass, {{"check", "lin-strict"}, {"b", to_json(fqvec::make_map(q, d, c, a))}});
  }
  return b.checks;
}

json atoms_suite(std::mt19937& rng, const Options&) {
  SuiteBuilder b;
  std::vector<std::shared_ptr<const FiniteGroupoid>> gs{FiniteGroupoid::trivial(), FiniteGroupoid::cyclic(2),
                                                        FiniteGroupoid::cyclic(3), FiniteGroupoid::symmetric3()};
  for (const auto& g : gs) {
    b.add("atoms " + g->name(), kPass, {{"check", "atoms"}, {"groupoid", groupoid_to_json(*g)}});
    for (int t = 0; t < 2; ++t)
      b.add("decompose " + g->name() + " " + std::to_string(t), kPass,
            {{"check", "decompose"}, {"object", to_json(random_coset_presheaf(rng, g, 8))}});
  }
  return b.checks;
}

json superfin_suite(std::mt19937& rng, const Options&) {
  SuiteBuilder b;
  b.add("Set(2,-) Kan evaluation", kPass, {{"check", "kan-hom"}, {"m", 2}, {"n", 2}, {"probes", {0, 1, 2, 3, 4}}});
  b.add("Set(2,-) super-finitary", kPass, {{"check", "coverage"}, {"functor", "hom2"}, {"n", 2}, {"probes", {0, 1, 2, 3, 4}}});
  for (int n = 1; n <= 4; ++n)
    b.add("powfin not covered by n=" + std::to_string(n), kFail,
          {{"check", "coverage"}, {"functor", "powfin"}, {"n", n}, {"probes", {n + 1}}});
  b.add("powfin endos m=3", kPass, {{"check", "powfin-endos"}, {"m", 3}});
  // A random quotient of Set(2,-) truncated at 2 is again super-finitary.
  auto p = superfin::hom_presentation(2, 2);
  std::vector<std::tuple<int, int, int>> pairs;
  const int k = uniform(rng, 1, 2);
  pairs.emplace_back(k, uniform(rng, 0, p.value(k) - 1), uniform(rng, 0, p.value(k) - 1));
  b.add("quotient presentation", kPass,
        {{"check", "coverage"},
         {"functor", {{"presentation", to_json(superfin::quotient(p, pairs))}}},
         {"n", 2},
         {"probes", {0, 1, 2, 3}}});
  return b.checks;
}

json classification_suite(std::mt19937&, const Options&) {
  SuiteBuilder b;
  for (int n = 0; n <= 4; ++n) b.add("subgroups S" + std::to_string(n), kPass, {{"check", "subgroups"}, {"n", n}});
  for (int n = 0; n <= 3; ++n) b.add("orbits n=" + std::to_string(n), kPass, {{"check", "orbits"}, {"n", n}});
  b.add("roundtrip S3", kPass, {{"check", "roundtrip"}, {"n", 3}});
  return b.checks;
}

/// Domain metric: max of a random metric and the pullback along f.
std::pair<hausdorff::FinMetricSpace, std::vector<int>> random_nonexpanding_into(std::mt19937& rng, int n,
                                                                               const hausdorff::FinMetricSpace& y) {
  auto e = hausdorff::random_space(rng, n);
  std::vector<int> f(n);
  for (int& v : f) v = uniform(rng, 0, y.n - 1);
  auto d = e.d;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = std::max(d[i][j], y.d[f[i]][f[j]]);
  return {hausdorff::make_space(d), f};
}

json hausdorff_suite(std::mt19937& rng, const Options&) {
  SuiteBuilder b;
  for (int t = 0; t < 3; ++t)
    b.add("H metric " + std::to_string(t), kPass,
          {{"check", "h-metric"}, {"space", to_json(hausdorff::random_space(rng, uniform(rng, 1, 5)))}});
  for (int t = 0; t < 2; ++t) {
    auto z = hausdorff::random_space(rng, uniform(rng, 1, 3));
    auto [y, g] = random_nonexpanding_into(rng, uniform(rng, 1, 3), z);
    auto [x, f] = random_nonexpanding_into(rng, uniform(rng, 1, 3), y);
    b.add("functoriality " + std::to_string(t), kPass,
          {{"check", "h-functor"}, {"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}, {"f", f}, {"g", g}});
  }
  {
    auto y = hausdorff::random_space(rng, 4);
    std::vector<int> pts{0, 1, 2, 3};
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(uniform(rng, 1, 3));
    std::vector<std::vector<hausdorff::Q>> d(pts.size(), std::vector<hausdorff::Q>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) d[i][j] = y.d[pts[i]][pts[j]];
    b.add("mono preservation", kPass,
          {{"check", "h-mono"}, {"x", to_json(hausdorff::make_space(d))}, {"y", to_json(y)}, {"f", pts}});
  }
  for (int t = 0; t < 2; ++t) {
    auto x = hausdorff::random_space(rng, 5);
    std::vector<hausdorff::Subset> m0(3);
    for (auto& s : m0) s = static_cast<hausdorff::Subset>(uniform(rng, 1, 31));
    b.add("boundedness " + std::to_string(t), kPass, {{"check", "h-bounded"}, {"space", to_json(x)}, {"m0", m0}});
  }
  return b.checks;
}

using SuiteFn = json (*)(std::mt19937&, const Options&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table{
      {"atoms", atoms_suite},
      {"graph-counterexample", graph_counterexample_suite},
      {"hausdorff", hausdorff_suite},
      {"nom-counterexample", nom_counterexample_suite},
      {"nominal-classification", classification_suite},
      {"strictness", strictness_suite},
      {"superfin", superfin_suite},
      {"un-counterexample", un_counterexample_suite},
  };
  return table;
}

void collect(const json& doc, std::vector<std::pair<std::string, json>>& out, const std::string& id) {
  if (!doc.is_object()) throw SchemaError("expected a JSON object");
  if (doc.contains("kind")) {
    out.emplace_back(id, doc);
  } else if (doc.contains("certificate")) {
    out.emplace_back(doc.value("id", id), doc.at("certificate"));
  } else if (doc.contains("checks")) {
    for (const auto& c : doc.at("checks")) collect(c, out, doc.value("name", id));
  } else if (doc.contains("suites")) {
    if (doc.value("schema", "") != kSchema) throw SchemaError("unsupported report schema");
    for (const auto& s : doc.at("suites")) collect(s, out, id);
  } else {
    throw SchemaError("not a certificate, check, suite or report");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) { return suite_table().count(name) > 0; }

json run_suite(const std::string& name, const Options& opt) {
  auto it = suite_table().find(name);
  if (it == suite_table().end()) throw PreconditionError("unknown suite '" + name + "'");
  // Each suite draws from its own stream so results do not depend on which
  // other suites run.
  const auto idx = static_cast<std::uint32_t>(std::distance(suite_table().begin(), it));
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32), idx};
  std::mt19937 rng(seq);
  json checks = it->second(rng, opt);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.at("ok").get<bool>();
  return {{"name", name}, {"checks", checks}, {"ok", ok}};
}

json run(const std::vector<std::string>& names, const Options& opt) {
  std::vector<std::string> list;
  for (const auto& n : names) {
    if (n == "all") {
      list.insert(list.end(), suite_names().begin(), suite_names().end());
    } else {
      if (!is_suite(n)) throw PreconditionError("unknown suite '" + n + "'");
      list.push_back(n);
    }
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());

  std::vector<json> results(list.size());
  std::vector<std::string> errors(list.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < list.size(); ++i) {
    try {
      results[i] = run_suite(list[i], opt);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    if (!errors[i].empty()) throw std::runtime_error("suite " + list[i] + ": " + errors[i]);

  json suites = json::array();
  bool ok = true;
  std::size_t total = 0, unexpected = 0;
  for (auto& r : results) {
    ok = ok && r.at("ok").get<bool>();
    for (const auto& c : r.at("checks")) {
      ++total;
      if (!c.at("ok").get<bool>()) ++unexpected;
    }
    suites.push_back(std::move(r));
  }
  return {{"schema", kSchema},
          {"seed", opt.seed},
          {"bound", opt.bound},
          {"suites", suites},
          {"summary", {{"checks", total}, {"unexpected", unexpected}}},
          {"ok", ok}};
}

json recompute(const json& cert) {
  if (!cert.is_object() || !cert.contains("kind") || !cert.contains("params"))
    throw SchemaError("certificate needs kind and params");
  json fresh = compute(cert.at("params"));
  if (fresh.at("kind") != cert.at("kind")) throw SchemaError("certificate kind does not match its check");
  return fresh;
}

std::vector<ReplayResult> replay(const json& doc) {
  std::vector<std::pair<std::string, json>> certs;
  collect(doc, certs, "certificate");
  std::vector<ReplayResult> out;
  for (const auto& [id, cert] : certs) {
    json fresh = recompute(cert);
    ReplayResult r;
    r.id = id;
    r.diff = json::diff(cert, fresh);
    r.match = r.diff.empty();
    r.verdict = fresh.at("verdict").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace finbound::suites
