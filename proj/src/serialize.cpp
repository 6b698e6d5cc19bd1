#include "finbound/serialize.hpp"

namespace finbound {

using namespace cats;

json groupoid_to_json(const FiniteGroupoid& g) {
  json arrows = json::array();
  json comp = json::array();
  for (int a = 0; a < g.arrow_count(); ++a) {
    arrows.push_back({g.src(a), g.dst(a)});
    json row = json::array();
    for (int b = 0; b < g.arrow_count(); ++b) row.push_back(g.compose(a, b));
    comp.push_back(row);
  }
  return {{"name", g.name()}, {"objects", g.object_count()}, {"arrows", arrows}, {"compose", comp}};
}

std::shared_ptr<const FiniteGroupoid> groupoid_from_json(const json& j) {
  std::vector<FiniteGroupoid::Arrow> arrows;
  for (const auto& a : j.at("arrows")) arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  return std::make_shared<const FiniteGroupoid>(j.at("name").get<std::string>(), j.at("objects").get<int>(),
                                                std::move(arrows),
                                                j.at("compose").get<std::vector<std::vector<int>>>());
}

namespace {

json category_to_json(const Category& c) {
  switch (c.kind()) {
    case CatKind::FinSet:
      return "FinSet";
    case CatKind::Graph:
      return "Gra";
    case CatKind::Unary:
      return "Un";
    case CatKind::Presheaf:
      return {{"presheaf", groupoid_to_json(*c.groupoid())}};
  }
  return nullptr;
}

Category category_from_json(const json& j) {
  if (j.is_object()) return Category::presheaf(groupoid_from_json(j.at("presheaf")));
  const auto s = j.get<std::string>();
  if (s == "FinSet") return Category::finset();
  if (s == "Gra") return Category::graph();
  if (s == "Un") return Category::unary();
  throw PreconditionError("unknown category '" + s + "'");
}

}  // namespace

json to_json(const Obj& x) {
  json ops = json::array();
  for (const auto& op : x.ops) ops.push_back({{"from", op.from}, {"to", op.to}, {"table", op.table}});
  json edges = json::array();
  for (auto [u, v] : x.edges) edges.push_back({u, v});
  return {{"category", category_to_json(x.cat)},
          {"carrier", x.sizes},
          {"structure", {{"ops", ops}, {"edges", edges}}}};
}

Obj obj_from_json(const json& j) {
  Obj x;
  x.cat = category_from_json(j.at("category"));
  x.sizes = j.at("carrier").get<std::vector<int>>();
  const auto& st = j.at("structure");
  for (const auto& op : st.at("ops"))
    x.ops.push_back(UnaryOp{op.at("from").get<int>(), op.at("to").get<int>(), op.at("table").get<std::vector<int>>()});
  for (const auto& e : st.at("edges")) x.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  validate(x);
  return x;
}

json to_json(const Mor& f) {
  return {{"category", category_to_json(f.dom.cat)}, {"dom", to_json(f.dom)}, {"cod", to_json(f.cod)}, {"maps", f.maps}};
}

Mor mor_from_json(const json& j) {
  return make_mor(obj_from_json(j.at("dom")), obj_from_json(j.at("cod")), j.at("maps").get<Maps>());
}

json to_json(const SymbolicObject& s) { return {{"symbolic", s.name()}, {"window", s.window}}; }

SymbolicObject symbolic_from_json(const json& j) {
  const auto name = j.at("symbolic").get<std::string>();
  const int w = j.value("window", kDefaultWindow);
  if (name == "Ray") return ray(w);
  if (name == "LoopRay") return loop_ray(w);
  if (name == "CycleFamily") return cycle_family(w);
  throw PreconditionError("unknown symbolic object '" + name + "'");
}

json to_json(const AnyObject& a) {
  if (const auto* s = std::get_if<SymbolicObject>(&a)) return to_json(*s);
  return to_json(std::get<Obj>(a));
}

AnyObject any_from_json(const json& j) {
  if (j.contains("symbolic")) return symbolic_from_json(j);
  return obj_from_json(j);
}

json to_json(const fqvec::LinMap& f) {
  return {{"category", "FqVec"}, {"q", f.q}, {"dom_dim", f.dom_dim}, {"cod_dim", f.cod_dim}, {"matrix", f.a}};
}

fqvec::LinMap linmap_from_json(const json& j) {
  return fqvec::make_map(j.at("q").get<int>(), j.at("dom_dim").get<int>(), j.at("cod_dim").get<int>(),
                         j.at("matrix").get<fqvec::Matrix>());
}

json to_json(const superfin::Presentation& p) {
  json action = json::array();
  for (int k = 0; k <= p.n(); ++k) {
    json row = json::array();
    for (int kp = 0; kp <= p.n(); ++kp) {
      json maps = json::array();
      for (const auto& g : all_functions(k, kp)) maps.push_back(p.act(k, kp, g));
      row.push_back(maps);
    }
    action.push_back(row);
  }
  return {{"n", p.n()}, {"values", p.values()}, {"action", action}};
}

superfin::Presentation presentation_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const auto values = j.at("values").get<std::vector<int>>();
  const auto action = j.at("action").get<std::vector<std::vector<std::vector<std::vector<int>>>>>();
  require(static_cast<int>(action.size()) == n + 1, "presentation: action has wrong level count");
  for (const auto& row : action) require(static_cast<int>(row.size()) == n + 1, "presentation: action row size");
  return superfin::Presentation::make(n, values, [&](int k, int kp, const FinFn& g) {
    const auto& maps = action[k][kp];
    const std::size_t i = function_index(g, kp);
    require(i < maps.size(), "presentation: missing action table");
    return maps[i];
  });
}

json to_json(const nominal::OrbitSpec& o) { return {{"n", o.n}, {"generators", o.generators}}; }

nominal::OrbitSpec orbit_from_json(const json& j) {
  return nominal::orbit_spec(j.at("n").get<int>(), j.at("generators").get<std::vector<nominal::Perm>>());
}

json to_json(const nominal::NominalSetSpec& x) {
  json orbits = json::array();
  for (const auto& o : x.orbits) orbits.push_back(to_json(o));
  return {{"orbits", orbits}};
}

nominal::NominalSetSpec nominal_set_from_json(const json& j) {
  nominal::NominalSetSpec x;
  for (const auto& o : j.at("orbits")) x.orbits.push_back(orbit_from_json(o));
  return x;
}

json to_json(const nominal::NomElement& e) { return {{"orbit", e.orbit}, {"tuple", e.t}}; }

nominal::NomElement nom_element_from_json(const json& j) {
  return {j.at("orbit").get<int>(), j.at("tuple").get<nominal::Tuple>()};
}

json to_json(const nominal::EquivariantMap& f) {
  json images = json::array();
  for (const auto& e : f.images) images.push_back(to_json(e));
  return {{"dom", to_json(f.dom)}, {"cod", to_json(f.cod)}, {"images", images}};
}

nominal::EquivariantMap equivariant_map_from_json(const json& j) {
  std::vector<nominal::NomElement> images;
  for (const auto& e : j.at("images")) images.push_back(nom_element_from_json(e));
  return nominal::make_map(nominal_set_from_json(j.at("dom")), nominal_set_from_json(j.at("cod")), std::move(images));
}

json to_json(const hausdorff::Q& q) { return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator()); }

hausdorff::Q rational_from_json(const json& j) {
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return hausdorff::Q(std::stoll(s));
    return hausdorff::Q(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw PreconditionError("bad rational '" + s + "'");
  }
}

json to_json(const hausdorff::FinMetricSpace& x) {
  json d = json::array();
  for (int i = 0; i < x.n; ++i) {
    json row = json::array();
    for (int k = 0; k < i; ++k) row.push_back(to_json(x.d[i][k]));
    d.push_back(row);
  }
  return {{"points", x.n}, {"d", d}};
}

hausdorff::FinMetricSpace space_from_json(const json& j) {
  const int n = j.at("points").get<int>();
  const auto& rows = j.at("d");
  require(n >= 0 && static_cast<int>(rows.size()) == n, "space: d must have one row per point");
  std::vector<std::vector<hausdorff::Q>> d(n, std::vector<hausdorff::Q>(n, hausdorff::Q(0)));
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(rows[i].size()) == i, "space: row i of d must have i entries");
    for (int k = 0; k < i; ++k) d[i][k] = d[k][i] = rational_from_json(rows[i][k]);
  }
  return hausdorff::make_space(std::move(d));
}

}  // namespace finbound
