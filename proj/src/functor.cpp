#include "finbound/functor.hpp"

#include <map>

namespace finbound::functor {

using namespace cats;

AnyObject apply(const FunctorHandle& f, const AnyObject& a) {
  if (const auto* s = std::get_if<SymbolicObject>(&a)) {
    require(static_cast<bool>(f.on_symbolic), f.name + " has no value on symbolic objects");
    return f.on_symbolic(*s);
  }
  return f.on_obj(std::get<Obj>(a));
}

Obj apply_finite(const FunctorHandle& f, const AnyObject& a) {
  AnyObject v = apply(f, a);
  if (const auto* s = std::get_if<SymbolicObject>(&v)) return s->window_object();
  return std::get<Obj>(v);
}

Mor apply_mor(const FunctorHandle& f, const Mor& m, const AnyObject& a) {
  if (const auto* s = std::get_if<SymbolicObject>(&a)) {
    require(static_cast<bool>(f.on_symbolic_mor), f.name + " has no morphism action into symbolic objects");
    return f.on_symbolic_mor(m, *s);
  }
  return f.on_mor(m);
}

FunctorHandle identity_functor(const Category& c) {
  FunctorHandle f;
  f.name = "Id";
  f.source = c;
  f.target = c;
  f.on_obj = [](const Obj& x) { return x; };
  f.on_mor = [](const Mor& m) { return m; };
  f.on_symbolic = [](const SymbolicObject& s) -> AnyObject { return s; };
  f.on_symbolic_mor = [](const Mor& m, const SymbolicObject&) { return m; };
  return f;
}

std::optional<int> prime_without_hom(const Obj& x) {
  require(x.cat.kind() == CatKind::Unary, "prime_without_hom needs a unary algebra");
  for (int p = 2;; ++p) {
    if (!is_prime(p)) continue;
    if (!hom_exists(cycle(p), x)) return p;
    if (p > x.total_size()) return std::nullopt;
  }
}

namespace {

/// 1 + f : 1 + X -> 1 + Y, with the point as summand 0.
Mor one_plus(const Obj& one, const Mor& f) {
  const Obj fx = coproduct(f.dom.cat, {one, f.dom}).object;
  const Obj fy = coproduct(f.dom.cat, {one, f.cod}).object;
  Maps m{{0}};
  for (int v : f.maps[0]) m[0].push_back(v + 1);
  return make_mor(fx, fy, std::move(m));
}

/// Shared shape of the two counterexamples: F X = 1 + X when `keep(X)`,
/// else 1; on morphisms 1 + f, or the unique map to 1.
FunctorHandle one_plus_or_one(std::string name, Category c, Obj one, std::function<bool(const Obj&)> keep) {
  FunctorHandle f;
  f.name = std::move(name);
  f.source = c;
  f.target = c;
  f.on_obj = [=](const Obj& x) { return keep(x) ? coproduct(c, {one, x}).object : one; };
  f.on_mor = [=](const Mor& m) {
    if (keep(m.cod)) return one_plus(one, m);
    return to_terminal(keep(m.dom) ? coproduct(c, {one, m.dom}).object : one, one);
  };
  f.on_symbolic_mor = [=](const Mor& m, const SymbolicObject&) {
    return to_terminal(keep(m.dom) ? coproduct(c, {one, m.dom}).object : one, one);
  };
  return f;
}

}  // namespace

FunctorHandle un_counterexample() {
  FunctorHandle f = one_plus_or_one("UnCounterexample", Category::unary(), cycle(1),
                                    [](const Obj& x) { return prime_without_hom(x).has_value(); });
  f.on_symbolic = [](const SymbolicObject& s) -> AnyObject {
    require(s.kind == SymbolicKind::CycleFamily, "UnCounterexample is defined on unary algebras");
    // Every C_p maps onto its own summand.
    return cycle(1);
  };
  return f;
}

FunctorHandle graph_counterexample() {
  FunctorHandle f = one_plus_or_one("GraphCounterexample", Category::graph(), terminal_graph(),
                                    [](const Obj& x) { return !has_directed_cycle(x); });
  f.on_symbolic = [](const SymbolicObject& s) -> AnyObject {
    require(s.kind != SymbolicKind::CycleFamily, "GraphCounterexample is defined on graphs");
    // Both ray kinds contain an infinite path.
    return terminal_graph();
  };
  return f;
}

namespace {

Mor postcompose(const Mor& m, const std::vector<Mor>& from, const std::vector<Mor>& to) {
  std::map<Maps, int> index;
  for (std::size_t i = 0; i < to.size(); ++i) index.emplace(to[i].maps, static_cast<int>(i));
  Maps out{{}};
  for (const Mor& h : from) out[0].push_back(index.at(compose(m, h).maps));
  return make_mor(finset(static_cast<int>(from.size())), finset(static_cast<int>(to.size())), std::move(out));
}

}  // namespace

FunctorHandle un_hom_functor(const Obj& a) {
  require(a.cat.kind() == CatKind::Unary, "un_hom_functor: representing object must be a unary algebra");
  FunctorHandle f;
  f.name = "Un(C" + std::to_string(a.total_size()) + ",-)";
  f.source = Category::unary();
  f.target = Category::finset();
  f.on_obj = [a](const Obj& x) { return finset(static_cast<int>(hom_count(a, x))); };
  f.on_mor = [a](const Mor& m) { return postcompose(m, hom_set(a, m.dom), hom_set(a, m.cod)); };
  f.on_symbolic = [a](const SymbolicObject& s) -> AnyObject {
    auto homs = hom_into(a, s);
    require(!homs.exhausted, "hom-set into the symbolic object is not determined by its window");
    return finset(static_cast<int>(homs.items.size()));
  };
  f.on_symbolic_mor = [a](const Mor& m, const SymbolicObject& s) {
    auto homs = hom_into(a, s);
    require(!homs.exhausted, "hom-set into the symbolic object is not determined by its window");
    return postcompose(m, hom_set(a, m.dom), homs.items);
  };
  return f;
}

std::optional<std::string> check_functor_laws(const FunctorHandle& f, const std::vector<Obj>& objects) {
  for (const Obj& x : objects) {
    if (!(f.on_mor(identity(x)) == identity(f.on_obj(x)))) return "F(id) != id at " + x.cat.name();
  }
  for (const Obj& x : objects)
    for (const Obj& y : objects) {
      const auto fs = hom_set(x, y);
      if (fs.empty()) continue;
      for (const Obj& z : objects) {
        const auto gs = hom_set(y, z);
        for (const Mor& a : fs)
          for (const Mor& b : gs) {
            const Mor lhs = f.on_mor(compose(b, a));
            const Mor rhs = compose(f.on_mor(b), f.on_mor(a));
            if (!(lhs == rhs)) return "F(g.f) != F(g).F(f)";
          }
      }
    }
  return std::nullopt;
}

BoundednessWitness finitely_bounded_witness(const FunctorHandle& f, const AnyObject& a, const Mor& m0, int bound) {
  const Obj fa = apply_finite(f, a);
  require(m0.cod == fa, "m0 must land in F(A)");
  require(is_mono(m0), "m0 must be a mono");
  BoundednessWitness w{m0, std::nullopt, std::nullopt, bound, 0};
  std::vector<Mor> candidates;
  if (const auto* s = std::get_if<SymbolicObject>(&a))
    candidates = subobjects_fg(*s, bound).items;
  else
    candidates = subobjects(std::get<Obj>(a), bound);
  for (const Mor& m : candidates) {
    ++w.candidates_tried;
    const Mor fm = apply_mor(f, m, a);
    for (const Mor& g : hom_set(m0.dom, fm.dom)) {
      if (compose(fm, g) == m0) {
        w.m = m;
        w.mediating = g;
        return w;
      }
    }
  }
  return w;
}

bool verify(const FunctorHandle& f, const AnyObject& a, const BoundednessWitness& w) {
  if (!w.found()) return false;
  return compose(apply_mor(f, *w.m, a), *w.mediating) == w.m0;
}

namespace {

/// x != y in F(D_j) merged by F(c_j) but kept apart by F(D_j -> D_last).
std::optional<std::tuple<int, int, int>> merge_obstruction(const FunctorHandle& f, const Cocone& c, int j) {
  const int last = static_cast<int>(c.chain.objects.size()) - 1;
  const Mor phi = apply_mor(f, c.legs[j], c.apex);
  const Mor forward = f.on_mor(chain_map(c.chain, j, last));
  for (int s = 0; s < phi.dom.sort_count(); ++s)
    for (int x = 0; x < phi.dom.sizes[s]; ++x)
      for (int y = x + 1; y < phi.dom.sizes[s]; ++y)
        if (phi.maps[s][x] == phi.maps[s][y] && forward.maps[s][x] != forward.maps[s][y])
          return std::make_tuple(s, x, y);
  return std::nullopt;
}

}  // namespace

FinitarityCertificate finitarity_certificate(const FunctorHandle& f, const Cocone& c, int k) {
  require(k >= 1 && k < static_cast<int>(c.chain.objects.size()), "finitarity_certificate: chain needs k+1 objects");
  FinitarityCertificate cert;
  cert.functor = f.name;
  cert.chain = object_name(c.chain.objects.front()) + " -> ... -> " + object_name(c.apex);
  cert.prefix_k = k;
  cert.lhs_size = f.on_obj(c.chain.objects[k - 1]).total_size();
  AnyObject rhs = apply(f, c.apex);
  if (const auto* o = std::get_if<Obj>(&rhs)) cert.rhs_size = o->total_size();
  cert.merged = merge_obstruction(f, c, k - 1);
  cert.persists = merge_obstruction(f, c, k).has_value();
  if (!cert.merged)
    cert.verdict = colimit::Verdict::PassProbeLimited;
  else
    cert.verdict = cert.persists ? colimit::Verdict::FailCertified : colimit::Verdict::Exhausted;
  return cert;
}

}  // namespace finbound::functor
