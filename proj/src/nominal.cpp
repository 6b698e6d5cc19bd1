#include "finbound/nominal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace finbound::nominal {

// ---------------------------------------------------------------- permutations

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  require(p.size() == q.size(), "perm_compose: size mismatch");
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> closure(int n, const std::vector<Perm>& gens) {
  std::set<Perm> seen{perm_identity(n)};
  std::vector<Perm> todo{perm_identity(n)};
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const Perm& g : gens) {
      require(static_cast<int>(g.size()) == n, "closure: generator of the wrong size");
      Perm q = perm_compose(g, p);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

Perm transposition(int pool, int a, int b) {
  Perm p = perm_identity(pool);
  std::swap(p[a], p[b]);
  return p;
}

namespace {

/// Subgroups as index sets into all_perms(n), grown one generator at a time.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(int n) : perms_(all_perms(n)) {
    require(n >= 0 && n <= 5, "subgroups_of_Sn: n must be in 0..5");
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < perms_.size(); ++i) index[perms_[i]] = static_cast<int>(i);
    const int m = static_cast<int>(perms_.size());
    mult_.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) mult_[a][b] = index[perm_compose(perms_[a], perms_[b])];
  }

  struct Group {
    std::vector<char> mask;
    std::vector<int> gens;
  };

  int order() const { return static_cast<int>(perms_.size()); }

  Group trivial() const {
    Group g{std::vector<char>(order(), 0), {}};
    g.mask[0] = 1;
    return g;
  }

  Group extend(const Group& h, int g) const {
    Group out{std::vector<char>(order(), 0), h.gens};
    out.gens.push_back(g);
    std::vector<int> todo{0};
    out.mask[0] = 1;
    while (!todo.empty()) {
      int p = todo.back();
      todo.pop_back();
      for (int s : out.gens) {
        int q = mult_[s][p];
        if (!out.mask[q]) {
          out.mask[q] = 1;
          todo.push_back(q);
        }
      }
    }
    return out;
  }

  std::vector<Perm> elements(const Group& g) const {
    std::vector<Perm> out;
    for (int i = 0; i < order(); ++i)
      if (g.mask[i]) out.push_back(perms_[i]);
    return out;
  }

 private:
  std::vector<Perm> perms_;
  std::vector<std::vector<int>> mult_;
};

std::vector<std::vector<Perm>> finish(const SubgroupLattice& lat, const std::map<std::vector<char>, SubgroupLattice::Group>& all) {
  std::vector<std::vector<Perm>> out;
  for (const auto& [mask, g] : all) out.push_back(lat.elements(g));
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  return out;
}

}  // namespace

namespace serial {
std::vector<std::vector<Perm>> subgroups_of_Sn(int n) {
  SubgroupLattice lat(n);
  std::map<std::vector<char>, SubgroupLattice::Group> all;
  auto t = lat.trivial();
  all.emplace(t.mask, t);
  std::vector<SubgroupLattice::Group> frontier{t};
  while (!frontier.empty()) {
    std::vector<SubgroupLattice::Group> next;
    for (const auto& h : frontier)
      for (int g = 0; g < lat.order(); ++g) {
        if (h.mask[g]) continue;
        auto k = lat.extend(h, g);
        if (all.emplace(k.mask, k).second) next.push_back(k);
      }
    frontier = std::move(next);
  }
  return finish(lat, all);
}
}  // namespace serial

std::vector<std::vector<Perm>> subgroups_of_Sn(int n) {
  SubgroupLattice lat(n);
  std::map<std::vector<char>, SubgroupLattice::Group> all;
  auto t = lat.trivial();
  all.emplace(t.mask, t);
  std::vector<SubgroupLattice::Group> frontier{t};
  while (!frontier.empty()) {
    std::vector<std::vector<SubgroupLattice::Group>> found(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (int g = 0; g < lat.order(); ++g)
        if (!frontier[i].mask[g]) found[i].push_back(lat.extend(frontier[i], g));
    std::vector<SubgroupLattice::Group> next;
    for (auto& part : found)
      for (auto& k : part)
        if (all.emplace(k.mask, k).second) next.push_back(std::move(k));
    frontier = std::move(next);
  }
  return finish(lat, all);
}

// ---------------------------------------------------------------- orbits and elements

OrbitSpec orbit_spec(int n, std::vector<Perm> generators) {
  require(n >= 0, "negative support size");
  for (const Perm& g : generators) {
    require(static_cast<int>(g.size()) == n, "generator of the wrong size");
    std::vector<int> s(g.begin(), g.end());
    std::sort(s.begin(), s.end());
    require(s == perm_identity(n), "generator is not a permutation");
  }
  OrbitSpec o;
  o.n = n;
  o.group = closure(n, generators);
  o.generators = std::move(generators);
  return o;
}

OrbitSpec orbit_from_group(int n, const std::vector<Perm>& group) {
  std::vector<Perm> gens;
  std::vector<Perm> span = closure(n, {});
  for (const Perm& p : group)
    if (!std::binary_search(span.begin(), span.end(), p)) {
      gens.push_back(p);
      span = closure(n, gens);
    }
  OrbitSpec o = orbit_spec(n, gens);
  std::vector<Perm> sorted = group;
  std::sort(sorted.begin(), sorted.end());
  require(o.group == sorted, "orbit_from_group: the list is not a subgroup");
  return o;
}

OrbitSpec pn_orbit(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
  return orbit_spec(n, gens);
}

OrbitSpec tuples_orbit(int n) { return orbit_spec(n, {}); }

namespace {
bool is_full_symmetric(const OrbitSpec& o) {
  std::size_t fact = 1;
  for (int i = 2; i <= o.n; ++i) fact *= static_cast<std::size_t>(i);
  return o.group.size() == fact;
}
}  // namespace

Tuple canonical(const OrbitSpec& o, const Tuple& t) {
  require(static_cast<int>(t.size()) == o.n, "tuple length differs from the orbit's support size");
  if (is_full_symmetric(o)) {
    Tuple sorted = t;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  }
  Tuple best = t;
  Tuple cur(t.size());
  for (const Perm& s : o.group) {
    for (int i = 0; i < o.n; ++i) cur[i] = t[s[i]];
    if (cur < best) best = cur;
  }
  return best;
}

NominalSetSpec one_point() { return NominalSetSpec{{orbit_spec(0, {})}}; }

NominalSetSpec p_sum(const std::vector<int>& ns) {
  NominalSetSpec x;
  for (int n : ns) x.orbits.push_back(pn_orbit(n));
  return x;
}

NominalSetSpec single(const OrbitSpec& o) { return NominalSetSpec{{o}}; }

NominalSetSpec coproduct(const NominalSetSpec& a, const NominalSetSpec& b) {
  NominalSetSpec x = a;
  x.orbits.insert(x.orbits.end(), b.orbits.begin(), b.orbits.end());
  return x;
}

int max_support(const NominalSetSpec& x) {
  int m = 0;
  for (const auto& o : x.orbits) m = std::max(m, o.n);
  return m;
}

std::vector<int> support(const NomElement& x) {
  std::vector<int> s = x.t;
  std::sort(s.begin(), s.end());
  return s;
}

NomElement make_element(const NominalSetSpec& x, int orbit, const Tuple& t) {
  require(orbit >= 0 && orbit < static_cast<int>(x.orbits.size()), "orbit index out of range");
  std::set<int> names(t.begin(), t.end());
  require(names.size() == t.size() && (t.empty() || *names.begin() >= 0), "tuple must be injective");
  return NomElement{orbit, canonical(x.orbits[orbit], t)};
}

NomElement act(const NominalSetSpec& x, const Perm& pi, const NomElement& e) {
  Tuple t(e.t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    require(e.t[i] < static_cast<int>(pi.size()), "permutation does not cover the support");
    t[i] = pi[e.t[i]];
  }
  return NomElement{e.orbit, canonical(x.orbits[e.orbit], t)};
}

NomElement representative(const NominalSetSpec& x, int orbit) {
  return make_element(x, orbit, perm_identity(x.orbits.at(orbit).n));
}

namespace {

/// Injective tuples n -> pool in lexicographic order.
std::vector<Tuple> injective_tuples(int n, int pool) {
  std::vector<Tuple> out;
  if (n > pool) return out;
  Tuple t(n);
  std::vector<char> used(pool, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(t);
      return;
    }
    for (int v = 0; v < pool; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      t[i] = v;
      self(self, i + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

bool valid_element(const NominalSetSpec& x, const NomElement& e) {
  if (e.orbit < 0 || e.orbit >= static_cast<int>(x.orbits.size())) return false;
  if (static_cast<int>(e.t.size()) != x.orbits[e.orbit].n) return false;
  std::set<int> names(e.t.begin(), e.t.end());
  if (names.size() != e.t.size()) return false;
  return canonical(x.orbits[e.orbit], e.t) == e.t;
}

}  // namespace

std::vector<NomElement> elements(const NominalSetSpec& x, int pool) {
  std::set<NomElement> out;
  for (int i = 0; i < static_cast<int>(x.orbits.size()); ++i) {
    const int n = x.orbits[i].n;
    if (is_full_symmetric(x.orbits[i])) {
      // Name sets: increasing tuples.
      if (n > pool) continue;
      Tuple t(n);
      std::iota(t.begin(), t.end(), 0);
      while (true) {
        out.insert(NomElement{i, t});
        int k = n - 1;
        while (k >= 0 && t[k] == pool - n + k) --k;
        if (k < 0) break;
        ++t[k];
        for (int j = k + 1; j < n; ++j) t[j] = t[j - 1] + 1;
      }
      continue;
    }
    for (const Tuple& t : injective_tuples(n, pool)) out.insert(NomElement{i, canonical(x.orbits[i], t)});
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------- equivariant maps

int required_pool(const NominalSetSpec& dom, const NominalSetSpec& cod) {
  return 2 * std::max(max_support(dom), max_support(cod)) + 2;
}

bool equivariant_map_check(const NominalSetSpec& dom, const NominalSetSpec& cod, const ElementMap& f, int pool) {
  require(pool >= required_pool(dom, cod), "name pool too small to decide equivariance");
  for (const NomElement& x : elements(dom, pool)) {
    const NomElement y = f(x);
    if (!valid_element(cod, y)) return false;
    for (int v : y.t)
      if (v >= pool) return false;
    for (int a = 0; a < pool; ++a)
      for (int b = a + 1; b < pool; ++b) {
        Perm tau = transposition(pool, a, b);
        if (f(act(dom, tau, x)) != act(cod, tau, y)) return false;
      }
  }
  return true;
}

NomElement EquivariantMap::operator()(const NomElement& x) const {
  const NomElement& y = images.at(x.orbit);
  Tuple t(y.t.size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = x.t[y.t[k]];
  return NomElement{y.orbit, canonical(cod.orbits[y.orbit], t)};
}

ElementMap EquivariantMap::as_function() const {
  return [m = *this](const NomElement& x) { return m(x); };
}

std::vector<NomElement> admissible_images(const OrbitSpec& o, const NominalSetSpec& cod) {
  std::vector<NomElement> out;
  for (int j = 0; j < static_cast<int>(cod.orbits.size()); ++j) {
    const OrbitSpec& c = cod.orbits[j];
    if (c.n > o.n) continue;
    std::set<Tuple> seen;
    for (const Tuple& u : injective_tuples(c.n, o.n)) {
      Tuple cu = canonical(c, u);
      if (!seen.insert(cu).second) continue;
      bool fixed = true;
      for (const Perm& s : o.generators) {
        Tuple su(cu.size());
        for (std::size_t i = 0; i < su.size(); ++i) su[i] = s[cu[i]];
        if (canonical(c, su) != cu) {
          fixed = false;
          break;
        }
      }
      if (fixed) out.push_back(NomElement{j, cu});
    }
  }
  return out;
}

EquivariantMap make_map(NominalSetSpec dom, NominalSetSpec cod, std::vector<NomElement> images) {
  require(images.size() == dom.orbits.size(), "make_map: one image per orbit");
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto ok = admissible_images(dom.orbits[i], cod);
    require(std::find(ok.begin(), ok.end(), images[i]) != ok.end(),
            "make_map: image of orbit " + std::to_string(i) + " does not define an equivariant map");
  }
  return EquivariantMap{std::move(dom), std::move(cod), std::move(images)};
}

EquivariantMap identity_map(const NominalSetSpec& x) {
  std::vector<NomElement> images;
  for (int i = 0; i < static_cast<int>(x.orbits.size()); ++i) images.push_back(representative(x, i));
  return EquivariantMap{x, x, images};
}

EquivariantMap compose(const EquivariantMap& g, const EquivariantMap& f) {
  require(f.cod == g.dom, "compose: codomain/domain mismatch");
  std::vector<NomElement> images;
  for (const auto& y : f.images) images.push_back(g(y));
  return EquivariantMap{f.dom, g.cod, images};
}

std::vector<EquivariantMap> equivariant_maps(const NominalSetSpec& dom, const NominalSetSpec& cod) {
  std::vector<std::vector<NomElement>> choices;
  for (const auto& o : dom.orbits) choices.push_back(admissible_images(o, cod));
  std::vector<EquivariantMap> out;
  std::vector<NomElement> cur(dom.orbits.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == choices.size()) {
      out.push_back(EquivariantMap{dom, cod, cur});
      return;
    }
    for (const auto& y : choices[i]) {
      cur[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool hom_exists_Pn(int n, const NominalSetSpec& x) {
  require(n >= 0, "negative n");
  const OrbitSpec p = pn_orbit(n);
  auto cands = admissible_images(p, x);
  if (cands.empty()) return false;
  EquivariantMap m{single(p), x, {cands.front()}};
  const int pool = std::max(2 * n + 2, required_pool(m.dom, x));
  require(equivariant_map_check(m.dom, x, m.as_function(), pool), "admissible image failed the equivariance check");
  return true;
}

std::optional<EquivariantMap> orbit_isomorphism(const OrbitSpec& a, const OrbitSpec& b) {
  if (a.n != b.n || a.group.size() != b.group.size()) return std::nullopt;
  const NominalSetSpec da = single(a), db = single(b);
  // Elements over exactly n names: a bijection must match them one to one.
  const auto ea = elements(da, a.n);
  const auto eb = elements(db, b.n);
  if (ea.size() != eb.size()) return std::nullopt;
  for (const auto& y : admissible_images(a, db)) {
    EquivariantMap m{da, db, {y}};
    std::set<NomElement> img;
    for (const auto& e : ea) img.insert(m(e));
    if (img.size() != ea.size()) continue;
    // Confirm on the full pool.
    const int pool = 2 * a.n + 2;
    const auto fa = elements(da, pool);
    std::set<NomElement> full;
    for (const auto& e : fa) full.insert(m(e));
    if (full.size() == fa.size() && full.size() == elements(db, pool).size()) return m;
  }
  return std::nullopt;
}

bool orbits_isomorphic(const OrbitSpec& a, const OrbitSpec& b) { return orbit_isomorphism(a, b).has_value(); }

std::vector<OrbitSpec> single_orbit_enumerate(int n) {
  require(n >= 0 && n <= 4, "single_orbit_enumerate: n must be in 0..4");
  std::vector<OrbitSpec> out;
  for (const auto& s : subgroups_of_Sn(n)) {
    OrbitSpec o = orbit_from_group(n, s);
    if (std::none_of(out.begin(), out.end(), [&](const OrbitSpec& p) { return orbits_isomorphic(p, o); }))
      out.push_back(std::move(o));
  }
  return out;
}

// ---------------------------------------------------------------- quotients and subgroups

std::vector<Perm> subgroup_from_quotient(int n, const TupleEquivalence& eq) {
  require(n >= 0 && n <= 4, "subgroup_from_quotient: n must be in 0..4");
  const int pool = 2 * n + 2;
  const auto ts = injective_tuples(n, pool);
  const int m = static_cast<int>(ts.size());
  // Class labels against earlier representatives, then a full consistency pass.
  std::vector<int> label(m, -1), reps;
  for (int i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < reps.size() && label[i] < 0; ++r)
      if (eq(ts[reps[r]], ts[i])) label[i] = static_cast<int>(r);
    if (label[i] < 0) {
      label[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  std::map<Tuple, int> index;
  for (int i = 0; i < m; ++i) index[ts[i]] = i;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const bool same = label[i] == label[j];
      if (eq(ts[i], ts[j]) != same) throw PreconditionError("relation is not an equivalence");
      if (!same) continue;
      if (support(NomElement{0, ts[i]}) != support(NomElement{0, ts[j]}))
        throw PreconditionError("equivalence does not preserve supports");
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (label[i] != label[j]) continue;
      for (int a = 0; a < pool; ++a)
        for (int b = a + 1; b < pool; ++b) {
          Perm tau = transposition(pool, a, b);
          Tuple ti(n), tj(n);
          for (int k = 0; k < n; ++k) {
            ti[k] = tau[ts[i][k]];
            tj[k] = tau[ts[j][k]];
          }
          if (label[index[ti]] != label[index[tj]]) throw PreconditionError("equivalence is not equivariant");
        }
    }
  const Tuple t0 = perm_identity(n);
  std::vector<Perm> s;
  for (const Perm& sigma : all_perms(n)) {
    Tuple ts0(n);
    for (int k = 0; k < n; ++k) ts0[k] = t0[sigma[k]];
    if (eq(ts0, t0)) s.push_back(sigma);
  }
  require(closure(n, s) == s, "stabilizer is not a subgroup");
  return s;
}

TupleEquivalence equivalence_from_subgroup(const std::vector<Perm>& s) {
  return [s](const Tuple& t, const Tuple& u) {
    if (t.size() != u.size()) return false;
    for (const Perm& sigma : s) {
      bool match = sigma.size() == t.size();
      for (std::size_t k = 0; k < t.size() && match; ++k) match = u[k] == t[sigma[k]];
      if (match) return true;
    }
    return false;
  };
}

// ---------------------------------------------------------------- counterexample functor

NomCounterexample nom_counterexample(const NominalSetSpec& x, int bound) {
  require(bound >= 1, "search bound must be positive");
  NomCounterexample r;
  r.x = x;
  r.search_bound = bound;
  for (int n = 1; n <= bound; ++n)
    if (!hom_exists_Pn(n, x)) {
      r.missing_n = n;
      break;
    }
  r.value = r.missing_n ? coproduct(one_point(), x) : one_point();
  const bool equivariant_point =
      std::any_of(x.orbits.begin(), x.orbits.end(), [](const OrbitSpec& o) { return o.n == 0; });
  if (r.missing_n)
    r.disclaimer = "Nom(P_" + std::to_string(*r.missing_n) + ", X) is empty";
  else if (equivariant_point)
    r.disclaimer = "X has an element with empty support, so every P_n maps into X";
  else if (bound > max_support(x))
    r.disclaimer = "searched n <= " + std::to_string(bound);
  else
    r.disclaimer = "searched n <= " + std::to_string(bound) + " only; larger n not examined";
  return r;
}

EquivariantMap nom_counterexample_map(const EquivariantMap& f, int bound) {
  const auto fx = nom_counterexample(f.dom, bound);
  const auto fy = nom_counterexample(f.cod, bound);
  if (!fy.missing_n) {
    std::vector<NomElement> images(fx.value.orbits.size(), NomElement{0, {}});
    return EquivariantMap{fx.value, fy.value, images};
  }
  require(fx.missing_n.has_value(), "F X = 1 while F Y = 1 + Y: the search bound is too small");
  std::vector<NomElement> images{NomElement{0, {}}};
  for (const auto& y : f.images) images.push_back(NomElement{y.orbit + 1, y.t});
  return EquivariantMap{fx.value, fy.value, images};
}

// ---------------------------------------------------------------- rigidity

RigidityReport support_rigidity_check(const EquivariantMap& f, int pool) {
  require(f.dom == f.cod, "support_rigidity_check expects an endomorphism");
  require(equivariant_map_check(f.dom, f.cod, f.as_function(), pool), "candidate is not equivariant");
  RigidityReport r;
  r.pool = pool;
  r.rigid = true;
  for (const NomElement& y : elements(f.dom, pool)) {
    ++r.elements_checked;
    const NomElement fy = f(y);
    const auto sy = support(y);
    const auto sf = support(fy);
    if (sf != sy) r.rigid = false;
    for (int v : sf)
      for (int w : sy) {
        if (v == w) continue;
        Perm tau = transposition(pool, v, w);
        // tau fixes Y, so it fixes f(Y) and its support.
        const bool step = act(f.dom, tau, y) == y && f(act(f.dom, tau, y)) == act(f.cod, tau, fy) &&
                          std::binary_search(sf.begin(), sf.end(), w);
        if (!step) r.rigid = false;
        ++r.transposition_steps;
      }
  }
  return r;
}

RigiditySweep rigidity_sweep(int k, int pool) {
  require(k >= 1 && k <= 4, "rigidity_sweep: k must be in 1..4");
  std::vector<int> ns(k);
  std::iota(ns.begin(), ns.end(), 1);
  const NominalSetSpec a = p_sum(ns);
  RigiditySweep s;
  s.k = k;
  s.all_rigid = true;
  for (const auto& f : equivariant_maps(a, a)) {
    ++s.candidates;
    s.reports.push_back(support_rigidity_check(f, pool));
    s.all_rigid = s.all_rigid && s.reports.back().rigid;
  }
  return s;
}

// ---------------------------------------------------------------- countable strictness

bool CountableStrictnessWitness::holds() const {
  return bprime.cod == b.cod && f.dom == b.cod && f.cod == bprime.dom && compose(bprime, compose(f, b)) == b;
}

CountableStrictnessWitness countable_strictness_witness(const EquivariantMap& b) {
  const NominalSetSpec& a = b.cod;
  const int k = static_cast<int>(a.orbits.size());
  std::vector<char> in_image(k, 0);
  for (const auto& y : b.images) in_image[y.orbit] = 1;
  // fold[i] = (orbit of A it is folded onto, isomorphism) for orbits outside B'.
  std::vector<std::optional<EquivariantMap>> fold(k);
  std::vector<int> chosen;  // C_1
  for (int i = 0; i < k; ++i) {
    if (in_image[i]) continue;
    for (int c : chosen)
      if (auto iso = orbit_isomorphism(a.orbits[i], a.orbits[c])) {
        fold[i] = EquivariantMap{iso->dom, iso->cod, {NomElement{c, iso->images[0].t}}};
        break;
      }
    if (!fold[i]) chosen.push_back(i);
  }
  std::vector<int> kept;
  for (int i = 0; i < k; ++i)
    if (in_image[i] || std::find(chosen.begin(), chosen.end(), i) != chosen.end()) kept.push_back(i);
  NominalSetSpec bp;
  std::vector<int> pos(k, -1);
  for (int i : kept) {
    pos[i] = static_cast<int>(bp.orbits.size());
    bp.orbits.push_back(a.orbits[i]);
  }
  std::vector<NomElement> bprime_images;
  for (int i : kept) bprime_images.push_back(representative(a, i));
  std::vector<NomElement> f_images;
  for (int i = 0; i < k; ++i) {
    if (pos[i] >= 0) {
      f_images.push_back(representative(bp, pos[i]));
    } else {
      const NomElement& y = fold[i]->images[0];
      f_images.push_back(NomElement{pos[y.orbit], y.t});
    }
  }
  return CountableStrictnessWitness{b, make_map(bp, a, bprime_images), make_map(a, bp, f_images)};
}

// ---------------------------------------------------------------- finitarity on the P-chain

namespace {

NominalSetSpec chain_object(int k) {
  std::vector<int> ns(k);
  std::iota(ns.begin(), ns.end(), 1);
  return p_sum(ns);
}

EquivariantMap chain_link(int k) {
  const NominalSetSpec d = chain_object(k), e = chain_object(k + 1);
  std::vector<NomElement> images;
  for (int i = 0; i < k; ++i) images.push_back(representative(e, i));
  return make_map(d, e, images);
}

/// F(D_k) keeps the point apart from P_1 along F(D_k -> D_{k+1}).
bool point_kept_apart(int k) {
  EquivariantMap link = nom_counterexample_map(chain_link(k), k + 2);
  return link(NomElement{0, {}}) != link(representative(link.dom, 1));
}

}  // namespace

NomFinitarityCertificate nom_finitarity_certificate(int k) {
  require(k >= 1 && k <= 4, "nom_finitarity_certificate: k must be in 1..4");
  NomFinitarityCertificate c;
  c.k = k;
  c.lhs_orbits = static_cast<int>(nom_counterexample(chain_object(k), k + 1).value.orbits.size());
  // Every P_n is a summand of the colimit, so F(colim) = 1.
  for (int n = 1; n <= k + 1; ++n)
    if (hom_exists_Pn(n, chain_object(n))) c.homs_into_colimit.push_back(n);
  const bool rhs_point = static_cast<int>(c.homs_into_colimit.size()) == k + 1;
  c.rhs_orbits = rhs_point ? 1 : -1;
  const bool merged_now = rhs_point && c.lhs_orbits > 1 && point_kept_apart(k);
  c.persists = merged_now && point_kept_apart(k + 1);
  if (merged_now) c.verdict = c.persists ? colimit::Verdict::FailCertified : colimit::Verdict::Exhausted;
  return c;
}

}  // namespace finbound::nominal
