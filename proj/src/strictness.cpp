#include "finbound/strictness.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace finbound::strictness {

using namespace cats;

bool FinitaryMorWitness::holds() const {
  return v.dom == u.dom && w.cod == u.cod && v.cod == w.dom && compose(w, v).maps == u.maps;
}

// ---------------------------------------------------------------- symbolic endos

int SymbolicEndo::operator()(int vertex) const {
  switch (kind) {
    case SymbolicEndoKind::Identity:
      return vertex;
    case SymbolicEndoKind::Shift:
      if (a.kind == SymbolicKind::LoopRay && vertex == 0) return 0;
      return vertex + 1;
    case SymbolicEndoKind::Constant:
      return 0;
  }
  return vertex;
}

std::string SymbolicEndo::name() const {
  switch (kind) {
    case SymbolicEndoKind::Identity:
      return "id(" + a.name() + ")";
    case SymbolicEndoKind::Shift:
      return "shift(" + a.name() + ")";
    case SymbolicEndoKind::Constant:
      return "const0(" + a.name() + ")";
  }
  return "";
}

Mor SymbolicEndo::restrict_to_window() const {
  require(a.kind != SymbolicKind::CycleFamily, "symbolic endos are defined on Ray and LoopRay");
  require(kind != SymbolicEndoKind::Constant || a.kind == SymbolicKind::LoopRay,
          "the constant endo needs the loop vertex");
  require(a.window >= 2, "window too small to restrict");
  Obj dom = SymbolicObject{a.kind, a.window - 1}.window_object();
  Obj cod = a.window_object();
  std::vector<int> t(dom.size());
  for (int v = 0; v < dom.size(); ++v) t[v] = (*this)(v);
  return make_mor(dom, cod, {t});
}

bool RayAdvanceCertificate::holds() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const RayAdvanceRow& r) {
    return r.all_advance_by_one && r.homs_in_window > 0;
  });
}

RayAdvanceCertificate ray_advance_certificate(int max_k, int window) {
  require(max_k >= 1 && window > max_k, "ray certificate needs 1 <= max_k < window");
  RayAdvanceCertificate cert;
  cert.window = window;
  for (int k = 1; k <= max_k; ++k) {
    RayAdvanceRow row;
    row.k = k;
    auto homs = hom_into(path(k), ray(window));
    row.homs_in_window = homs.items.size();
    row.all_advance_by_one = std::all_of(homs.items.begin(), homs.items.end(), [](const Mor& m) {
      for (std::size_t i = 1; i < m.maps[0].size(); ++i)
        if (m.maps[0][i] != m.maps[0][i - 1] + 1) return false;
      return true;
    });
    cert.rows.push_back(row);
  }
  return cert;
}

// ---------------------------------------------------------------- finitary morphisms

FinitaryMorResult finitary_morphism_witness(const Mor& u, int bound) {
  FinitaryMorResult res;
  Factorization f = factorize(u);
  if (f.epi.cod.total_size() <= bound)
    res.witness = FinitaryMorWitness{u, f.epi, f.mono};
  else
    res.exhausted = true;
  return res;
}

FinitaryMorResult finitary_morphism_witness(const SymbolicEndo& u, int bound) {
  FinitaryMorResult res;
  Mor r = u.restrict_to_window();
  if (u.kind == SymbolicEndoKind::Constant && bound >= 1) {
    Obj c = terminal_graph();
    res.witness = FinitaryMorWitness{r, to_terminal(r.dom, c), make_mor(c, r.cod, {{0}})};
    return res;
  }
  res.exhausted = true;
  if (u.kind != SymbolicEndoKind::Constant) res.certificate = ray_advance_certificate(8, std::max(u.a.window, 9));
  return res;
}

// ---------------------------------------------------------------- strictness

bool StrictnessWitness::holds() const {
  return bprime.cod == b.cod && f.dom == b.cod && f.cod == bprime.dom &&
         compose(bprime, compose(f, b)).maps == b.maps;
}

namespace {

int position(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

std::vector<std::vector<char>> image_mask(const Mor& b) {
  std::vector<std::vector<char>> in(b.cod.sort_count());
  for (int s = 0; s < b.cod.sort_count(); ++s) {
    in[s].assign(b.cod.sizes[s], 0);
    for (int v : b.maps[s]) in[s][v] = 1;
  }
  return in;
}

StrictnessResult finset_split(const Mor& b, int bound) {
  StrictnessResult res;
  const Obj& a = b.cod;
  std::vector<int> im = b.maps[0];
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  std::string how = "image-retraction";
  if (im.empty() && a.size() > 0) {
    im = {0};
    how = "point";
  }
  const int k = static_cast<int>(im.size());
  if (k > bound) {
    res.exhausted = true;
    return res;
  }
  Obj bp = finset(k);
  std::vector<int> f(a.size());
  for (int x = 0; x < a.size(); ++x) f[x] = std::max(position(im, x), 0);
  res.witness = StrictnessWitness{b, make_mor(bp, a, {im}), make_mor(a, bp, {f}), how};
  return res;
}

/// Orbits of a presheaf on a groupoid, as element lists per sort.
std::vector<std::vector<std::vector<int>>> orbits(const Obj& a) {
  DisjointSet uf(a.total_size());
  for (const auto& op : a.ops)
    for (int i = 0; i < a.sizes[op.from]; ++i) uf.unite(a.offset(op.from) + i, a.offset(op.to) + op.table[i]);
  std::map<int, int> index;
  std::vector<std::vector<std::vector<int>>> out;
  for (int s = 0; s < a.sort_count(); ++s)
    for (int i = 0; i < a.sizes[s]; ++i) {
      auto [it, fresh] = index.emplace(uf.find(a.offset(s) + i), static_cast<int>(out.size()));
      if (fresh) out.emplace_back(a.sort_count());
      out[it->second][s].push_back(i);
    }
  return out;
}

StrictnessResult presheaf_fold(const Mor& b, int bound) {
  StrictnessResult res;
  const Obj& a = b.cod;
  const auto in = image_mask(b);
  const auto orbs = orbits(a);
  std::vector<int> kept;                // orbit indices forming B'
  std::vector<std::optional<Mor>> via(orbs.size());  // fold hom for dropped orbits
  std::vector<Mor> orbit_sub;
  for (const auto& o : orbs) orbit_sub.push_back(subobject(a, o));
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    bool meets = false;
    for (int s = 0; s < a.sort_count(); ++s)
      for (int x : orbs[i][s]) meets |= in[s][x] != 0;
    if (meets) kept.push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    if (std::find(kept.begin(), kept.end(), static_cast<int>(i)) != kept.end()) continue;
    for (int j : kept) {
      auto homs = hom_set(orbit_sub[i].dom, orbit_sub[j].dom);
      if (!homs.empty()) {
        via[i] = compose(orbit_sub[j], homs.front());
        break;
      }
    }
    if (!via[i]) kept.push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> elems(a.sort_count());
  for (int j : kept)
    for (int s = 0; s < a.sort_count(); ++s) elems[s].insert(elems[s].end(), orbs[j][s].begin(), orbs[j][s].end());
  for (auto& e : elems) std::sort(e.begin(), e.end());
  Mor bp = subobject(a, elems);
  if (bp.dom.total_size() > bound) {
    res.exhausted = true;
    return res;
  }
  Maps f(a.sort_count());
  for (int s = 0; s < a.sort_count(); ++s) f[s].assign(a.sizes[s], -1);
  for (std::size_t i = 0; i < orbs.size(); ++i)
    for (int s = 0; s < a.sort_count(); ++s)
      for (std::size_t k = 0; k < orbs[i][s].size(); ++k) {
        const int x = orbs[i][s][k];
        const int target = via[i] ? via[i]->maps[s][k] : x;
        f[s][x] = position(bp.maps[s], target);
      }
  res.witness = StrictnessWitness{b, bp, make_mor(a, bp.dom, f), "orbit-fold"};
  return res;
}

StrictnessResult retract_search(const Mor& b, int bound) {
  StrictnessResult res;
  const Obj& a = b.cod;
  if (a.total_size() > 24) {
    res.exhausted = true;
    return res;
  }
  const auto in = image_mask(b);
  for (const Mor& s : subobjects(a, std::min(bound, a.total_size()))) {
    Maps partial(a.sort_count());
    bool contains = true;
    for (int so = 0; so < a.sort_count() && contains; ++so) {
      partial[so].assign(a.sizes[so], -1);
      for (int x = 0; x < a.sizes[so]; ++x) {
        if (!in[so][x]) continue;
        const int p = position(s.maps[so], x);
        if (p < 0) {
          contains = false;
          break;
        }
        partial[so][x] = p;
      }
    }
    if (!contains) continue;
    if (auto f = find_extension(a, s.dom, partial)) {
      res.witness = StrictnessWitness{b, s, *f, "retract-search"};
      return res;
    }
  }
  res.exhausted = true;
  return res;
}

}  // namespace

StrictnessResult strictness_witness(const Mor& b, int bound) {
  require(bound >= 0, "negative bound");
  switch (b.cod.cat.kind()) {
    case CatKind::FinSet:
      return finset_split(b, bound);
    case CatKind::Presheaf:
      return presheaf_fold(b, bound);
    default:
      return retract_search(b, bound);
  }
}

StrictnessResult strictness_witness(const Obj& b_dom, const SymbolicObject& a, int) {
  require(b_dom.cat == a.category(), "strictness_witness: category mismatch");
  StrictnessResult res;
  res.exhausted = true;
  return res;
}

bool LinStrictnessWitness::holds() const {
  return fqvec::compose(bprime, fqvec::compose(f, b)) == b;
}

LinStrictnessWitness strictness_witness(const fqvec::LinMap& b) {
  auto s = fqvec::split_through_image(b);
  return LinStrictnessWitness{b, s.bprime, s.f};
}

// ---------------------------------------------------------------- semi-strictness

SemiStrictResult semistrictness_witness(const AnyObject& a, int bound) {
  SemiStrictResult res;
  if (const Obj* x = std::get_if<Obj>(&a)) {
    Mor id = identity(*x);
    res.witness = EndoWitness{"identity", FinitaryMorWitness{id, id, id}};
    return res;
  }
  const auto& s = std::get<SymbolicObject>(a);
  if (s.kind == SymbolicKind::LoopRay && bound >= 1) {
    auto r = finitary_morphism_witness(SymbolicEndo{s, SymbolicEndoKind::Constant}, bound);
    res.witness = EndoWitness{"constant at the loop vertex", *r.witness};
    return res;
  }
  res.exhausted = true;
  return res;
}

bool FixedSubobjectWitness::holds() const {
  return compose(u, m).maps == m.maps && factorization.holds() && factorization.u == u;
}

std::optional<FixedSubobjectWitness> fixed_subobject_witness(const Mor& m, int bound) {
  require(is_mono(m), "fixed_subobject_witness needs a mono");
  auto r = strictness_witness(m, bound);
  if (!r.witness) return std::nullopt;
  Mor u = compose(r.witness->bprime, r.witness->f);
  return FixedSubobjectWitness{m, u, FinitaryMorWitness{u, r.witness->f, r.witness->bprime}};
}

bool LinFixedWitness::holds() const { return fqvec::compose(u, m) == m && fqvec::compose(u, u) == u; }

LinFixedWitness fixed_subobject_witness(const fqvec::LinMap& m) {
  require(fqvec::is_injective(m), "fixed_subobject_witness needs an injective map");
  return LinFixedWitness{m, fqvec::projection_onto_image(m)};
}

// ---------------------------------------------------------------- atoms

std::vector<std::vector<int>> vertex_subgroups(const FiniteGroupoid& g, int x) {
  const auto loops = g.arrows(x, x);
  const int n = static_cast<int>(loops.size());
  require(n <= 16, "vertex group too large to enumerate subgroups");
  std::vector<std::vector<int>> out;
  const int id = g.identity(x);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> h;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) h.push_back(loops[i]);
    if (std::find(h.begin(), h.end(), id) == h.end()) continue;
    bool closed = true;
    for (int p : h)
      for (int q : h)
        if (std::find(h.begin(), h.end(), g.compose(p, q)) == h.end()) closed = false;
    if (closed) {
      std::sort(h.begin(), h.end());
      out.push_back(h);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.size() < r.size(); });
  return out;
}

Obj coset_presheaf(std::shared_ptr<const FiniteGroupoid> g, int x, const std::vector<int>& h) {
  const int objects = g->object_count();
  std::vector<std::vector<int>> elems(objects), label(objects);
  std::vector<int> sizes(objects);
  for (int y = 0; y < objects; ++y) {
    elems[y] = g->arrows(y, x);
    label[y].assign(elems[y].size(), -1);
    for (std::size_t i = 0; i < elems[y].size(); ++i) {
      if (label[y][i] >= 0) continue;
      for (int k : h) label[y][position(elems[y], g->compose(k, elems[y][i]))] = sizes[y];
      ++sizes[y];
    }
  }
  std::vector<std::vector<int>> tables(g->arrow_count());
  for (int a = 0; a < g->arrow_count(); ++a) {
    const int d = g->dst(a), s = g->src(a);
    tables[a].assign(sizes[d], -1);
    for (std::size_t i = 0; i < elems[d].size(); ++i)
      tables[a][label[d][i]] = label[s][position(elems[s], g->compose(elems[d][i], a))];
  }
  return presheaf(g, sizes, tables);
}

std::vector<Obj> atoms_of_presheaves(std::shared_ptr<const FiniteGroupoid> g) {
  std::vector<Obj> out;
  for (int x = 0; x < g->object_count(); ++x)
    for (const auto& h : vertex_subgroups(*g, x)) {
      Obj atom = coset_presheaf(g, x, h);
      bool seen = std::any_of(out.begin(), out.end(), [&](const Obj& o) { return isomorphic(o, atom); });
      if (!seen) out.push_back(std::move(atom));
    }
  return out;
}

bool is_atom(const Obj& x) { return x.total_size() > 0 && subobjects(x, x.total_size()).size() == 2; }

std::vector<Mor> decompose_into_atoms(const Obj& x) {
  std::vector<Mor> out;
  for (int s = 0; s < x.sort_count(); ++s)
    for (int i = 0; i < x.sizes[s]; ++i) {
      Mor m = generated_subobject(x, {{s, i}});
      if (std::none_of(out.begin(), out.end(), [&](const Mor& o) { return o.maps == m.maps; }))
        out.push_back(std::move(m));
    }
  return out;
}

// ---------------------------------------------------------------- negative certificates

NoFinitaryEndoCertificate no_finitary_endo_certificate(const SymbolicObject& a) {
  NoFinitaryEndoCertificate c;
  c.a = a;
  switch (a.kind) {
    case SymbolicKind::LoopRay:
      c.refused = true;
      c.reason = "the constant endomorphism at the loop vertex is finitary";
      return c;
    case SymbolicKind::CycleFamily: {
      c.primes = first_primes(9);
      c.holds = true;
      for (int p : c.primes) {
        std::vector<std::size_t> row;
        for (int q : c.primes) {
          row.push_back(hom_count(cycle(p), cycle(q)));
          if (row.back() != (p == q ? static_cast<std::size_t>(p) : 0u)) c.holds = false;
        }
        c.prime_hom_table.push_back(row);
      }
      c.inference =
          "hom(C_p, C_q) is empty for distinct primes, so every endomorphism maps each summand C_p into "
          "itself; its image contains every C_p and is not finitely generated. A finitary endomorphism "
          "would factor through a finite algebra, whose image is finite.";
      return c;
    }
    case SymbolicKind::Ray: {
      c.ray = ray_advance_certificate(8, std::max(a.window, 9));
      c.holds = c.ray->holds();
      c.inference =
          "every hom from a path advances by exactly one, so an endomorphism u is a shift n -> n+s and "
          "its image is infinite. A factorization through a finite graph C would send a path longer "
          "than |C| through a repeated vertex of C, giving a closed walk that cannot map into the ray.";
      return c;
    }
  }
  return c;
}

}  // namespace finbound::strictness
