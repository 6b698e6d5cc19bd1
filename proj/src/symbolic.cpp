#include "finbound/symbolic.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace finbound::cats {

Category SymbolicObject::category() const {
  return kind == SymbolicKind::CycleFamily ? Category::unary() : Category::graph();
}

std::string SymbolicObject::name() const {
  switch (kind) {
    case SymbolicKind::Ray:
      return "Ray";
    case SymbolicKind::LoopRay:
      return "LoopRay";
    case SymbolicKind::CycleFamily:
      return "CycleFamily";
  }
  return "?";
}

std::vector<int> SymbolicObject::window_primes() const {
  require(kind == SymbolicKind::CycleFamily, "window_primes: not a cycle family");
  std::vector<int> out;
  int used = 0;
  for (int p = 2;; ++p) {
    if (!is_prime(p)) continue;
    if (used + p > window) break;
    used += p;
    out.push_back(p);
  }
  return out;
}

Obj SymbolicObject::window_object() const {
  require(window >= 1, "window must hold at least one element");
  switch (kind) {
    case SymbolicKind::Ray:
      return path(window);
    case SymbolicKind::LoopRay: {
      std::vector<Edge> e{{0, 0}};
      for (int i = 1; i + 1 < window; ++i) e.emplace_back(i, i + 1);
      return graph(window, std::move(e));
    }
    case SymbolicKind::CycleFamily: {
      std::vector<Obj> cycles;
      for (int p : window_primes()) cycles.push_back(cycle(p));
      return coproduct(Category::unary(), cycles).object;
    }
  }
  return finset(0);
}

SymbolicObject ray(int window) { return SymbolicObject{SymbolicKind::Ray, window}; }
SymbolicObject loop_ray(int window) { return SymbolicObject{SymbolicKind::LoopRay, window}; }
SymbolicObject cycle_family(int window) { return SymbolicObject{SymbolicKind::CycleFamily, window}; }

std::string object_name(const AnyObject& a) {
  if (const auto* s = std::get_if<SymbolicObject>(&a)) return s->name();
  const Obj& x = std::get<Obj>(a);
  return x.cat.name() + "[" + std::to_string(x.total_size()) + "]";
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p)
    if (n % p == 0 && is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

Windowed<Mor> hom_into(const Obj& x, const SymbolicObject& a) {
  require(x.cat == a.category(), "hom_into: category mismatch");
  Windowed<Mor> out;
  out.items = hom_set(x, a.window_object());
  if (a.kind == SymbolicKind::CycleFamily) {
    const auto primes = a.window_primes();
    for (int len : cycle_lengths(x))
      for (int p : prime_divisors(len))
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) out.exhausted = true;
  } else {
    // Anything touching a ray vertex has translates beyond the window.
    const int first_ray_vertex = a.kind == SymbolicKind::LoopRay ? 1 : 0;
    for (const Mor& m : out.items)
      for (int v : m.maps[0])
        if (v >= first_ray_vertex) out.exhausted = true;
  }
  return out;
}

bool hom_exists_into(const Obj& x, const SymbolicObject& a) {
  require(x.cat == a.category(), "hom_exists_into: category mismatch");
  if (a.kind == SymbolicKind::CycleFamily) {
    for (int len : cycle_lengths(x))
      if (len < 2) return false;
    return true;
  }
  // A connected component spans at most |X| consecutive ray vertices, so a
  // window of |X|+2 elements sees every hom up to translation.
  SymbolicObject wide{a.kind, std::max(a.window, x.total_size() + 2)};
  return hom_exists(x, wide.window_object());
}

Windowed<Mor> subobjects_fg(const SymbolicObject& a, int bound) {
  require(bound >= 0, "negative bound");
  Windowed<Mor> out;
  out.exhausted = true;
  const Obj w = a.window_object();
  if (a.kind == SymbolicKind::CycleFamily) {
    const auto primes = a.window_primes();
    const int k = static_cast<int>(primes.size());
    std::vector<std::pair<int, std::uint32_t>> picks;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      int size = 0;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) size += primes[i];
      if (size <= bound) picks.emplace_back(size, mask);
    }
    std::stable_sort(picks.begin(), picks.end(), [](auto& l, auto& r) { return l.first < r.first; });
    for (auto [size, mask] : picks) {
      std::vector<int> els;
      int base = 0;
      for (int i = 0; i < k; ++i) {
        if (mask >> i & 1)
          for (int j = 0; j < primes[i]; ++j) els.push_back(base + j);
        base += primes[i];
      }
      out.items.push_back(subobject(w, {els}));
    }
    return out;
  }
  // Graph kinds: every vertex set of size <= bound with every subset of the
  // edges it spans, smallest first.
  struct Pick {
    std::vector<int> vertices;
    std::vector<Edge> edges;
  };
  std::vector<Pick> picks;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int next) {
    std::vector<Edge> avail;
    for (auto [u, v] : w.edges)
      if (std::binary_search(chosen.begin(), chosen.end(), u) && std::binary_search(chosen.begin(), chosen.end(), v))
        avail.emplace_back(u, v);
    for (std::uint32_t m = 0; m < (1u << avail.size()); ++m) {
      Pick p{chosen, {}};
      for (std::size_t b = 0; b < avail.size(); ++b)
        if (m >> b & 1) p.edges.push_back(avail[b]);
      picks.push_back(std::move(p));
    }
    if (static_cast<int>(chosen.size()) == bound) return;
    for (int v = next; v < w.sizes[0]; ++v) {
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  std::stable_sort(picks.begin(), picks.end(), [](const Pick& l, const Pick& r) {
    if (l.vertices.size() != r.vertices.size()) return l.vertices.size() < r.vertices.size();
    return l.edges.size() < r.edges.size();
  });
  for (auto& p : picks) out.items.push_back(subobject(w, {p.vertices}, p.edges));
  return out;
}

const Obj& leg_target(const Cocone& c) {
  require(!c.legs.empty(), "cocone without legs");
  return c.legs.front().cod;
}

Obj leg_target_copy(const Cocone& c) {
  if (const auto* s = std::get_if<SymbolicObject>(&c.apex)) return s->window_object();
  return std::get<Obj>(c.apex);
}

Mor chain_map(const Chain& c, int i, int j) {
  require(0 <= i && i <= j && j < static_cast<int>(c.objects.size()), "chain_map: bad indices");
  Mor m = identity(c.objects[i]);
  for (int t = i; t < j; ++t) m = compose(c.links[t], m);
  return m;
}

Cocone chain_colimit(const Chain& c) {
  require(!c.objects.empty(), "chain_colimit: empty chain");
  require(c.links.size() + 1 == c.objects.size(), "chain_colimit: link count");
  for (std::size_t i = 0; i < c.links.size(); ++i) {
    require(c.links[i].dom == c.objects[i] && c.links[i].cod == c.objects[i + 1], "chain_colimit: links do not compose");
    require(is_mono(c.links[i]), "chain_colimit: links must be monos");
  }
  const int last = static_cast<int>(c.objects.size()) - 1;
  Cocone out{c, c.objects.back(), {}};
  for (int i = 0; i <= last; ++i) out.legs.push_back(chain_map(c, i, last));
  return out;
}

namespace {

/// Inclusion of an initial segment of carriers (canonical layouts agree).
Mor prefix_inclusion(const Obj& small, const Obj& big) {
  Maps m(small.sort_count());
  for (int s = 0; s < small.sort_count(); ++s) {
    m[s].resize(small.sizes[s]);
    std::iota(m[s].begin(), m[s].end(), 0);
  }
  return make_mor(small, big, std::move(m));
}

Cocone prefix_cocone(std::vector<Obj> objects, SymbolicObject apex) {
  Chain c;
  c.objects = std::move(objects);
  for (std::size_t i = 0; i + 1 < c.objects.size(); ++i)
    c.links.push_back(prefix_inclusion(c.objects[i], c.objects[i + 1]));
  const Obj w = apex.window_object();
  Cocone out{c, apex, {}};
  for (const Obj& d : c.objects) out.legs.push_back(prefix_inclusion(d, w));
  return out;
}

}  // namespace

Cocone prime_cycle_chain(int k) {
  require(k >= 1, "prime_cycle_chain: need at least one object");
  const auto primes = first_primes(static_cast<std::size_t>(k));
  std::vector<Obj> objects;
  std::vector<Obj> cycles;
  int total = 0;
  for (int p : primes) {
    cycles.push_back(cycle(p));
    total += p;
    objects.push_back(coproduct(Category::unary(), cycles).object);
  }
  return prefix_cocone(std::move(objects), cycle_family(std::max(kDefaultWindow, total)));
}

Cocone path_chain(int k) {
  require(k >= 1, "path_chain: need at least one object");
  std::vector<Obj> objects;
  for (int i = 1; i <= k; ++i) objects.push_back(path(i));
  return prefix_cocone(std::move(objects), ray(std::max(kDefaultWindow, k + 1)));
}

}  // namespace finbound::cats
