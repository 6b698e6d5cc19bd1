#include "finbound/cats.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace finbound::cats {

// ---------------------------------------------------------------- Category

Category Category::presheaf(std::shared_ptr<const FiniteGroupoid> g) {
  require(g != nullptr, "presheaf category needs a groupoid");
  return Category(CatKind::Presheaf, std::move(g));
}

int Category::sort_count() const { return kind_ == CatKind::Presheaf ? groupoid_->object_count() : 1; }

int Category::op_count() const {
  switch (kind_) {
    case CatKind::Unary:
      return 1;
    case CatKind::Presheaf:
      return groupoid_->arrow_count();
    default:
      return 0;
  }
}

std::string Category::name() const {
  switch (kind_) {
    case CatKind::FinSet:
      return "FinSet";
    case CatKind::Graph:
      return "Gra";
    case CatKind::Unary:
      return "Un";
    case CatKind::Presheaf:
      return "PSh(" + groupoid_->name() + ")";
  }
  return "?";
}

bool Category::operator==(const Category& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ != CatKind::Presheaf) return true;
  return groupoid_ == other.groupoid_ || *groupoid_ == *other.groupoid_;
}

// ---------------------------------------------------------------- Obj

int Obj::total_size() const {
  int t = 0;
  for (int s : sizes) t += s;
  return t;
}

bool Obj::has_edge(int u, int v) const { return std::binary_search(edges.begin(), edges.end(), Edge{u, v}); }

int Obj::offset(int sort) const {
  int t = 0;
  for (int s = 0; s < sort; ++s) t += sizes[s];
  return t;
}

void validate(const Obj& x) {
  const Category& c = x.cat;
  require(x.sort_count() == c.sort_count(), "object has wrong number of sorts for " + c.name());
  for (int s : x.sizes) require(s >= 0, "negative carrier size");
  require(static_cast<int>(x.ops.size()) == c.op_count(), "object has wrong number of operations for " + c.name());
  for (std::size_t a = 0; a < x.ops.size(); ++a) {
    const UnaryOp& op = x.ops[a];
    if (c.kind() == CatKind::Presheaf) {
      require(op.from == c.groupoid()->dst(static_cast<int>(a)) && op.to == c.groupoid()->src(static_cast<int>(a)),
              "presheaf action has wrong sorts");
    } else {
      require(op.from == 0 && op.to == 0, "unary operation must be an endo-operation");
    }
    require(static_cast<int>(op.table.size()) == x.sizes[op.from], "operation is not total on its carrier");
    for (int v : op.table) require(v >= 0 && v < x.sizes[op.to], "operation value out of range");
  }
  if (c.kind() == CatKind::Presheaf) {
    const auto& g = *c.groupoid();
    for (int o = 0; o < g.object_count(); ++o) {
      const auto& t = x.ops[g.identity(o)].table;
      for (int i = 0; i < x.sizes[o]; ++i) require(t[i] == i, "presheaf: identity must act trivially");
    }
    for (int a = 0; a < g.arrow_count(); ++a) {
      for (int b = 0; b < g.arrow_count(); ++b) {
        int ab = g.compose(a, b);
        if (ab < 0) continue;
        // P(a . b) = P(b) . P(a)
        const auto& pab = x.ops[ab].table;
        for (int i = 0; i < x.sizes[g.dst(a)]; ++i)
          require(pab[i] == x.ops[b].table[x.ops[a].table[i]], "presheaf: composition equation fails");
      }
    }
  }
  if (c.kind() == CatKind::Graph) {
    require(std::is_sorted(x.edges.begin(), x.edges.end()) &&
                std::adjacent_find(x.edges.begin(), x.edges.end()) == x.edges.end(),
            "graph edges must be sorted and unique");
    for (auto [u, v] : x.edges) require(u >= 0 && v >= 0 && u < x.sizes[0] && v < x.sizes[0], "edge out of range");
  } else {
    require(x.edges.empty(), "only graphs carry edges");
  }
}

Obj finset(int n) {
  require(n >= 0, "negative set size");
  Obj x;
  x.cat = Category::finset();
  x.sizes = {n};
  return x;
}

Obj graph(int vertices, std::vector<Edge> edges) {
  Obj x;
  x.cat = Category::graph();
  x.sizes = {vertices};
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  x.edges = std::move(edges);
  validate(x);
  return x;
}

Obj unary(std::vector<int> op) {
  Obj x;
  x.cat = Category::unary();
  x.sizes = {static_cast<int>(op.size())};
  x.ops = {UnaryOp{0, 0, std::move(op)}};
  validate(x);
  return x;
}

Obj cycle(int p) {
  require(p >= 1, "cycle length must be positive");
  std::vector<int> op(p);
  for (int i = 0; i < p; ++i) op[i] = (i + 1) % p;
  return unary(std::move(op));
}

Obj path(int k) {
  require(k >= 0, "negative path length");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return graph(k, std::move(e));
}

Obj terminal_graph() { return graph(1, {{0, 0}}); }

Obj presheaf(std::shared_ptr<const FiniteGroupoid> g, std::vector<int> sizes, std::vector<std::vector<int>> tables) {
  Obj x;
  x.cat = Category::presheaf(g);
  x.sizes = std::move(sizes);
  require(static_cast<int>(tables.size()) == g->arrow_count(), "presheaf needs one table per arrow");
  for (int a = 0; a < g->arrow_count(); ++a) x.ops.push_back(UnaryOp{g->dst(a), g->src(a), std::move(tables[a])});
  validate(x);
  return x;
}

Obj representable(std::shared_ptr<const FiniteGroupoid> g, int target) {
  const int objects = g->object_count();
  std::vector<std::vector<int>> elems(objects);
  for (int y = 0; y < objects; ++y) elems[y] = g->arrows(y, target);
  std::vector<int> sizes(objects);
  for (int y = 0; y < objects; ++y) sizes[y] = static_cast<int>(elems[y].size());
  std::vector<std::vector<int>> tables(g->arrow_count());
  for (int a = 0; a < g->arrow_count(); ++a) {
    const int d = g->dst(a), s = g->src(a);
    for (int h : elems[d]) {
      int ha = g->compose(h, a);
      tables[a].push_back(static_cast<int>(std::find(elems[s].begin(), elems[s].end(), ha) - elems[s].begin()));
    }
  }
  return presheaf(g, sizes, tables);
}

Obj empty_object(const Category& c) {
  Obj x;
  x.cat = c;
  x.sizes.assign(c.sort_count(), 0);
  if (c.kind() == CatKind::Unary) x.ops = {UnaryOp{0, 0, {}}};
  if (c.kind() == CatKind::Presheaf)
    for (int a = 0; a < c.groupoid()->arrow_count(); ++a)
      x.ops.push_back(UnaryOp{c.groupoid()->dst(a), c.groupoid()->src(a), {}});
  return x;
}

Obj terminal_object(const Category& c) {
  switch (c.kind()) {
    case CatKind::FinSet:
      return finset(1);
    case CatKind::Graph:
      return terminal_graph();
    case CatKind::Unary:
      return cycle(1);
    case CatKind::Presheaf: {
      const auto& g = c.groupoid();
      return presheaf(g, std::vector<int>(g->object_count(), 1),
                      std::vector<std::vector<int>>(g->arrow_count(), std::vector<int>{0}));
    }
  }
  return finset(1);
}

// ---------------------------------------------------------------- morphisms

bool is_morphism(const Obj& dom, const Obj& cod, const Maps& maps) {
  if (!(dom.cat == cod.cat)) return false;
  if (static_cast<int>(maps.size()) != dom.sort_count()) return false;
  for (int s = 0; s < dom.sort_count(); ++s) {
    if (static_cast<int>(maps[s].size()) != dom.sizes[s]) return false;
    for (int v : maps[s])
      if (v < 0 || v >= cod.sizes[s]) return false;
  }
  for (std::size_t a = 0; a < dom.ops.size(); ++a) {
    const auto& od = dom.ops[a];
    const auto& oc = cod.ops[a];
    for (int i = 0; i < dom.sizes[od.from]; ++i)
      if (maps[od.to][od.table[i]] != oc.table[maps[od.from][i]]) return false;
  }
  for (auto [u, v] : dom.edges)
    if (!cod.has_edge(maps[0][u], maps[0][v])) return false;
  return true;
}

Mor make_mor(Obj dom, Obj cod, Maps maps) {
  require(is_morphism(dom, cod, maps), "carrier maps do not form a morphism");
  return Mor{std::move(dom), std::move(cod), std::move(maps)};
}

Mor identity(const Obj& x) {
  Maps m(x.sort_count());
  for (int s = 0; s < x.sort_count(); ++s) {
    m[s].resize(x.sizes[s]);
    std::iota(m[s].begin(), m[s].end(), 0);
  }
  return Mor{x, x, std::move(m)};
}

Mor compose(const Mor& g, const Mor& f) {
  require(f.cod == g.dom, "compose: codomain/domain mismatch");
  Maps m(f.dom.sort_count());
  for (int s = 0; s < f.dom.sort_count(); ++s) {
    m[s].resize(f.dom.sizes[s]);
    for (int i = 0; i < f.dom.sizes[s]; ++i) m[s][i] = g.maps[s][f.maps[s][i]];
  }
  return Mor{f.dom, g.cod, std::move(m)};
}

Mor to_terminal(const Obj& x, const Obj& terminal) {
  Maps m(x.sort_count());
  for (int s = 0; s < x.sort_count(); ++s) m[s].assign(x.sizes[s], 0);
  return make_mor(x, terminal, std::move(m));
}

Mor from_empty(const Obj& x) {
  Obj e = empty_object(x.cat);
  return Mor{e, x, Maps(x.sort_count())};
}

// ---------------------------------------------------------------- hom search

namespace {

class HomSearch {
 public:
  HomSearch(const Obj& x, const Obj& y, bool injective = false) : x_(x), y_(y), injective_(injective) {
    require(x.cat == y.cat, "hom search across different categories");
    n_ = x.total_size();
    sort_of_.resize(n_);
    idx_of_.resize(n_);
    for (int s = 0, g = 0; s < x.sort_count(); ++s)
      for (int i = 0; i < x.sizes[s]; ++i, ++g) {
        sort_of_[g] = s;
        idx_of_[g] = i;
      }
    val_.assign(n_, -1);
    out_.resize(n_);
    in_.resize(n_);
    for (auto [u, v] : x.edges) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
    const int ny = y.sizes.empty() ? 0 : y.sizes[0];
    if (y.cat.kind() == CatKind::Graph) {
      yadj_.assign(ny, std::vector<char>(ny, 0));
      for (auto [u, v] : y.edges) yadj_[u][v] = 1;
    }
    if (injective_) {
      used_.resize(y.sort_count());
      for (int s = 0; s < y.sort_count(); ++s) used_[s].assign(y.sizes[s], 0);
    }
  }

  int element_count() const { return n_; }
  int candidates(int g) const { return y_.sizes[sort_of_[g]]; }

  bool assign(int g, int v) {
    work_.clear();
    work_.emplace_back(g, v);
    while (!work_.empty()) {
      auto [a, w] = work_.back();
      work_.pop_back();
      if (val_[a] >= 0) {
        if (val_[a] != w) return false;
        continue;
      }
      const int s = sort_of_[a];
      if (injective_) {
        if (used_[s][w]) return false;
        used_[s][w] = 1;
      }
      val_[a] = w;
      trail_.push_back(a);
      if (!yadj_.empty()) {
        for (int b : out_[a])
          if (val_[b] >= 0 && !yadj_[w][val_[b]]) return false;
        for (int b : in_[a])
          if (val_[b] >= 0 && !yadj_[val_[b]][w]) return false;
      }
      for (std::size_t o = 0; o < x_.ops.size(); ++o) {
        const auto& op = x_.ops[o];
        if (op.from != s) continue;
        int target = x_.offset(op.to) + op.table[idx_of_[a]];
        work_.emplace_back(target, y_.ops[o].table[w]);
      }
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      int a = trail_.back();
      trail_.pop_back();
      if (injective_) used_[sort_of_[a]][val_[a]] = 0;
      val_[a] = -1;
    }
  }

  Maps current() const {
    Maps m(x_.sort_count());
    for (int s = 0; s < x_.sort_count(); ++s) m[s].resize(x_.sizes[s]);
    for (int g = 0; g < n_; ++g) m[sort_of_[g]][idx_of_[g]] = val_[g];
    return m;
  }

  /// Depth-first enumeration from element position `pos`; emit returns false to stop.
  template <class Emit>
  bool run(int pos, Emit&& emit) {
    while (pos < n_ && val_[pos] >= 0) ++pos;
    if (pos == n_) return emit(*this);
    const int c = candidates(pos);
    for (int v = 0; v < c; ++v) {
      std::size_t m = mark();
      if (assign(pos, v) && !run(pos + 1, emit)) {
        undo(m);
        return false;
      }
      undo(m);
    }
    return true;
  }

 private:
  const Obj& x_;
  const Obj& y_;
  bool injective_;
  int n_ = 0;
  std::vector<int> sort_of_, idx_of_, val_, trail_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::vector<char>> yadj_;
  std::vector<std::vector<char>> used_;
  std::vector<std::pair<int, int>> work_;
};

}  // namespace

namespace serial {
std::vector<Mor> hom_set(const Obj& x, const Obj& y) {
  std::vector<Mor> out;
  HomSearch search(x, y);
  search.run(0, [&](const HomSearch& s) {
    out.push_back(Mor{x, y, s.current()});
    return true;
  });
  return out;
}
}  // namespace serial

std::vector<Mor> hom_set(const Obj& x, const Obj& y) {
  HomSearch probe(x, y);
  if (probe.element_count() == 0) return serial::hom_set(x, y);
  const int branches = probe.candidates(0);
  std::vector<std::vector<Mor>> parts(branches);
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < branches; ++v) {
    HomSearch search(x, y);
    if (!search.assign(0, v)) continue;
    search.run(1, [&](const HomSearch& s) {
      parts[v].push_back(Mor{x, y, s.current()});
      return true;
    });
  }
  std::vector<Mor> out;
  for (auto& p : parts)
    for (auto& m : p) out.push_back(std::move(m));
  return out;
}

bool hom_exists(const Obj& x, const Obj& y) {
  bool found = false;
  HomSearch search(x, y);
  search.run(0, [&](const HomSearch&) {
    found = true;
    return false;
  });
  return found;
}

std::size_t hom_count(const Obj& x, const Obj& y) {
  std::size_t count = 0;
  HomSearch search(x, y);
  search.run(0, [&](const HomSearch&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<Mor> find_extension(const Obj& x, const Obj& y, const Maps& partial) {
  require(static_cast<int>(partial.size()) == x.sort_count(), "find_extension: one table per sort");
  HomSearch search(x, y);
  for (int s = 0, g = 0; s < x.sort_count(); ++s) {
    require(static_cast<int>(partial[s].size()) == x.sizes[s], "find_extension: table size mismatch");
    for (int i = 0; i < x.sizes[s]; ++i, ++g) {
      const int v = partial[s][i];
      if (v < 0) continue;
      require(v < y.sizes[s], "find_extension: value out of range");
      if (!search.assign(g, v)) return std::nullopt;
    }
  }
  std::optional<Mor> found;
  search.run(0, [&](const HomSearch& st) {
    found = Mor{x, y, st.current()};
    return false;
  });
  return found;
}

// ---------------------------------------------------------------- images

namespace {

/// Subobject on per-sort element lists (sorted) with the given edge list
/// (already in X's numbering).
Mor build_subobject(const Obj& x, const std::vector<std::vector<int>>& elements, const std::vector<Edge>& edges) {
  Obj sub;
  sub.cat = x.cat;
  std::vector<std::vector<int>> index(x.sort_count());
  for (int s = 0; s < x.sort_count(); ++s) {
    sub.sizes.push_back(static_cast<int>(elements[s].size()));
    index[s].assign(x.sizes[s], -1);
    for (std::size_t i = 0; i < elements[s].size(); ++i) index[s][elements[s][i]] = static_cast<int>(i);
  }
  for (const auto& op : x.ops) {
    UnaryOp r{op.from, op.to, {}};
    for (int e : elements[op.from]) {
      int t = index[op.to][op.table[e]];
      require(t >= 0, "subobject is not closed under the operations");
      r.table.push_back(t);
    }
    sub.ops.push_back(std::move(r));
  }
  for (auto [u, v] : edges) {
    require(index[0][u] >= 0 && index[0][v] >= 0 && x.has_edge(u, v), "subgraph edge not available");
    sub.edges.emplace_back(index[0][u], index[0][v]);
  }
  std::sort(sub.edges.begin(), sub.edges.end());
  sub.edges.erase(std::unique(sub.edges.begin(), sub.edges.end()), sub.edges.end());
  return Mor{sub, x, elements};
}

}  // namespace

Mor subobject(const Obj& x, const std::vector<std::vector<int>>& elements, std::optional<std::vector<Edge>> edges) {
  require(static_cast<int>(elements.size()) == x.sort_count(), "subobject: one element list per sort");
  std::vector<std::vector<int>> els = elements;
  for (int s = 0; s < x.sort_count(); ++s) {
    std::sort(els[s].begin(), els[s].end());
    els[s].erase(std::unique(els[s].begin(), els[s].end()), els[s].end());
    for (int e : els[s]) require(e >= 0 && e < x.sizes[s], "subobject element out of range");
  }
  std::vector<Edge> es;
  if (edges) {
    es = *edges;
  } else {
    for (auto [u, v] : x.edges)
      if (std::binary_search(els[0].begin(), els[0].end(), u) && std::binary_search(els[0].begin(), els[0].end(), v))
        es.emplace_back(u, v);
  }
  return build_subobject(x, els, es);
}

Mor generated_subobject(const Obj& x, const std::vector<std::pair<int, int>>& generators) {
  std::vector<std::vector<char>> in(x.sort_count());
  for (int s = 0; s < x.sort_count(); ++s) in[s].assign(x.sizes[s], 0);
  std::vector<std::pair<int, int>> stack(generators.begin(), generators.end());
  while (!stack.empty()) {
    auto [s, i] = stack.back();
    stack.pop_back();
    if (in[s][i]) continue;
    in[s][i] = 1;
    for (const auto& op : x.ops)
      if (op.from == s) stack.emplace_back(op.to, op.table[i]);
  }
  std::vector<std::vector<int>> els(x.sort_count());
  for (int s = 0; s < x.sort_count(); ++s)
    for (int i = 0; i < x.sizes[s]; ++i)
      if (in[s][i]) els[s].push_back(i);
  return build_subobject(x, els, {});
}

Factorization factorize(const Mor& f) {
  const Obj& y = f.cod;
  std::vector<std::vector<int>> els(y.sort_count());
  for (int s = 0; s < y.sort_count(); ++s) {
    els[s] = f.maps[s];
    std::sort(els[s].begin(), els[s].end());
    els[s].erase(std::unique(els[s].begin(), els[s].end()), els[s].end());
  }
  std::vector<Edge> es;
  for (auto [u, v] : f.dom.edges) es.emplace_back(f.maps[0][u], f.maps[0][v]);
  Mor mono = build_subobject(y, els, es);
  Maps e(f.dom.sort_count());
  for (int s = 0; s < f.dom.sort_count(); ++s)
    for (int v : f.maps[s])
      e[s].push_back(static_cast<int>(std::lower_bound(els[s].begin(), els[s].end(), v) - els[s].begin()));
  return Factorization{Mor{f.dom, mono.dom, std::move(e)}, std::move(mono)};
}

Mor image(const Mor& f) { return factorize(f).mono; }

bool is_mono(const Mor& f) {
  for (int s = 0; s < f.dom.sort_count(); ++s) {
    std::vector<char> seen(f.cod.sizes[s], 0);
    for (int v : f.maps[s]) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool is_epi(const Mor& f) {
  for (int s = 0; s < f.dom.sort_count(); ++s) {
    std::vector<char> seen(f.cod.sizes[s], 0);
    for (int v : f.maps[s]) seen[v] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  return true;
}

bool is_strong_epi(const Mor& f) {
  if (!is_epi(f)) return false;
  if (f.cod.cat.kind() != CatKind::Graph) return true;
  std::set<Edge> hit;
  for (auto [u, v] : f.dom.edges) hit.emplace(f.maps[0][u], f.maps[0][v]);
  return hit.size() == f.cod.edges.size();
}

bool is_iso(const Mor& f) { return is_mono(f) && is_strong_epi(f); }

// ---------------------------------------------------------------- colimits

Coproduct coproduct(const Category& c, const std::vector<Obj>& objs) {
  Obj sum = empty_object(c);
  for (const Obj& o : objs) require(o.cat == c, "coproduct: mixed categories");
  std::vector<std::vector<int>> base(objs.size(), std::vector<int>(c.sort_count(), 0));
  for (std::size_t k = 0; k < objs.size(); ++k) {
    for (int s = 0; s < c.sort_count(); ++s) {
      base[k][s] = sum.sizes[s];
      sum.sizes[s] += objs[k].sizes[s];
    }
  }
  for (std::size_t k = 0; k < objs.size(); ++k) {
    for (std::size_t a = 0; a < sum.ops.size(); ++a) {
      const auto& op = objs[k].ops[a];
      for (int v : op.table) sum.ops[a].table.push_back(v + base[k][op.to]);
    }
    for (auto [u, v] : objs[k].edges) sum.edges.emplace_back(u + base[k][0], v + base[k][0]);
  }
  std::sort(sum.edges.begin(), sum.edges.end());
  std::vector<Mor> inj;
  for (std::size_t k = 0; k < objs.size(); ++k) {
    Maps m(c.sort_count());
    for (int s = 0; s < c.sort_count(); ++s)
      for (int i = 0; i < objs[k].sizes[s]; ++i) m[s].push_back(base[k][s] + i);
    inj.push_back(Mor{objs[k], sum, std::move(m)});
  }
  return Coproduct{std::move(sum), std::move(inj)};
}

Mor copair(const Coproduct& sum, const std::vector<Mor>& fs) {
  require(fs.size() == sum.injections.size(), "copair: one morphism per summand");
  const Obj& target = fs.empty() ? sum.object : fs.front().cod;
  Maps m(sum.object.sort_count());
  for (int s = 0; s < sum.object.sort_count(); ++s) m[s].assign(sum.object.sizes[s], -1);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    require(fs[k].dom == sum.injections[k].dom && fs[k].cod == target, "copair: endpoints mismatch");
    for (int s = 0; s < sum.object.sort_count(); ++s)
      for (int i = 0; i < fs[k].dom.sizes[s]; ++i) m[s][sum.injections[k].maps[s][i]] = fs[k].maps[s][i];
  }
  return make_mor(sum.object, target, std::move(m));
}

Mor coequalizer(const Mor& f, const Mor& g) {
  require(f.dom == g.dom && f.cod == g.cod, "coequalizer needs a parallel pair");
  const Obj& y = f.cod;
  DisjointSet uf(y.total_size());
  for (int s = 0; s < y.sort_count(); ++s)
    for (int i = 0; i < f.dom.sizes[s]; ++i) uf.unite(y.offset(s) + f.maps[s][i], y.offset(s) + g.maps[s][i]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& op : y.ops) {
      const int from = y.offset(op.from), to = y.offset(op.to);
      for (int i = 0; i < y.sizes[op.from]; ++i) {
        int r = uf.find(from + i) - from;
        if (uf.unite(to + op.table[i], to + op.table[r])) changed = true;
      }
    }
  }
  Obj q;
  q.cat = y.cat;
  Maps quot(y.sort_count());
  std::vector<std::vector<int>> rep(y.sort_count());
  for (int s = 0; s < y.sort_count(); ++s) {
    std::map<int, int> label;
    for (int i = 0; i < y.sizes[s]; ++i) {
      int r = uf.find(y.offset(s) + i);
      auto [it, fresh] = label.emplace(r, static_cast<int>(label.size()));
      if (fresh) rep[s].push_back(i);
      quot[s].push_back(it->second);
    }
    q.sizes.push_back(static_cast<int>(label.size()));
  }
  for (const auto& op : y.ops) {
    UnaryOp r{op.from, op.to, {}};
    for (int c : rep[op.from]) r.table.push_back(quot[op.to][op.table[c]]);
    q.ops.push_back(std::move(r));
  }
  for (auto [u, v] : y.edges) q.edges.emplace_back(quot[0][u], quot[0][v]);
  std::sort(q.edges.begin(), q.edges.end());
  q.edges.erase(std::unique(q.edges.begin(), q.edges.end()), q.edges.end());
  return Mor{y, std::move(q), std::move(quot)};
}

KernelPair kernel_pair(const Mor& f) {
  const Obj& x = f.dom;
  Obj k;
  k.cat = x.cat;
  Maps p1(x.sort_count()), p2(x.sort_count());
  std::vector<std::map<std::pair<int, int>, int>> index(x.sort_count());
  for (int s = 0; s < x.sort_count(); ++s) {
    for (int a = 0; a < x.sizes[s]; ++a)
      for (int b = 0; b < x.sizes[s]; ++b)
        if (f.maps[s][a] == f.maps[s][b]) {
          index[s][{a, b}] = static_cast<int>(p1[s].size());
          p1[s].push_back(a);
          p2[s].push_back(b);
        }
    k.sizes.push_back(static_cast<int>(p1[s].size()));
  }
  for (const auto& op : x.ops) {
    UnaryOp r{op.from, op.to, {}};
    for (std::size_t i = 0; i < p1[op.from].size(); ++i)
      r.table.push_back(index[op.to].at({op.table[p1[op.from][i]], op.table[p2[op.from][i]]}));
    k.ops.push_back(std::move(r));
  }
  if (x.cat.kind() == CatKind::Graph) {
    for (std::size_t i = 0; i < p1[0].size(); ++i)
      for (std::size_t j = 0; j < p1[0].size(); ++j)
        if (x.has_edge(p1[0][i], p1[0][j]) && x.has_edge(p2[0][i], p2[0][j]))
          k.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return KernelPair{k, Mor{k, x, std::move(p1)}, Mor{k, x, std::move(p2)}};
}

CokernelPair cokernel_pair(const Mor& f) {
  Coproduct sum = coproduct(f.cod.cat, {f.cod, f.cod});
  Mor q = coequalizer(compose(sum.injections[0], f), compose(sum.injections[1], f));
  Mor i1 = compose(q, sum.injections[0]);
  Mor i2 = compose(q, sum.injections[1]);
  return CokernelPair{q.cod, std::move(i1), std::move(i2)};
}

// ---------------------------------------------------------------- probes

std::vector<Obj> small_objects(const Category& c, int max_size) {
  std::vector<Obj> out;
  switch (c.kind()) {
    case CatKind::FinSet:
      for (int n = 0; n <= max_size; ++n) out.push_back(finset(n));
      break;
    case CatKind::Unary:
      for (int n = 0; n <= max_size; ++n)
        for (const FinFn& t : all_functions(n, n)) out.push_back(unary(t));
      break;
    case CatKind::Graph:
      for (int n = 0; n <= max_size; ++n) {
        const int pairs = n * n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
          std::vector<Edge> e;
          for (int b = 0; b < pairs; ++b)
            if (mask >> b & 1) e.emplace_back(b / n, b % n);
          out.push_back(graph(n, std::move(e)));
        }
      }
      break;
    case CatKind::Presheaf:
      out.push_back(empty_object(c));
      out.push_back(terminal_object(c));
      for (int x = 0; x < c.groupoid()->object_count(); ++x) out.push_back(representable(c.groupoid(), x));
      break;
  }
  return out;
}

bool is_mono_by_probe(const Mor& f, int probe_size) {
  KernelPair kp = kernel_pair(f);
  if (!(kp.p1 == kp.p2)) return false;
  for (const Obj& z : small_objects(f.dom.cat, probe_size)) {
    auto homs = hom_set(z, f.dom);
    for (std::size_t i = 0; i < homs.size(); ++i)
      for (std::size_t j = i + 1; j < homs.size(); ++j)
        if (compose(f, homs[i]) == compose(f, homs[j])) return false;
  }
  return true;
}

bool is_epi_by_probe(const Mor& f, int probe_size) {
  CokernelPair cp = cokernel_pair(f);
  if (!(cp.i1 == cp.i2)) return false;
  for (const Obj& z : small_objects(f.cod.cat, probe_size)) {
    auto homs = hom_set(f.cod, z);
    for (std::size_t i = 0; i < homs.size(); ++i)
      for (std::size_t j = i + 1; j < homs.size(); ++j)
        if (compose(homs[i], f) == compose(homs[j], f)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- subobjects

std::vector<Mor> subobjects(const Obj& x, int bound) {
  const int n = x.total_size();
  require(n <= 24, "subobject enumeration limited to 24 elements");
  std::vector<std::pair<int, int>> elem;  // flattened -> (sort, index)
  for (int s = 0; s < x.sort_count(); ++s)
    for (int i = 0; i < x.sizes[s]; ++i) elem.emplace_back(s, i);
  struct Candidate {
    int size;
    std::uint32_t mask;
    std::uint64_t edge_mask;
  };
  std::vector<Candidate> found;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int pop = std::popcount(mask);
    if (pop > bound) continue;
    bool closed = true;
    for (const auto& op : x.ops) {
      const int from = x.offset(op.from), to = x.offset(op.to);
      for (int i = 0; i < x.sizes[op.from] && closed; ++i)
        if ((mask >> (from + i) & 1) && !(mask >> (to + op.table[i]) & 1)) closed = false;
    }
    if (!closed) continue;
    if (x.cat.kind() != CatKind::Graph) {
      found.push_back({pop, mask, 0});
      continue;
    }
    std::vector<int> avail;
    for (std::size_t e = 0; e < x.edges.size(); ++e)
      if ((mask >> x.edges[e].first & 1) && (mask >> x.edges[e].second & 1)) avail.push_back(static_cast<int>(e));
    require(avail.size() < 63, "too many candidate edges");
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << avail.size()); ++sub) {
      std::uint64_t em = 0;
      for (std::size_t b = 0; b < avail.size(); ++b)
        if (sub >> b & 1) em |= std::uint64_t{1} << avail[b];
      found.push_back({pop, mask, em});
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.size != b.size) return a.size < b.size;
    return std::popcount(a.edge_mask) < std::popcount(b.edge_mask);
  });
  std::vector<Mor> out;
  for (const auto& c : found) {
    std::vector<std::vector<int>> els(x.sort_count());
    for (int g = 0; g < n; ++g)
      if (c.mask >> g & 1) els[elem[g].first].push_back(elem[g].second);
    std::vector<Edge> es;
    for (std::size_t e = 0; e < x.edges.size(); ++e)
      if (c.edge_mask >> e & 1) es.push_back(x.edges[e]);
    out.push_back(build_subobject(x, els, es));
  }
  return out;
}

std::optional<Mor> find_isomorphism(const Obj& x, const Obj& y) {
  if (!(x.cat == y.cat) || x.sizes != y.sizes || x.edges.size() != y.edges.size()) return std::nullopt;
  std::optional<Mor> found;
  HomSearch search(x, y, /*injective=*/true);
  search.run(0, [&](const HomSearch& s) {
    found = Mor{x, y, s.current()};
    return false;
  });
  return found;
}

bool isomorphic(const Obj& x, const Obj& y) { return find_isomorphism(x, y).has_value(); }

// ---------------------------------------------------------------- structure queries

std::vector<int> cycle_lengths(const Obj& x) {
  require(x.cat.kind() == CatKind::Unary, "cycle_lengths needs a unary algebra");
  const auto& op = x.ops[0].table;
  const int n = x.sizes[0];
  std::vector<int> cycle_id(n, -1);
  std::vector<int> lengths;
  std::vector<int> start_of;
  for (int i = 0; i < n; ++i) {
    // Walk n steps to land on the cycle, then measure it.
    int c = i;
    for (int k = 0; k < n; ++k) c = op[c];
    int m = c, len = 0;
    do {
      m = op[m];
      ++len;
    } while (m != c);
    int lo = c;
    for (int k = 0, t = c; k < len; ++k, t = op[t]) lo = std::min(lo, t);
    if (std::find(start_of.begin(), start_of.end(), lo) == start_of.end()) {
      start_of.push_back(lo);
      lengths.push_back(len);
    }
  }
  std::vector<std::size_t> order(start_of.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return start_of[a] < start_of[b]; });
  std::vector<int> out;
  for (auto k : order) out.push_back(lengths[k]);
  return out;
}

bool has_directed_cycle(const Obj& x) {
  require(x.cat.kind() == CatKind::Graph, "has_directed_cycle needs a graph");
  const int n = x.sizes[0];
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : x.edges) adj[u].push_back(v);
  std::vector<int> color(n, 0);
  std::function<bool(int)> dfs = [&](int u) {
    color[u] = 1;
    for (int v : adj[u]) {
      if (color[v] == 1) return true;
      if (color[v] == 0 && dfs(v)) return true;
    }
    color[u] = 2;
    return false;
  };
  for (int u = 0; u < n; ++u)
    if (color[u] == 0 && dfs(u)) return true;
  return false;
}

}  // namespace finbound::cats
