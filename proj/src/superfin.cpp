#include "finbound/superfin.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

namespace finbound::superfin {

// ---------------------------------------------------------------- presentations

Presentation Presentation::make_unchecked(int n, std::vector<int> values, const ActionFn& action) {
  require(n >= 0, "presentation level must be non-negative");
  require(static_cast<int>(values.size()) == n + 1, "presentation needs values F0..Fn");
  for (int v : values) require(v >= 0, "negative value size");
  Presentation p;
  p.n_ = n;
  p.values_ = std::move(values);
  p.action_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    p.action_[k].resize(n + 1);
    for (int kp = 0; kp <= n; ++kp) {
      for (const FinFn& g : all_functions(k, kp)) {
        std::vector<int> t = action(k, kp, g);
        require(static_cast<int>(t.size()) == p.values_[k], "action table must be total");
        for (int v : t) require(v >= 0 && v < p.values_[kp], "action value out of range");
        p.action_[k][kp].push_back(std::move(t));
      }
    }
  }
  return p;
}

Presentation Presentation::make(int n, std::vector<int> values, const ActionFn& action) {
  Presentation p = make_unchecked(n, std::move(values), action);
  if (auto err = p.check_laws()) throw PreconditionError("presentation is not functorial: " + *err);
  return p;
}

const std::vector<int>& Presentation::act(int k, int kp, const FinFn& g) const {
  require(k <= n_ && kp <= n_ && static_cast<int>(g.size()) == k, "act: function outside the truncation");
  return action_[k][kp][function_index(g, kp)];
}

std::optional<std::string> Presentation::check_laws() const {
  for (int k = 0; k <= n_; ++k) {
    FinFn id(k);
    std::iota(id.begin(), id.end(), 0);
    std::vector<int> expect(values_[k]);
    std::iota(expect.begin(), expect.end(), 0);
    if (act(k, k, id) != expect) return "F(id_" + std::to_string(k) + ") is not the identity";
  }
  for (int k = 0; k <= n_; ++k)
    for (int k1 = 0; k1 <= n_; ++k1)
      for (int k2 = 0; k2 <= n_; ++k2)
        for (const FinFn& g : all_functions(k, k1))
          for (const FinFn& h : all_functions(k1, k2))
            if (act(k, k2, compose_fn(h, g)) != compose_fn(act(k1, k2, h), act(k, k1, g)))
              return "F(h.g) != F(h).F(g) for levels " + std::to_string(k) + "," + std::to_string(k1) + "," +
                     std::to_string(k2);
  return std::nullopt;
}

Presentation identity_presentation(int n) {
  std::vector<int> values(n + 1);
  std::iota(values.begin(), values.end(), 0);
  return Presentation::make_unchecked(n, values, [](int, int, const FinFn& g) { return g; });
}

Presentation constant_presentation(int n, int a) {
  return Presentation::make_unchecked(n, std::vector<int>(n + 1, a), [a](int, int, const FinFn&) {
    std::vector<int> id(a);
    std::iota(id.begin(), id.end(), 0);
    return id;
  });
}

Presentation hom_presentation(int m, int n) {
  std::vector<int> values(n + 1);
  for (int k = 0; k <= n; ++k) values[k] = static_cast<int>(ipow(k, m));
  return Presentation::make_unchecked(n, values, [m](int k, int kp, const FinFn& g) {
    std::vector<int> t;
    for (const FinFn& u : all_functions(m, k)) t.push_back(static_cast<int>(function_index(compose_fn(g, u), kp)));
    return t;
  });
}

// ---------------------------------------------------------------- evaluation

int Evaluation::class_of_element(int k, int q, const FinFn& f) const {
  const auto xk = static_cast<int>(ipow(x, k));
  return class_of[offset[k] + q * xk + static_cast<int>(function_index(f, x))];
}

Evaluation evaluate(const Presentation& p, int x) {
  require(x >= 0, "negative set size");
  const int n = p.n();
  Evaluation ev;
  ev.x = x;
  ev.offset.resize(n + 2, 0);
  for (int k = 0; k <= n; ++k) ev.offset[k + 1] = ev.offset[k] + p.value(k) * static_cast<int>(ipow(x, k));
  const int total = ev.offset[n + 1];
  DisjointSet uf(total);
  std::vector<std::vector<FinFn>> maps_to_x(n + 1);
  for (int k = 0; k <= n; ++k) maps_to_x[k] = all_functions(k, x);
  auto id = [&](int k, int q, const FinFn& f) {
    return ev.offset[k] + q * static_cast<int>(ipow(x, k)) + static_cast<int>(function_index(f, x));
  };
  // (q, f.g) ~ (Fg(q), f) for g : k -> kp, q in Fk, f : kp -> x.
  for (int k = 0; k <= n; ++k)
    for (int kp = 0; kp <= n; ++kp)
      for (const FinFn& g : all_functions(k, kp)) {
        const auto& fg = p.act(k, kp, g);
        for (const FinFn& f : maps_to_x[kp]) {
          const FinFn fgc = compose_fn(f, g);
          for (int q = 0; q < p.value(k); ++q) uf.unite(id(k, q, fgc), id(kp, fg[q], f));
        }
      }
  ev.class_of = uf.labels();
  ev.classes = 0;
  for (int c : ev.class_of) ev.classes = std::max(ev.classes, c + 1);
  ev.reps.resize(ev.classes, Evaluation::Rep{-1, -1, {}});
  for (int k = 0; k <= n; ++k)
    for (int q = 0; q < p.value(k); ++q)
      for (const FinFn& f : maps_to_x[k]) {
        int c = ev.class_of[id(k, q, f)];
        if (ev.reps[c].k < 0) ev.reps[c] = Evaluation::Rep{k, q, f};
      }
  return ev;
}

FinFn evaluate_map(const Presentation&, const Evaluation& ex, const Evaluation& ey, const FinFn& h) {
  require(static_cast<int>(h.size()) == ex.x, "evaluate_map: domain mismatch");
  FinFn out(ex.classes);
  for (int c = 0; c < ex.classes; ++c) {
    const auto& r = ex.reps[c];
    out[c] = ey.class_of_element(r.k, r.q, compose_fn(h, r.f));
  }
  return out;
}

FinFn evaluate_map(const Presentation& p, const FinFn& h, int x, int y) {
  return evaluate_map(p, evaluate(p, x), evaluate(p, y), h);
}

Epsilon canonical_epsilon(const Presentation& p, int x) {
  Evaluation ev = evaluate(p, x);
  Epsilon eps;
  eps.classes = ev.classes;
  std::vector<char> hit(ev.classes, 0);
  for (int q = 0; q < p.value(p.n()); ++q)
    for (const FinFn& f : all_functions(p.n(), x)) {
      int c = ev.class_of_element(p.n(), q, f);
      eps.table.push_back(c);
      hit[c] = 1;
    }
  eps.surjective = std::find(hit.begin(), hit.end(), 0) == hit.end();
  return eps;
}

// ---------------------------------------------------------------- closure operations

Presentation product(const Presentation& a, const Presentation& b) {
  const int n = a.n() + b.n();
  std::vector<Evaluation> ea, eb;
  std::vector<int> values;
  for (int k = 0; k <= n; ++k) {
    ea.push_back(evaluate(a, k));
    eb.push_back(evaluate(b, k));
    values.push_back(ea[k].classes * eb[k].classes);
  }
  return Presentation::make_unchecked(n, values, [&](int k, int kp, const FinFn& g) {
    const FinFn ma = evaluate_map(a, ea[k], ea[kp], g);
    const FinFn mb = evaluate_map(b, eb[k], eb[kp], g);
    std::vector<int> t;
    for (int i = 0; i < ea[k].classes; ++i)
      for (int j = 0; j < eb[k].classes; ++j) t.push_back(ma[i] * eb[kp].classes + mb[j]);
    return t;
  });
}

Presentation coproduct(const Presentation& a, const Presentation& b) {
  const int n = std::max(a.n(), b.n());
  std::vector<Evaluation> ea, eb;
  std::vector<int> values;
  for (int k = 0; k <= n; ++k) {
    ea.push_back(evaluate(a, k));
    eb.push_back(evaluate(b, k));
    values.push_back(ea[k].classes + eb[k].classes);
  }
  return Presentation::make_unchecked(n, values, [&](int k, int kp, const FinFn& g) {
    std::vector<int> t = evaluate_map(a, ea[k], ea[kp], g);
    for (int v : evaluate_map(b, eb[k], eb[kp], g)) t.push_back(ea[kp].classes + v);
    return t;
  });
}

SubPresentation subfunctor_pullback(const Presentation& p, const std::function<bool(int, int)>& keep) {
  const int n = p.n();
  std::vector<std::vector<int>> embed(n + 1), index(n + 1);
  for (int k = 0; k <= n; ++k) {
    index[k].assign(p.value(k), -1);
    for (int q = 0; q < p.value(k); ++q)
      if (keep(k, q)) {
        index[k][q] = static_cast<int>(embed[k].size());
        embed[k].push_back(q);
      }
  }
  for (int k = 0; k <= n; ++k)
    for (int kp = 0; kp <= n; ++kp)
      for (const FinFn& g : all_functions(k, kp)) {
        const auto& t = p.act(k, kp, g);
        for (int q : embed[k])
          if (index[kp][t[q]] < 0)
            throw PreconditionError("selection is not closed under the action (level " + std::to_string(k) +
                                    " element " + std::to_string(q) + ")");
      }
  std::vector<int> values(n + 1);
  for (int k = 0; k <= n; ++k) values[k] = static_cast<int>(embed[k].size());
  Presentation sub = Presentation::make_unchecked(n, values, [&](int k, int kp, const FinFn& g) {
    const auto& t = p.act(k, kp, g);
    std::vector<int> r;
    for (int q : embed[k]) r.push_back(index[kp][t[q]]);
    return r;
  });
  return SubPresentation{std::move(sub), std::move(embed)};
}

Presentation quotient(const Presentation& p, const std::vector<std::tuple<int, int, int>>& pairs) {
  const int n = p.n();
  std::vector<int> offset(n + 2, 0);
  for (int k = 0; k <= n; ++k) offset[k + 1] = offset[k] + p.value(k);
  DisjointSet uf(offset[n + 1]);
  for (auto [k, a, b] : pairs) {
    require(k >= 0 && k <= n && a >= 0 && b >= 0 && a < p.value(k) && b < p.value(k), "quotient: pair out of range");
    uf.unite(offset[k] + a, offset[k] + b);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k <= n; ++k)
      for (int kp = 0; kp <= n; ++kp)
        for (const FinFn& g : all_functions(k, kp)) {
          const auto& t = p.act(k, kp, g);
          for (int q = 0; q < p.value(k); ++q) {
            int r = uf.find(offset[k] + q) - offset[k];
            if (uf.unite(offset[kp] + t[q], offset[kp] + t[r])) changed = true;
          }
        }
  }
  std::vector<std::vector<int>> label(n + 1), rep(n + 1);
  std::vector<int> values(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::map<int, int> seen;
    for (int q = 0; q < p.value(k); ++q) {
      auto [it, fresh] = seen.emplace(uf.find(offset[k] + q), static_cast<int>(seen.size()));
      if (fresh) rep[k].push_back(q);
      label[k].push_back(it->second);
    }
    values[k] = static_cast<int>(seen.size());
  }
  return Presentation::make_unchecked(n, values, [&](int k, int kp, const FinFn& g) {
    const auto& t = p.act(k, kp, g);
    std::vector<int> r;
    for (int q : rep[k]) r.push_back(label[kp][t[q]]);
    return r;
  });
}

// ---------------------------------------------------------------- black-box functors

SetFunctor identity_set_functor() {
  return SetFunctor{"Id", [](int x) { return x; }, [](const FinFn& h, int) { return h; }};
}

SetFunctor powfin() {
  return SetFunctor{"Pfin+", [](int x) { return (1 << x) - 1; },
                    [](const FinFn& h, int) {
                      const int x = static_cast<int>(h.size());
                      FinFn out((1 << x) - 1);
                      for (int mask = 1; mask < (1 << x); ++mask) {
                        int img = 0;
                        for (int i = 0; i < x; ++i)
                          if (mask >> i & 1) img |= 1 << h[i];
                        out[mask - 1] = img - 1;
                      }
                      return out;
                    }};
}

SetFunctor hom_set_functor(int m) {
  return SetFunctor{"Set(" + std::to_string(m) + ",-)", [m](int x) { return static_cast<int>(ipow(x, m)); },
                    [m](const FinFn& h, int y) {
                      FinFn out;
                      for (const FinFn& u : all_functions(m, static_cast<int>(h.size())))
                        out.push_back(static_cast<int>(function_index(compose_fn(h, u), y)));
                      return out;
                    }};
}

SetFunctor from_presentation(const Presentation& p) {
  struct Cache {
    Presentation p;
    std::mutex mu;
    std::map<int, std::shared_ptr<const Evaluation>> evals;
    std::shared_ptr<const Evaluation> get(int x) {
      std::lock_guard<std::mutex> lock(mu);
      auto it = evals.find(x);
      if (it != evals.end()) return it->second;
      auto ev = std::make_shared<const Evaluation>(evaluate(p, x));
      evals.emplace(x, ev);
      return ev;
    }
  };
  auto cache = std::make_shared<Cache>();
  cache->p = p;
  return SetFunctor{"Lan(presentation)", [cache](int x) { return cache->get(x)->classes; },
                    [cache](const FinFn& h, int y) {
                      auto ex = cache->get(static_cast<int>(h.size()));
                      auto ey = cache->get(y);
                      return evaluate_map(cache->p, *ex, *ey, h);
                    }};
}

Presentation truncate(const SetFunctor& f, int n) {
  std::vector<int> values(n + 1);
  for (int k = 0; k <= n; ++k) values[k] = f.size(k);
  return Presentation::make_unchecked(n, values, [&](int, int kp, const FinFn& g) { return f.act(g, kp); });
}

// ---------------------------------------------------------------- coverage

namespace serial {
std::vector<char> coverage(const SetFunctor& f, int n, int x) {
  std::vector<char> covered(f.size(x), 0);
  for (const FinFn& g : all_functions(n, x))
    for (int v : f.act(g, x)) covered[v] = 1;
  return covered;
}
}  // namespace serial

std::vector<char> coverage(const SetFunctor& f, int n, int x) {
  const auto fns = all_functions(n, x);
  const int size = f.size(x);
  std::vector<char> covered(size, 0);
#pragma omp parallel
  {
    std::vector<char> local(size, 0);
#pragma omp for schedule(static) nowait
    for (std::size_t i = 0; i < fns.size(); ++i)
      for (int v : f.act(fns[i], x)) local[v] = 1;
#pragma omp critical
    for (int i = 0; i < size; ++i) covered[i] |= local[i];
  }
  return covered;
}

CoverageResult superfinitary_test(const SetFunctor& f, int n, const std::vector<int>& probes) {
  CoverageResult res;
  for (int x : probes) {
    auto cov = coverage(f, n, x);
    auto it = std::find(cov.begin(), cov.end(), 0);
    if (it != cov.end()) {
      res.verdict = colimit::Verdict::FailCertified;
      res.failing_x = x;
      res.uncovered = static_cast<int>(it - cov.begin());
      return res;
    }
  }
  return res;
}

GeneratedSubfunctor generate_FnA(const SetFunctor& f, int n, const std::vector<int>& a, const std::vector<int>& probes) {
  for (int q : a) require(q >= 0 && q < f.size(n), "generate_FnA: A must be a subset of F(n)");
  GeneratedSubfunctor out;
  out.probes = probes;
  for (int x : probes) {
    std::set<int> vals;
    for (const FinFn& g : all_functions(n, x)) {
      const FinFn t = f.act(g, x);
      for (int q : a) vals.insert(t[q]);
    }
    out.values.emplace_back(vals.begin(), vals.end());
  }
  out.closed = true;
  for (std::size_t i = 0; i < probes.size() && out.closed; ++i)
    for (std::size_t j = 0; j < probes.size() && out.closed; ++j)
      for (const FinFn& h : all_functions(probes[i], probes[j])) {
        const FinFn t = f.act(h, probes[j]);
        for (int v : out.values[i])
          if (!std::binary_search(out.values[j].begin(), out.values[j].end(), t[v])) {
            out.closed = false;
            break;
          }
        if (!out.closed) break;
      }
  return out;
}

// ---------------------------------------------------------------- natural endomorphisms

namespace {

class EndoSearch {
 public:
  EndoSearch(const SetFunctor& f, int m) : m_(m) {
    sizes_.resize(m + 1);
    for (int k = 0; k <= m; ++k) sizes_[k] = f.size(k);
    out_.resize(m + 1);
    for (int k = 0; k <= m; ++k)
      for (int kp = 0; kp <= m; ++kp)
        for (const FinFn& g : all_functions(k, kp)) out_[k].emplace_back(kp, f.act(g, kp));
    val_.resize(m + 1);
    for (int k = 0; k <= m; ++k) val_[k].assign(sizes_[k], -1);
    for (int k = m; k >= 0; --k)
      for (int e = sizes_[k] - 1; e >= 0; --e) order_.emplace_back(k, e);
  }

  std::size_t variables() const { return order_.size(); }
  int candidates(std::size_t pos) const { return sizes_[order_[pos].first]; }

  bool assign_pos(std::size_t pos, int v) { return assign(order_[pos].first, order_[pos].second, v); }

  bool assign(int k, int e, int v) {
    work_.clear();
    work_.push_back({k, e, v});
    while (!work_.empty()) {
      auto [a, x, w] = work_.back();
      work_.pop_back();
      if (val_[a][x] >= 0) {
        if (val_[a][x] != w) return false;
        continue;
      }
      val_[a][x] = w;
      trail_.emplace_back(a, x);
      for (const auto& [kp, t] : out_[a]) work_.push_back({kp, t[x], t[w]});
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [k, e] = trail_.back();
      trail_.pop_back();
      val_[k][e] = -1;
    }
  }

  void run(std::size_t pos, std::vector<Family>& out) {
    while (pos < order_.size() && val_[order_[pos].first][order_[pos].second] >= 0) ++pos;
    if (pos == order_.size()) {
      out.push_back(val_);
      return;
    }
    for (int v = 0; v < candidates(pos); ++v) {
      auto m = mark();
      if (assign_pos(pos, v)) run(pos + 1, out);
      undo(m);
    }
  }

 private:
  struct Work {
    int k, e, v;
  };
  int m_;
  std::vector<int> sizes_;
  std::vector<std::vector<std::pair<int, FinFn>>> out_;
  Family val_;
  std::vector<std::pair<int, int>> order_, trail_;
  std::vector<Work> work_;
};

}  // namespace

namespace serial {
std::vector<Family> natural_endos(const SetFunctor& f, int m) {
  std::vector<Family> out;
  EndoSearch s(f, m);
  s.run(0, out);
  return out;
}
}  // namespace serial

std::vector<Family> natural_endos(const SetFunctor& f, int m) {
  EndoSearch probe(f, m);
  if (probe.variables() == 0) return serial::natural_endos(f, m);
  const int branches = probe.candidates(0);
  std::vector<std::vector<Family>> parts(branches);
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < branches; ++v) {
    EndoSearch s(f, m);
    if (s.assign_pos(0, v)) s.run(1, parts[v]);
  }
  std::vector<Family> out;
  for (auto& p : parts)
    for (auto& fam : p) out.push_back(std::move(fam));
  return out;
}

std::vector<Family> powfin_endo_probe(int m) {
  require(m >= 0 && m <= 4, "powfin_endo_probe: level bound must be in 0..4");
  return natural_endos(powfin(), m);
}

}  // namespace finbound::superfin
