#include "finbound/hausdorff.hpp"

#include <algorithm>
#include <bit>

#include "finbound/util.hpp"

namespace finbound::hausdorff {

std::optional<std::string> axiom_violation(const FinMetricSpace& x) {
  if (static_cast<int>(x.d.size()) != x.n) return "matrix has wrong row count";
  for (const auto& row : x.d)
    if (static_cast<int>(row.size()) != x.n) return "matrix is not square";
  for (int i = 0; i < x.n; ++i) {
    if (x.d[i][i] != Q(0)) return "d(x,x) != 0 at " + std::to_string(i);
    for (int j = 0; j < x.n; ++j) {
      const Q& v = x.d[i][j];
      if (v != x.d[j][i]) return "asymmetric at " + std::to_string(i) + "," + std::to_string(j);
      if (v < Q(0) || v > Q(1)) return "distance outside [0,1] at " + std::to_string(i) + "," + std::to_string(j);
      if (i != j && v == Q(0)) return "distinct points at distance 0: " + std::to_string(i) + "," + std::to_string(j);
      for (int k = 0; k < x.n; ++k)
        if (v > x.d[i][k] + x.d[k][j])
          return "triangle fails at " + std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(j);
    }
  }
  return std::nullopt;
}

FinMetricSpace make_space(std::vector<std::vector<Q>> d) {
  FinMetricSpace x{static_cast<int>(d.size()), std::move(d)};
  if (auto bad = axiom_violation(x)) throw PreconditionError("metric space: " + *bad);
  return x;
}

FinMetricSpace random_space(std::mt19937& rng, int n, int denom) {
  require(n >= 0 && denom >= 1, "random_space: bad arguments");
  std::uniform_int_distribution<int> num(1, denom);
  std::vector<std::vector<Q>> d(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = Q(num(rng), denom);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return make_space(std::move(d));
}

bool is_nonexpanding(const FinMetricSpace& dom, const FinMetricSpace& cod, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != dom.n) return false;
  for (int v : f)
    if (v < 0 || v >= cod.n) return false;
  for (int i = 0; i < dom.n; ++i)
    for (int j = i + 1; j < dom.n; ++j)
      if (cod.d[f[i]][f[j]] > dom.d[i][j]) return false;
  return true;
}

bool is_isometric_embedding(const NonexpandingMap& f) {
  for (int i = 0; i < f.dom.n; ++i)
    for (int j = i + 1; j < f.dom.n; ++j)
      if (f.cod.d[f.f[i]][f.f[j]] != f.dom.d[i][j]) return false;
  return true;
}

NonexpandingMap make_map(FinMetricSpace dom, FinMetricSpace cod, std::vector<int> f) {
  require(is_nonexpanding(dom, cod, f), "make_map: not a nonexpanding map");
  return {std::move(dom), std::move(cod), std::move(f)};
}

NonexpandingMap identity_map(const FinMetricSpace& x) {
  std::vector<int> f(x.n);
  for (int i = 0; i < x.n; ++i) f[i] = i;
  return {x, x, f};
}

NonexpandingMap compose(const NonexpandingMap& g, const NonexpandingMap& f) {
  require(f.cod == g.dom, "compose: codomain/domain mismatch");
  std::vector<int> h(f.dom.n);
  for (int i = 0; i < f.dom.n; ++i) h[i] = g.f[f.f[i]];
  return {f.dom, g.cod, h};
}

namespace {

void require_subset(const FinMetricSpace& x, Subset m, const char* what) {
  require(m != 0, std::string(what) + ": empty subset");
  require(x.n >= 32 || (m >> x.n) == 0, std::string(what) + ": subset outside the space");
}

}  // namespace

Q point_set_dist(const FinMetricSpace& x, int p, Subset m) {
  require_subset(x, m, "point_set_dist");
  require(p >= 0 && p < x.n, "point_set_dist: point outside the space");
  Q best(1);
  for (Subset r = m; r; r &= r - 1) best = std::min(best, x.d[p][std::countr_zero(r)]);
  return best;
}

Q hausdorff_dist(const FinMetricSpace& x, Subset m, Subset n) {
  require_subset(x, m, "hausdorff_dist");
  require_subset(x, n, "hausdorff_dist");
  Q worst(0);
  for (Subset r = m; r; r &= r - 1) worst = std::max(worst, point_set_dist(x, std::countr_zero(r), n));
  for (Subset r = n; r; r &= r - 1) worst = std::max(worst, point_set_dist(x, std::countr_zero(r), m));
  return worst;
}

namespace {

FinMetricSpace h_obj_impl(const FinMetricSpace& x, bool parallel) {
  require(x.n <= kMaxPoints, "H_obj: space too large");
  const int m = (1 << x.n) - 1;
  std::vector<std::vector<Q>> d(m, std::vector<Q>(m, Q(0)));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) d[i][j] = hausdorff_dist(x, subset_of_point(i), subset_of_point(j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) d[i][j] = d[j][i];
  return {m, std::move(d)};
}

}  // namespace

FinMetricSpace H_obj(const FinMetricSpace& x) { return h_obj_impl(x, true); }

namespace serial {
FinMetricSpace H_obj(const FinMetricSpace& x) { return h_obj_impl(x, false); }
}  // namespace serial

Subset direct_image(const NonexpandingMap& f, Subset m) {
  Subset out = 0;
  for (Subset r = m; r; r &= r - 1) out |= Subset(1) << f.f[std::countr_zero(r)];
  return out;
}

NonexpandingMap H_mor(const NonexpandingMap& f) {
  FinMetricSpace hd = H_obj(f.dom), hc = H_obj(f.cod);
  std::vector<int> g(hd.n);
  for (int i = 0; i < hd.n; ++i) g[i] = point_of_subset(direct_image(f, subset_of_point(i)));
  return {std::move(hd), std::move(hc), std::move(g)};
}

bool BoundednessWitness::holds() const {
  if (preimages.size() != m0.size()) return false;
  if (!is_isometric_embedding(inclusion) || inclusion.cod != x) return false;
  for (std::size_t i = 0; i < m0.size(); ++i)
    if (preimages[i] == 0 || direct_image(inclusion, preimages[i]) != m0[i]) return false;
  return true;
}

BoundednessWitness boundedness_witness(const FinMetricSpace& x, const std::vector<Subset>& m0) {
  BoundednessWitness w;
  w.x = x;
  w.m0 = m0;
  for (Subset s : m0) {
    require_subset(x, s, "boundedness_witness");
    w.m |= s;
  }
  std::vector<int> points, index(x.n, -1);
  for (Subset r = w.m; r; r &= r - 1) {
    index[std::countr_zero(r)] = static_cast<int>(points.size());
    points.push_back(std::countr_zero(r));
  }
  std::vector<std::vector<Q>> d(points.size(), std::vector<Q>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) d[i][j] = x.d[points[i]][points[j]];
  w.inclusion = {FinMetricSpace{static_cast<int>(points.size()), std::move(d)}, x, points};
  for (Subset s : m0) {
    Subset pre = 0;
    for (Subset r = s; r; r &= r - 1) pre |= Subset(1) << index[std::countr_zero(r)];
    w.preimages.push_back(pre);
  }
  return w;
}

}  // namespace finbound::hausdorff
