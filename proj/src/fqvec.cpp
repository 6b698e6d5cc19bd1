#include "finbound/fqvec.hpp"

#include "finbound/util.hpp"

namespace finbound::fqvec {

namespace {

int mod(int a, int q) { return ((a % q) + q) % q; }

int inv_mod(int a, int q) {
  a = mod(a, q);
  require(a != 0, "zero has no inverse");
  for (int x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw PreconditionError("field order must be prime");
}

/// Row-reduces in place; returns pivot columns.
std::vector<int> row_reduce(int q, Matrix& a) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const int s = inv_mod(a[r][c], q);
    for (int& v : a[r]) v = mod(v * s, q);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const int k = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - k * a[r][j], q);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinMap make_map(int q, int dom_dim, int cod_dim, Matrix a) {
  require(is_prime(q), "field order must be prime");
  require(static_cast<int>(a.size()) == cod_dim, "matrix row count must equal codomain dimension");
  for (auto& row : a) {
    require(static_cast<int>(row.size()) == dom_dim, "matrix column count must equal domain dimension");
    for (int& v : row) v = mod(v, q);
  }
  return LinMap{q, dom_dim, cod_dim, std::move(a)};
}

LinMap identity(int q, int dim) {
  Matrix a(dim, std::vector<int>(dim, 0));
  for (int i = 0; i < dim; ++i) a[i][i] = 1;
  return make_map(q, dim, dim, std::move(a));
}

LinMap compose(const LinMap& g, const LinMap& f) {
  require(g.q == f.q && g.dom_dim == f.cod_dim, "compose: dimension mismatch");
  Matrix a(g.cod_dim, std::vector<int>(f.dom_dim, 0));
  for (int i = 0; i < g.cod_dim; ++i)
    for (int j = 0; j < f.dom_dim; ++j) {
      int s = 0;
      for (int k = 0; k < g.dom_dim; ++k) s += g.a[i][k] * f.a[k][j];
      a[i][j] = mod(s, f.q);
    }
  return LinMap{f.q, f.dom_dim, g.cod_dim, std::move(a)};
}

Vec apply(const LinMap& f, const Vec& v) {
  require(static_cast<int>(v.size()) == f.dom_dim, "apply: dimension mismatch");
  Vec out(f.cod_dim, 0);
  for (int i = 0; i < f.cod_dim; ++i) {
    int s = 0;
    for (int j = 0; j < f.dom_dim; ++j) s += f.a[i][j] * v[j];
    out[i] = mod(s, f.q);
  }
  return out;
}

int rank(int q, Matrix a) { return static_cast<int>(row_reduce(q, a).size()); }

Matrix inverse(int q, const Matrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  Matrix aug(n, std::vector<int>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = mod(a[i][j], q);
    aug[i][n + i] = 1;
  }
  auto pivots = row_reduce(q, aug);
  require(static_cast<int>(pivots.size()) >= n && pivots[n - 1] == n - 1, "matrix is singular");
  Matrix inv(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Matrix complete_basis(int q, int dim, const std::vector<Vec>& columns) {
  std::vector<Vec> candidates = columns;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    candidates.push_back(e);
  }
  // Columns of the candidate matrix; pivots pick a basis greedily from the left.
  Matrix m(dim, std::vector<int>(candidates.size()));
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    require(static_cast<int>(candidates[c].size()) == dim, "complete_basis: vector dimension");
    for (int r = 0; r < dim; ++r) m[r][c] = mod(candidates[c][r], q);
  }
  Matrix reduced = m;
  auto pivots = row_reduce(q, reduced);
  Matrix basis(dim, std::vector<int>(dim));
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) basis[r][c] = m[r][pivots[c]];
  return basis;
}

bool is_injective(const LinMap& f) { return rank(f.q, f.a) == f.dom_dim; }

namespace {

std::vector<Vec> columns_of(const LinMap& m) {
  std::vector<Vec> cols(m.dom_dim, Vec(m.cod_dim));
  for (int i = 0; i < m.cod_dim; ++i)
    for (int j = 0; j < m.dom_dim; ++j) cols[j][i] = m.a[i][j];
  return cols;
}

}  // namespace

SplitWitness split_through_image(const LinMap& b) {
  const int q = b.q, n = b.cod_dim;
  const int r = rank(q, b.a);
  Matrix p = complete_basis(q, n, columns_of(b));
  Matrix pinv = inverse(q, p);
  Matrix bp(n, std::vector<int>(r));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) bp[i][j] = p[i][j];
  Matrix f(pinv.begin(), pinv.begin() + r);
  return SplitWitness{make_map(q, r, n, std::move(bp)), make_map(q, n, r, std::move(f))};
}

LinMap projection_onto_image(const LinMap& m) {
  SplitWitness s = split_through_image(m);
  return compose(s.bprime, s.f);
}

}  // namespace finbound::fqvec
