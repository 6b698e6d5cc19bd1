#pragma once

// Finite-dimensional vector spaces over F_q (q prime; 2 and 3 are the cases
// exercised). A linear map F_q^n -> F_q^m is an m x n matrix acting on
// column vectors.

#include <vector>

namespace finbound::fqvec {

using Vec = std::vector<int>;
using Matrix = std::vector<std::vector<int>>;  // row-major

struct LinMap {
  int q = 2;
  int dom_dim = 0;
  int cod_dim = 0;
  Matrix a;  // cod_dim rows, dom_dim columns

  bool operator==(const LinMap&) const = default;
};

LinMap make_map(int q, int dom_dim, int cod_dim, Matrix a);
LinMap identity(int q, int dim);
/// g after f.
LinMap compose(const LinMap& g, const LinMap& f);
Vec apply(const LinMap& f, const Vec& v);

int rank(int q, Matrix a);
/// Inverse of a square invertible matrix over F_q.
Matrix inverse(int q, const Matrix& a);
/// Invertible dim x dim matrix whose first r columns are a basis of the span
/// of `columns` (r = rank), completed by standard basis vectors.
Matrix complete_basis(int q, int dim, const std::vector<Vec>& columns);

bool is_injective(const LinMap& f);

/// Idempotent u : cod -> cod with image Im(m) and u . m = m, built from a
/// basis of Im(m) completed to a basis of the whole space.
LinMap projection_onto_image(const LinMap& m);

/// b = b' . f . b with dom(b') = F_q^rank(b).
struct SplitWitness {
  LinMap bprime;
  LinMap f;
};
SplitWitness split_through_image(const LinMap& b);

}  // namespace finbound::fqvec
