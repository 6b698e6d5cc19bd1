#pragma once

// Functors between the computable categories, given as object and morphism
// maps, with boundedness witnesses and finitarity certificates.

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "finbound/colimit.hpp"

namespace finbound::functor {

using cats::AnyObject;
using cats::Category;
using cats::Mor;
using cats::Obj;
using cats::SymbolicObject;

struct FunctorHandle {
  std::string name;
  Category source = Category::finset();
  Category target = Category::finset();
  std::function<Obj(const Obj&)> on_obj;
  std::function<Mor(const Mor&)> on_mor;
  /// Optional: value on a symbolic object.
  std::function<AnyObject(const SymbolicObject&)> on_symbolic;
  /// Optional: F(m) for m : M -> A given as a map into A's window; lands in
  /// F(A), or in its window when F(A) is symbolic.
  std::function<Mor(const Mor&, const SymbolicObject&)> on_symbolic_mor;
};

AnyObject apply(const FunctorHandle& f, const AnyObject& a);
/// F(A) as a finite object; the window when F(A) is symbolic.
Obj apply_finite(const FunctorHandle& f, const AnyObject& a);
/// F(m) for m : M -> A (A finite, or m into A's window when A is symbolic).
Mor apply_mor(const FunctorHandle& f, const Mor& m, const AnyObject& a);

FunctorHandle identity_functor(const Category& c);

/// Un -> Un. F X = C_1 + X when some C_p has no hom into X, else C_1.
FunctorHandle un_counterexample();
/// Gra -> Gra. F X = 1 + X when X has no cycle and no infinite path, else 1.
FunctorHandle graph_counterexample();
/// The hom-functor Un(a, -) : Un -> FinSet, acting by postcomposition.
FunctorHandle un_hom_functor(const Obj& a);

/// For a finite unary algebra: a prime p with Un(C_p, X) empty, if any. Every
/// cycle length of X is at most |X|, so the first prime above |X| settles it.
std::optional<int> prime_without_hom(const Obj& x);

/// F(id) = id and F(g.f) = F(g).F(f) for every composable pair drawn from the
/// hom-sets between the given objects. Returns a description of the first
/// violation, or nullopt.
std::optional<std::string> check_functor_laws(const FunctorHandle& f, const std::vector<Obj>& objects);

struct BoundednessWitness {
  Mor m0;                         // M0 -> F(A)
  std::optional<Mor> m;           // M -> A (its window when A is symbolic)
  std::optional<Mor> mediating;   // M0 -> F(M) with F(m) . mediating = m0
  int bound = 0;
  std::size_t candidates_tried = 0;
  bool found() const { return m.has_value(); }
};

/// Searches finitely generated subobjects of A up to `bound`, smallest first.
BoundednessWitness finitely_bounded_witness(const FunctorHandle& f, const AnyObject& a, const Mor& m0, int bound);
/// Re-checks F(m) . mediating == m0.
bool verify(const FunctorHandle& f, const AnyObject& a, const BoundednessWitness& w);

struct FinitarityCertificate {
  std::string functor;
  std::string chain;
  int prefix_k = 0;
  int lhs_size = 0;                // |colim F(prefix)| = |F(D_k)|
  std::optional<int> rhs_size;     // |F(colimit)|; nullopt when infinite
  colimit::Verdict verdict = colimit::Verdict::PassProbeLimited;
  /// Elements of F(D_k) (sort, x, y) identified by the comparison map but
  /// kept apart by the chain.
  std::optional<std::tuple<int, int, int>> merged;
  bool persists = false;           // obstruction also present at k+1
};

/// The chain in `c` must have at least k+1 objects; its first k objects are
/// the prefix.
FinitarityCertificate finitarity_certificate(const FunctorHandle& f, const cats::Cocone& c, int k);

}  // namespace finbound::functor
