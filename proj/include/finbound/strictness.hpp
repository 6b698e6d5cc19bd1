#pragma once

// Finitary morphisms, strictness squares b = b'.f.b, atoms of presheaves on
// finite groupoids, and certificates that certain infinite objects have no
// finitary endomorphism.

#include <optional>
#include <string>
#include <vector>

#include "finbound/fqvec.hpp"
#include "finbound/symbolic.hpp"

namespace finbound::strictness {

using cats::AnyObject;
using cats::Mor;
using cats::Obj;
using cats::SymbolicObject;

/// u = w . v through the finite object C = cod(v).
struct FinitaryMorWitness {
  Mor u;
  Mor v;
  Mor w;
  bool holds() const;
};

/// Endomorphisms of the graph-like symbolic objects.
enum class SymbolicEndoKind {
  Identity,
  Shift,     // n -> n+1 on the ray part (LoopRay keeps 0 fixed)
  Constant,  // everything to vertex 0 (LoopRay only)
};

struct SymbolicEndo {
  SymbolicObject a;
  SymbolicEndoKind kind = SymbolicEndoKind::Identity;

  int operator()(int vertex) const;
  std::string name() const;
  /// Restriction to the window; the last ray vertex has nowhere to go under
  /// Shift, so the restriction is taken on window minus one vertex.
  Mor restrict_to_window() const;
};

/// Homs Path_k -> Ray: each one is i -> s+i for some start s.
struct RayAdvanceRow {
  int k = 0;
  std::size_t homs_in_window = 0;
  bool all_advance_by_one = false;
};

struct RayAdvanceCertificate {
  int window = 0;
  std::vector<RayAdvanceRow> rows;
  bool holds() const;
};

struct FinitaryMorResult {
  std::optional<FinitaryMorWitness> witness;
  bool exhausted = false;
  std::optional<RayAdvanceCertificate> certificate;
};

/// Finite u: the image factorization, when the image fits in `bound`.
/// No factorization through a smaller object exists, so a larger image is
/// reported as exhaustion.
FinitaryMorResult finitary_morphism_witness(const Mor& u, int bound);
/// Symbolic endo: the constant LoopRay endo factors through the loop vertex;
/// Ray-type identity and shift are exhausted with the advance certificate.
FinitaryMorResult finitary_morphism_witness(const SymbolicEndo& u, int bound);

RayAdvanceCertificate ray_advance_certificate(int max_k = 8, int window = cats::kDefaultWindow);

/// b : B -> A, b' : B' -> A, f : A -> B' with b = b'.f.b.
struct StrictnessWitness {
  Mor b;
  Mor bprime;
  Mor f;
  std::string construction;
  bool holds() const;
};

struct StrictnessResult {
  std::optional<StrictnessWitness> witness;
  bool exhausted = false;
};

/// Constructive splits: FinSet (image plus retraction), groupoid presheaves
/// (orbits meeting Im b kept, the other orbits folded onto a target orbit),
/// otherwise a search over subobjects containing Im b with a retraction.
StrictnessResult strictness_witness(const Mor& b, int bound);
/// Symbolic codomain: always exhausted.
StrictnessResult strictness_witness(const Obj& b_dom, const SymbolicObject& a, int bound);

struct LinStrictnessWitness {
  fqvec::LinMap b;
  fqvec::LinMap bprime;
  fqvec::LinMap f;
  bool holds() const;
};
LinStrictnessWitness strictness_witness(const fqvec::LinMap& b);

/// A finitary endomorphism of A with its factorization. For symbolic A the
/// factorization is checked on the window.
struct EndoWitness {
  std::string description;
  FinitaryMorWitness factorization;
};

struct SemiStrictResult {
  std::optional<EndoWitness> witness;
  bool exhausted = false;
};

SemiStrictResult semistrictness_witness(const AnyObject& a, int bound);

/// Finitary u : A -> A with u.m = m for a mono m into a finite A.
struct FixedSubobjectWitness {
  Mor m;
  Mor u;
  FinitaryMorWitness factorization;
  bool holds() const;
};
std::optional<FixedSubobjectWitness> fixed_subobject_witness(const Mor& m, int bound);

struct LinFixedWitness {
  fqvec::LinMap m;
  fqvec::LinMap u;
  bool holds() const;
};
LinFixedWitness fixed_subobject_witness(const fqvec::LinMap& m);

/// Subgroups of the vertex group G(x, x), each as a sorted arrow list.
std::vector<std::vector<int>> vertex_subgroups(const FiniteGroupoid& g, int x);
/// H \ G(-, x): the representable at x modulo left multiplication by H.
Obj coset_presheaf(std::shared_ptr<const FiniteGroupoid> g, int x, const std::vector<int>& h);
/// Quotients of representables, one per isomorphism class.
std::vector<Obj> atoms_of_presheaves(std::shared_ptr<const FiniteGroupoid> g);
/// No subobjects besides the empty one and itself, and nonempty.
bool is_atom(const Obj& x);

/// The generated subobjects X^x, one per distinct element set.
std::vector<Mor> decompose_into_atoms(const Obj& x);

struct NoFinitaryEndoCertificate {
  SymbolicObject a;
  bool refused = false;
  std::string reason;
  // CycleFamily: hom counts between prime cycles.
  std::vector<int> primes;
  std::vector<std::vector<std::size_t>> prime_hom_table;
  // Ray: advance table.
  std::optional<RayAdvanceCertificate> ray;
  /// The inference from the checked instances to the claim (not machine-checked).
  std::string inference;
  bool holds = false;
};

NoFinitaryEndoCertificate no_finitary_endo_certificate(const SymbolicObject& a);

}  // namespace finbound::strictness
