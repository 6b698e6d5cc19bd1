#pragma once

// Infinite objects described by decision procedures. Each kind exposes a
// finite window (a genuine subobject holding the first `window` elements in
// canonical order) and answers hom questions either exactly or with an
// exhaustion flag.

#include <string>
#include <variant>
#include <vector>

#include "finbound/cats.hpp"

namespace finbound::cats {

enum class SymbolicKind {
  Ray,          // vertices N, edges n -> n+1
  LoopRay,      // vertex 0 with a loop, plus the ray 1 -> 2 -> 3 -> ...
  CycleFamily,  // coproduct of C_p over all primes p, laid out in prime order
};

inline constexpr int kDefaultWindow = 32;

struct SymbolicObject {
  SymbolicKind kind = SymbolicKind::Ray;
  int window = kDefaultWindow;

  Category category() const;
  std::string name() const;
  /// The finite subobject holding the first `window` elements. For
  /// CycleFamily: the prime cycles whose cumulative size fits.
  Obj window_object() const;
  /// Primes whose cycles lie in the window (CycleFamily only).
  std::vector<int> window_primes() const;

  bool operator==(const SymbolicObject&) const = default;
};

SymbolicObject ray(int window = kDefaultWindow);
SymbolicObject loop_ray(int window = kDefaultWindow);
SymbolicObject cycle_family(int window = kDefaultWindow);

using AnyObject = std::variant<Obj, SymbolicObject>;

std::string object_name(const AnyObject& a);

/// A possibly truncated answer. `exhausted` means elements may exist beyond
/// the window that are not listed.
template <class T>
struct Windowed {
  std::vector<T> items;
  bool exhausted = false;
};

/// Homs from a finite X into the window of A.
Windowed<Mor> hom_into(const Obj& x, const SymbolicObject& a);
/// Exact decision of hom(X, A) != empty.
bool hom_exists_into(const Obj& x, const SymbolicObject& a);
/// Finitely generated subobjects of A with at most `bound` elements, as monos
/// into the window. Always flagged exhausted (translates escape the window).
Windowed<Mor> subobjects_fg(const SymbolicObject& a, int bound);

/// Chain of monos D_0 -> D_1 -> ... ; links[i] : D_i -> D_{i+1}.
struct Chain {
  std::vector<Obj> objects;
  std::vector<Mor> links;
};

/// Cocone over a chain; legs land in the apex (its window when symbolic).
struct Cocone {
  Chain chain;
  AnyObject apex;
  std::vector<Mor> legs;
};

/// Target object of the legs: the apex itself or its window.
const Obj& leg_target(const Cocone& c);
Obj leg_target_copy(const Cocone& c);

/// D_i -> D_j (i <= j) as a composite of links.
Mor chain_map(const Chain& c, int i, int j);

/// Colimit of a finite chain: the last object, with forward composites.
Cocone chain_colimit(const Chain& c);

/// C_2 -> C_2+C_3 -> ... (k objects) with formal colimit CycleFamily.
Cocone prime_cycle_chain(int k);
/// P_1 -> P_2 -> ... -> P_k with formal colimit Ray.
Cocone path_chain(int k);

}  // namespace finbound::cats
