#pragma once

// Set functors given by finite data on the cardinals 0..n, evaluated on
// finite sets by the colimit formula (left Kan extension), together with
// black-box set functors and the super-finitary coverage test.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finbound/colimit.hpp"
#include "finbound/util.hpp"

namespace finbound::superfin {

/// Values F0..Fn and, for every function g : k -> k' with k, k' <= n, the
/// map Fg : Fk -> Fk'.
class Presentation {
 public:
  using ActionFn = std::function<std::vector<int>(int k, int kp, const FinFn& g)>;

  /// Checked construction: tables total, in range, and functorial.
  static Presentation make(int n, std::vector<int> values, const ActionFn& action);
  /// Same data without the functoriality check (for derived presentations).
  static Presentation make_unchecked(int n, std::vector<int> values, const ActionFn& action);

  int n() const { return n_; }
  int value(int k) const { return values_[k]; }
  const std::vector<int>& values() const { return values_; }
  /// Fg for g : k -> kp.
  const std::vector<int>& act(int k, int kp, const FinFn& g) const;

  /// First violated law, if any.
  std::optional<std::string> check_laws() const;

  bool operator==(const Presentation& o) const {
    return n_ == o.n_ && values_ == o.values_ && action_ == o.action_;
  }

 private:
  int n_ = 0;
  std::vector<int> values_;
  // action_[k][kp][function_index(g, kp)]
  std::vector<std::vector<std::vector<std::vector<int>>>> action_;
};

/// Truncated identity (Fk = k).
Presentation identity_presentation(int n);
/// Constant functor with value a (all maps identities).
Presentation constant_presentation(int n, int a);
/// Truncated hom-functor Set(m, -), elements listed as in all_functions.
Presentation hom_presentation(int m, int n);

/// Zig-zag classes of elements (k, q, f : k -> x).
struct Evaluation {
  int x = 0;
  int classes = 0;
  std::vector<int> offset;    // first element id of each level
  std::vector<int> class_of;  // element id -> class
  struct Rep {
    int k;
    int q;
    FinFn f;
  };
  std::vector<Rep> reps;  // one representative per class (first by id)

  int class_of_element(int k, int q, const FinFn& f) const;
};

Evaluation evaluate(const Presentation& p, int x);
/// Action of h : x -> y on classes.
FinFn evaluate_map(const Presentation& p, const Evaluation& ex, const Evaluation& ey, const FinFn& h);
FinFn evaluate_map(const Presentation& p, const FinFn& h, int x, int y);

/// epsilon : Fn x X^n -> F X, indexed by q * x^n + function_index(f).
struct Epsilon {
  FinFn table;
  int classes = 0;
  bool surjective = false;
};
Epsilon canonical_epsilon(const Presentation& p, int x);

Presentation product(const Presentation& a, const Presentation& b);
Presentation coproduct(const Presentation& a, const Presentation& b);

struct SubPresentation {
  Presentation sub;
  /// embed[k][i]: the element of the ambient Fk behind sub element i.
  std::vector<std::vector<int>> embed;
};
/// Keeps the elements selected by `keep(k, q)`. Throws PreconditionError when
/// the selection is not closed under the action.
SubPresentation subfunctor_pullback(const Presentation& p, const std::function<bool(int k, int q)>& keep);

/// Quotient by the congruence generated by the given (level, q1, q2) pairs.
Presentation quotient(const Presentation& p, const std::vector<std::tuple<int, int, int>>& pairs);

/// A set functor known only through its values on finite cardinals.
struct SetFunctor {
  std::string name;
  std::function<int(int x)> size;
  /// F h : F x -> F y for h : x -> y.
  std::function<FinFn(const FinFn& h, int y)> act;
};

SetFunctor identity_set_functor();
/// Nonempty finite subsets; element i of P x is the subset with bitmask i+1.
SetFunctor powfin();
SetFunctor hom_set_functor(int m);
/// Kan evaluation of a presentation (evaluations are cached).
SetFunctor from_presentation(const Presentation& p);
/// Restriction of F to the cardinals 0..n.
Presentation truncate(const SetFunctor& f, int n);

struct CoverageResult {
  colimit::Verdict verdict = colimit::Verdict::PassProbeLimited;
  int failing_x = -1;
  int uncovered = -1;  // element of F(failing_x) outside every Ff[Fn]
};

/// FX == union of Ff[Fn] over f : n -> X for every probe cardinal.
CoverageResult superfinitary_test(const SetFunctor& f, int n, const std::vector<int>& probes);
/// Covered elements of F x: OpenMP-parallel over f : n -> x.
std::vector<char> coverage(const SetFunctor& f, int n, int x);

namespace serial {
std::vector<char> coverage(const SetFunctor& f, int n, int x);
}  // namespace serial

struct GeneratedSubfunctor {
  std::vector<int> probes;
  std::vector<std::vector<int>> values;  // sorted elements of F_{n,A} x per probe
  bool closed = false;                   // closed under F h for all h between probes
};
GeneratedSubfunctor generate_FnA(const SetFunctor& f, int n, const std::vector<int>& a, const std::vector<int>& probes);

/// Families (alpha_k : Fk -> Fk)_{k <= m} natural for every function between
/// cardinals <= m. Each family is listed level by level.
using Family = std::vector<std::vector<int>>;
std::vector<Family> natural_endos(const SetFunctor& f, int m);
namespace serial {
std::vector<Family> natural_endos(const SetFunctor& f, int m);
}  // namespace serial

/// natural_endos(powfin(), m) for m <= 4.
std::vector<Family> powfin_endo_probe(int m);

}  // namespace finbound::superfin
