#pragma once

// Orbit-finite nominal sets. Names are the integers 0, 1, 2, ...; a finite
// pool {0..N-1} is enough to decide equivariance for supports of size <= n
// once N >= 2n+2. A single orbit is V^{#n} modulo a subgroup S of Perm(n):
// the element [t] of an injective tuple t is the class {t.sigma | sigma in S}.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finbound/colimit.hpp"

namespace finbound::nominal {

/// One-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
/// p after q.
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
/// All permutations of n in lexicographic order.
std::vector<Perm> all_perms(int n);
/// The subgroup generated by gens, sorted.
std::vector<Perm> closure(int n, const std::vector<Perm>& gens);
/// Transposition of names a and b on the pool {0..pool-1}.
Perm transposition(int pool, int a, int b);

/// Every subgroup of Perm(n) exactly once, as sorted element lists, ordered
/// by size and then lexicographically. n <= 5.
std::vector<std::vector<Perm>> subgroups_of_Sn(int n);
namespace serial {
std::vector<std::vector<Perm>> subgroups_of_Sn(int n);
}  // namespace serial

struct OrbitSpec {
  int n = 0;
  std::vector<Perm> generators;
  std::vector<Perm> group;  // closure of generators, sorted

  bool operator==(const OrbitSpec& o) const { return n == o.n && group == o.group; }
};

OrbitSpec orbit_spec(int n, std::vector<Perm> generators);
/// Orbit given by a full subgroup; generators are picked greedily.
OrbitSpec orbit_from_group(int n, const std::vector<Perm>& group);
/// P_n: n-element name sets.
OrbitSpec pn_orbit(int n);
/// V^{#n}: injective n-tuples.
OrbitSpec tuples_orbit(int n);

using Tuple = std::vector<int>;

/// Least tuple among t.sigma, sigma in S.
Tuple canonical(const OrbitSpec& o, const Tuple& t);

struct NomElement {
  int orbit = 0;
  Tuple t;  // canonical
  bool operator==(const NomElement&) const = default;
  auto operator<=>(const NomElement&) const = default;
};

struct NominalSetSpec {
  std::vector<OrbitSpec> orbits;
  bool operator==(const NominalSetSpec&) const = default;
};

NominalSetSpec one_point();
/// P_{n1} + P_{n2} + ...
NominalSetSpec p_sum(const std::vector<int>& ns);
NominalSetSpec single(const OrbitSpec& o);
NominalSetSpec coproduct(const NominalSetSpec& a, const NominalSetSpec& b);
int max_support(const NominalSetSpec& x);

/// Sorted support of an element.
std::vector<int> support(const NomElement& x);
/// pi . x for a permutation of the pool (pi must cover every name of x).
NomElement act(const NominalSetSpec& x, const Perm& pi, const NomElement& e);
NomElement make_element(const NominalSetSpec& x, int orbit, const Tuple& t);
/// The element [0, 1, ..., n-1] of an orbit.
NomElement representative(const NominalSetSpec& x, int orbit);
/// Every element whose support lies in {0..pool-1}, sorted.
std::vector<NomElement> elements(const NominalSetSpec& x, int pool);

using ElementMap = std::function<NomElement(const NomElement&)>;

/// Smallest pool that decides equivariance between dom and cod.
int required_pool(const NominalSetSpec& dom, const NominalSetSpec& cod);
/// True iff f(tau . x) == tau . f(x) for every element x over the pool and
/// every transposition tau of pool names. Throws when the pool is too small.
bool equivariant_map_check(const NominalSetSpec& dom, const NominalSetSpec& cod, const ElementMap& f, int pool);

/// An equivariant map, given by the images of orbit representatives.
struct EquivariantMap {
  NominalSetSpec dom;
  NominalSetSpec cod;
  std::vector<NomElement> images;

  NomElement operator()(const NomElement& x) const;
  ElementMap as_function() const;
  bool operator==(const EquivariantMap&) const = default;
};

/// Images y of the representative of `o` that define an equivariant map:
/// supp(y) within {0..n-1} and y fixed by S.
std::vector<NomElement> admissible_images(const OrbitSpec& o, const NominalSetSpec& cod);
/// Checked construction.
EquivariantMap make_map(NominalSetSpec dom, NominalSetSpec cod, std::vector<NomElement> images);
EquivariantMap identity_map(const NominalSetSpec& x);
/// g after f.
EquivariantMap compose(const EquivariantMap& g, const EquivariantMap& f);
std::vector<EquivariantMap> equivariant_maps(const NominalSetSpec& dom, const NominalSetSpec& cod);

/// Nom(P_n, X) nonempty: candidate search, confirmed by equivariant_map_check
/// over a pool of 2n+2 names.
bool hom_exists_Pn(int n, const NominalSetSpec& x);

/// Isomorphism of single orbits by explicit bijection search.
std::optional<EquivariantMap> orbit_isomorphism(const OrbitSpec& a, const OrbitSpec& b);
bool orbits_isomorphic(const OrbitSpec& a, const OrbitSpec& b);

/// One orbit V^{#n}/S per isomorphism class. n <= 4.
std::vector<OrbitSpec> single_orbit_enumerate(int n);

using TupleEquivalence = std::function<bool(const Tuple&, const Tuple&)>;
/// S = {sigma | t.sigma ~ t}. Throws unless ~ is an equivalence that is
/// equivariant and support-preserving over a pool of 2n+2 names.
std::vector<Perm> subgroup_from_quotient(int n, const TupleEquivalence& eq);
/// t ~ u iff u = t.sigma for some sigma in S.
TupleEquivalence equivalence_from_subgroup(const std::vector<Perm>& s);

/// F X = 1 + X when Nom(P_n, X) is empty for some n, else 1.
struct NomCounterexample {
  NominalSetSpec x;
  int search_bound = 4;
  std::optional<int> missing_n;  // least n in 1..bound with no hom P_n -> X
  NominalSetSpec value;
  std::string disclaimer;
};
NomCounterexample nom_counterexample(const NominalSetSpec& x, int bound = 4);
/// F f : F X -> F Y (id + f, or the map to 1).
EquivariantMap nom_counterexample_map(const EquivariantMap& f, int bound = 4);

/// supp(f(Y)) == supp(Y) for every element over the pool, with the
/// transposition step recorded: for v in supp(f(Y)) and w in Y, (v w) fixes
/// Y and therefore moves v to w inside supp(f(Y)).
struct RigidityReport {
  int pool = 0;
  std::size_t elements_checked = 0;
  std::size_t transposition_steps = 0;
  bool rigid = false;
};
RigidityReport support_rigidity_check(const EquivariantMap& f, int pool = 10);
/// Every equivariant endomorphism of P_1 + ... + P_k, each checked for rigidity.
struct RigiditySweep {
  int k = 0;
  std::size_t candidates = 0;
  bool all_rigid = false;
  std::vector<RigidityReport> reports;
};
RigiditySweep rigidity_sweep(int k, int pool = 10);

/// b = b'.f.b with B' = Im(b) + C_1, C_1 holding one orbit per isomorphism
/// class of the orbits outside Im(b).
struct CountableStrictnessWitness {
  EquivariantMap b;
  EquivariantMap bprime;
  EquivariantMap f;
  bool holds() const;
};
CountableStrictnessWitness countable_strictness_witness(const EquivariantMap& b);

/// F on the chain P_1 -> P_1+P_2 -> ... truncated at k: F(D_k) = 1 + D_k has
/// k+1 orbits, F(colim) = 1 has one, and the point is merged with P_1.
struct NomFinitarityCertificate {
  int k = 0;
  int lhs_orbits = 0;
  int rhs_orbits = 0;
  std::vector<int> homs_into_colimit;  // n with P_n -> D_n checked
  bool persists = false;
  colimit::Verdict verdict = colimit::Verdict::PassProbeLimited;
};
NomFinitarityCertificate nom_finitarity_certificate(int k);

}  // namespace finbound::nominal
