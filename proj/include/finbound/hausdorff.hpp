#pragma once

// Finite metric spaces of diameter <= 1 with exact rational distances, and
// the Hausdorff functor on them. Subsets are bitmasks over the points.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace finbound::hausdorff {

using Q = boost::rational<long long>;
using Subset = std::uint32_t;

/// Largest space H_obj accepts.
inline constexpr int kMaxPoints = 12;

struct FinMetricSpace {
  int n = 0;
  std::vector<std::vector<Q>> d;  // full symmetric matrix

  bool operator==(const FinMetricSpace&) const = default;
};

/// First failing axiom, if any.
std::optional<std::string> axiom_violation(const FinMetricSpace& x);
/// Checked construction.
FinMetricSpace make_space(std::vector<std::vector<Q>> d);
/// Random space with distances in (0, 1] of denominator `denom`, closed
/// under shortest paths so the triangle inequality holds.
FinMetricSpace random_space(std::mt19937& rng, int n, int denom = 10);

struct NonexpandingMap {
  FinMetricSpace dom;
  FinMetricSpace cod;
  std::vector<int> f;

  bool operator==(const NonexpandingMap&) const = default;
};

bool is_nonexpanding(const FinMetricSpace& dom, const FinMetricSpace& cod, const std::vector<int>& f);
bool is_isometric_embedding(const NonexpandingMap& f);
NonexpandingMap make_map(FinMetricSpace dom, FinMetricSpace cod, std::vector<int> f);
NonexpandingMap identity_map(const FinMetricSpace& x);
/// g after f.
NonexpandingMap compose(const NonexpandingMap& g, const NonexpandingMap& f);

/// d(x, M) = min over M. M nonempty.
Q point_set_dist(const FinMetricSpace& x, int p, Subset m);
/// max(sup_{a in M} d(a, N), sup_{b in N} d(b, M)). M, N nonempty.
Q hausdorff_dist(const FinMetricSpace& x, Subset m, Subset n);

/// H X: point i is the subset with mask i+1.
inline Subset subset_of_point(int i) { return static_cast<Subset>(i + 1); }
inline int point_of_subset(Subset s) { return static_cast<int>(s) - 1; }

FinMetricSpace H_obj(const FinMetricSpace& x);
namespace serial {
FinMetricSpace H_obj(const FinMetricSpace& x);
}  // namespace serial

/// Direct image M -> f[M].
Subset direct_image(const NonexpandingMap& f, Subset m);
NonexpandingMap H_mor(const NonexpandingMap& f);

/// M = union of the members of M0 with its inclusion m: M -> X; each member
/// of M0 is Hm of its preimage in M.
struct BoundednessWitness {
  FinMetricSpace x;
  std::vector<Subset> m0;
  Subset m = 0;
  NonexpandingMap inclusion;
  std::vector<Subset> preimages;  // subsets of M, one per member of M0
  bool holds() const;
};
BoundednessWitness boundedness_witness(const FinMetricSpace& x, const std::vector<Subset>& m0);

}  // namespace finbound::hausdorff
