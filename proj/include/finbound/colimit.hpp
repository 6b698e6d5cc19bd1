#pragma once

// Hom-reflection colimit tests, union tests and image unions over chains.

#include <optional>
#include <string>
#include <utility>

#include "finbound/symbolic.hpp"

namespace finbound::colimit {

/// PASS over a finite probe family is evidence, not proof; FAIL carries a
/// concrete counterexample. Exhausted: the finite prefix or window ran out
/// before a decision could be made.
enum class Verdict { PassProbeLimited, FailCertified, Exhausted };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Legs commute with the links: legs[i+1] . links[i] == legs[i].
bool cocone_commutes(const cats::Cocone& c);

struct ColimitTestResult {
  Verdict verdict = Verdict::PassProbeLimited;
  /// A morphism probe -> apex that factors through no leg.
  std::optional<cats::Mor> unfactorized;
  /// Two factorizations (through legs i and j) not merged by the chain.
  std::optional<std::pair<cats::Mor, cats::Mor>> unmerged;
  std::size_t morphisms_checked = 0;
  bool window_exhausted = false;
};

/// For every probe A and f : A -> apex, checks (1) f = c_i . g for some i and
/// g, and (2) any two such g are identified after pushing them to the end of
/// the chain.
ColimitTestResult reflect_colimit_test(const cats::Cocone& c, const std::vector<cats::Obj>& probes);

/// True iff the subobjects jointly cover every element (and, for graphs,
/// every edge) of target.
bool union_test(const std::vector<cats::Mor>& subobjects, const cats::Obj& target);

struct ImageUnion {
  std::vector<cats::Mor> images;  // Im(f . c_i)
  cats::Mor image_f;
  bool equal = false;  // Im f == union of the images
};

/// f must start at the legs' common target.
ImageUnion image_union(const cats::Cocone& c, const cats::Mor& f);

}  // namespace finbound::colimit
