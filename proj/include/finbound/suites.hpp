#pragma once

// Demo suites producing replayable certificates, and the replay checker.
//
// A certificate is {"kind", "params", "verdict", "witness"}. `params` carries
// everything needed to recompute it, including the bounds that were in force,
// so replay never consults command-line options.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "finbound/serialize.hpp"

namespace finbound::suites {

inline constexpr const char* kSchema = "finbound-report/1";

/// Malformed certificate or report.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 1;
  /// Size bound for enumerated subobjects and witness searches.
  int bound = 4;
};

/// Every suite name except "all", sorted.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// {"name", "checks", "ok"}; each check is {"id", "expected", "certificate", "ok"}.
json run_suite(const std::string& name, const Options& opt);
/// Full report over the given suites ("all" expands), ordered by suite name.
json run(const std::vector<std::string>& names, const Options& opt);

/// Recomputes a certificate from its kind and params.
json recompute(const json& certificate);

struct ReplayResult {
  std::string id;
  bool match = false;
  json diff;  // JSON patch from the recorded certificate to the recomputed one
  std::string verdict;
};

/// Accepts a single certificate, a check, a suite result or a whole report.
std::vector<ReplayResult> replay(const json& doc);

}  // namespace finbound::suites
