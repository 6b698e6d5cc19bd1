// finbound: run demo suites and replay certificates.
//
//   finbound run --suite all --seed 1 --bound 4 --json report.json
//   finbound replay report.json
//
// Exit codes: 0 everything as expected, 1 a verdict differs from its expected
// value (or a replay mismatches), 2 usage or schema error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "finbound/suites.hpp"

using finbound::json;
namespace suites = finbound::suites;

namespace {

int do_run(const std::vector<std::string>& names, const suites::Options& opt, const std::string& json_path,
           bool verbose) {
  json report;
  try {
    report = suites::run(names, opt);
  } catch (const finbound::PreconditionError& e) {
    std::cerr << "finbound: " << e.what() << "\n";
    return 2;
  }
  for (const auto& s : report.at("suites")) {
    std::cout << s.at("name").get<std::string>() << ": " << (s.at("ok").get<bool>() ? "ok" : "UNEXPECTED") << "\n";
    for (const auto& c : s.at("checks")) {
      const bool ok = c.at("ok").get<bool>();
      if (!verbose && ok) continue;
      std::cout << "  " << (ok ? "ok   " : "DIFF ") << c.at("id").get<std::string>() << "  "
                << c.at("certificate").at("verdict").get<std::string>() << " (expected "
                << c.at("expected").get<std::string>() << ")\n";
    }
  }
  const auto& sum = report.at("summary");
  std::cout << sum.at("checks") << " checks, " << sum.at("unexpected") << " unexpected\n";
  if (!json_path.empty()) {
    const std::string text = report.dump(2) + "\n";
    if (json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "finbound: cannot write " << json_path << "\n";
        return 2;
      }
      out << text;
    }
  }
  return report.at("ok").get<bool>() ? 0 : 1;
}

int do_replay(const std::string& path, bool verbose) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "finbound: cannot read " << path << "\n";
    return 2;
  }
  std::vector<suites::ReplayResult> results;
  try {
    results = suites::replay(json::parse(in));
  } catch (const json::exception& e) {
    std::cerr << "finbound: " << path << ": " << e.what() << "\n";
    return 2;
  } catch (const suites::SchemaError& e) {
    std::cerr << "finbound: " << path << ": " << e.what() << "\n";
    return 2;
  }
  std::size_t bad = 0;
  for (const auto& r : results) {
    if (!r.match) ++bad;
    if (verbose || !r.match) std::cout << (r.match ? "match    " : "MISMATCH ") << r.id << "  " << r.verdict << "\n";
    if (!r.match) std::cout << r.diff.dump(2) << "\n";
  }
  std::cout << results.size() << " certificates, " << bad << " mismatched\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale checks for finitely bounded functors"};
  app.require_subcommand(1);
  bool verbose = false;

  auto* run = app.add_subcommand("run", "Run demo suites");
  std::vector<std::string> names{"all"};
  suites::Options opt;
  std::string json_path;
  std::vector<std::string> allowed = suites::suite_names();
  allowed.push_back("all");
  run->add_option("--suite", names, "Suite name (repeatable)")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
  run->add_option("--seed", opt.seed, "Seed for every random choice")->capture_default_str();
  run->add_option("--bound", opt.bound, "Subobject and search size bound")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  run->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  run->add_flag("--verbose,-v", verbose, "List every check");

  auto* rep = app.add_subcommand("replay", "Recompute the certificates in a file");
  std::string file;
  rep->add_option("file", file, "Certificate, check, suite or report JSON")->required();
  rep->add_flag("--verbose,-v", verbose, "List every certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (run->parsed()) return do_run(names, opt, json_path, verbose);
  return do_replay(file, verbose);
}
