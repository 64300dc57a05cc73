#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace assocform::checks {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic; no timings here
  double seconds = 0.0;
};

// Runs the command-line dispatcher in-process; used by the determinism
// checks. Wired in by the entry points so the check library stays independent
// of the command layer.
using CliRunner = std::function<int(const std::vector<std::string>& args,
                                    std::istream& in, std::ostream& out,
                                    std::ostream& err)>;

// The acceptance criteria, one result per criterion.
std::vector<CheckResult> run_acceptance(std::uint64_t seed, const CliRunner& cli);

// The per-module invariant suites.
std::vector<CheckResult> run_properties(std::uint64_t seed, const CliRunner& cli);

// Prints "PASS <id> <name>" lines (plus failure details) to `out` and the
// timing summary to `timing_out`. Returns true iff everything passed.
bool print_report(const std::vector<CheckResult>& results, std::ostream& out,
                  std::ostream& timing_out);

}  // namespace assocform::checks
