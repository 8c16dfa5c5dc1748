#pragma once

// Front end of the `adelic` tool. Kept as a library so tests can drive it
// without spawning processes.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace adelic::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kUnsupported = 3,
  kComputation = 4,
};

struct RunConfig {
  std::string command;     // describe, chi, h0, h1, chi-rel, verify, suite, fourier
  std::string subcommand;  // for verify: rr, rr-rel, serre, poisson, lemmas, inversion
  std::string field = "Q";
  std::string base;  // chi-rel and verify rr-rel; defaults to the prime field
  std::string idele = "trivial";
  double tolerance = 1e-10;
  double max_radius = 2000.0;
  double serre_tolerance = 1e-8;
  std::string output = "text";
  std::uint64_t seed = 1;
  int p = 3;
  int range_lo = -3;
  int range_hi = 3;
  std::string local;  // local field config for inversion and fourier
  int m = 0;
  int trials = 20;
  bool negative_control = false;
};

/// Runs one command and returns its exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// One named check of the suite battery.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double runtime_ms = 0.0;
};

/// The acceptance battery, deterministic in the seed. With negative_control a
/// deliberately broken check is appended.
std::vector<CheckResult> run_suite(const RunConfig& config);

/// Parses argv with CLI11 and runs the command.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

/// "a..b" into a closed integer range.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace adelic::cli
