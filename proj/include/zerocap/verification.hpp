#pragma once

#include <string>
#include <vector>

#include "zerocap/io.hpp"

namespace zerocap {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string provenance;  // where the expected value comes from
  std::string computed;
  std::string mode;  // "exact" or "float"
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // failing branch, tolerance, ...
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct VerificationOptions {
  bool slow = false;  // include the exhaustive assisted searches
  bool inject_pi_hat_fault = false;
};

/// pi_hat off by one; used to show that the N_m checks catch a broken
/// decoder.
int corrupted_pi_hat(int m, int u);

/// Runs the reproduction checks: channel tables, capacities, assisted and
/// unassisted success probabilities, quantum correlations, tensor powers
/// and graph oracles.
VerificationReport run_verification(const VerificationOptions& options);

Json report_to_json(const VerificationReport& report);
std::string report_table(const VerificationReport& report);

}  // namespace zerocap
