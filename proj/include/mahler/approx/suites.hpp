#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mahler {

/// Outcome counts of a randomized verification suite. Reports carry no
/// timing so that reruns with the same seed are byte-identical.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long total = 0;
  long passed = 0;
  long failed = 0;             // unexpected failures
  long expected_negative = 0;  // negative outcomes that were predicted
  long inconclusive = 0;
  std::vector<std::string> failures;  // first few failing instances
  std::vector<std::string> details;   // per-case lines for small suites

  bool ok() const { return failed == 0; }
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a suite with `count` instances (0: the suite default).
/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, long count = 0);

std::string suite_report_json(const SuiteReport& r);

}  // namespace mahler
