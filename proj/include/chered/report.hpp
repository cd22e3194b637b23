#pragma once

#include <string>
#include <vector>

#include "chered/config.hpp"

namespace chered {

/// One named property check. Exact checks carry tolerance 0 and residual 0;
/// numeric checks record the measured residual against a pinned tolerance.
/// Wall time stays out of serialized reports so they are byte-stable.
struct CheckReport {
  std::string name;
  std::string claim;
  bool pass = false;
  double residual = 0;
  double tolerance = 0;
  std::string details;
  double seconds = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> checks;
  bool all_pass() const;
};

SuiteResult run_group_suite(const RunConfig& cfg);
SuiteResult run_lattice_suite(const RunConfig& cfg);
SuiteResult run_dunkl_suite(const RunConfig& cfg);
SuiteResult run_pbw_suite(const RunConfig& cfg);
SuiteResult run_modules_suite(const RunConfig& cfg);
SuiteResult run_monodromy_suite(const RunConfig& cfg);

/// verb is a suite name or "all"; unknown verbs throw ConfigError.
std::vector<SuiteResult> run_suites(const RunConfig& cfg, const std::string& verb);

/// Deterministic JSON given config and seed; timings are omitted.
std::string report_json(const RunConfig& cfg, const std::string& verb,
                        const std::vector<SuiteResult>& suites);

/// Per-check lines with wall times, for standard output.
std::string report_human(const std::vector<SuiteResult>& suites);

}  // namespace chered
