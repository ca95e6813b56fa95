#pragma once

#include <map>
#include <string>

#include "supnorm/common.hpp"

namespace supnorm {

struct VerifyConfig {
  uint64_t seed = 1;
  bool exact = true;
  double budget_sec = 900.0;
};

struct VerificationReport {
  std::string name;
  std::map<std::string, std::string> params;
  std::string status;  // pass | fail | flagged
  std::vector<std::pair<std::string, std::string>> measured;
  std::vector<std::string> failures;
  std::vector<std::string> flags;  // documented-interpretation notes, never failures
  double runtime_sec = 0.0;        // human summary only, kept out of JSON
};

std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg);

struct AggregateReport {
  std::vector<VerificationReport> suites;
  bool all_pass = true;
  double total_runtime_sec = 0.0;
};

AggregateReport verify_all(const VerifyConfig& cfg);

/// Deterministic JSON: runtime fields are excluded by contract.
std::string report_to_json(const AggregateReport& agg, const VerifyConfig& cfg);
std::string report_to_text(const AggregateReport& agg);

}  // namespace supnorm
