#ifndef CAYGRAPH_SUITE_HPP
#define CAYGRAPH_SUITE_HPP

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace caygraph {

/// One reproduced claim: pass iff expected == computed, exact equality.
struct SuiteResult {
  std::string claim;
  nlohmann::json parameters;
  std::string expected;
  std::string provenance;  // published-value | derived | construction | evidence
  std::string computed;
  bool pass = false;
  bool blocking = true;  // evidence records carry no pass/fail semantics
  double elapsed_ms = 0.0;

  nlohmann::json to_json() const;
  static SuiteResult from_json(const nlohmann::json& j);
};

enum class SuiteTier { fast, full };

struct SuiteOptions {
  SuiteTier tier = SuiteTier::fast;
  int threads = 1;
  double time_limit_seconds = 3600.0;  // applies to the largest solver runs
};

/// Runs every desk-scale claim; on_result fires as each record completes.
/// Returns all records; a run passes iff every blocking record passes.
std::vector<SuiteResult> run_paper_suite(
    const SuiteOptions& options,
    const std::function<void(const SuiteResult&)>& on_result = {});

bool suite_passed(const std::vector<SuiteResult>& results);

}  // namespace caygraph

#endif  // CAYGRAPH_SUITE_HPP
