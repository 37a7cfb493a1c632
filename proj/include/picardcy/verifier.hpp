// Reproducible verification report over all checks.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace picardcy {

inline constexpr int kReportSchemaVersion = 1;

enum class CheckStatus { pass, fail, error };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::error;
  std::string expected;
  std::string actual;
  std::int64_t runtime_ms = 0;
  std::string citation;
};

struct RunOptions {
  /// Empty means all checks.
  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  /// Binds only numeric checks.
  double tolerance = 1e-6;
  int jacobian_samples = 200;
};

struct Report {
  int schema_version = kReportSchemaVersion;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;

  bool all_passed() const;
};

class UnknownCheckError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Stable check ids in report order.
const std::vector<std::string>& check_ids();
/// Short tag naming the claim a check verifies.
std::string check_citation(const std::string& id);

/// Runs the selected checks; results follow check_ids() order regardless of the
/// selection order. Throws UnknownCheckError before running anything if an id is unknown.
Report run(const RunOptions& opts);

/// Keys in schema order: schema_version, seed, results.
nlohmann::ordered_json to_json(const Report& r);
/// One line per check.
std::string to_text(const Report& r);

}  // namespace picardcy
