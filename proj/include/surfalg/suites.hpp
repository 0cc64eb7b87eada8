#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfalg {

inline constexpr const char* kVersion = "surfalg 1.0.0";
inline constexpr int kReportSchema = 1;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int genus = 3;
  std::size_t max_degree = 4;
  std::vector<std::string> suites;
  std::string report_format = "json";
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
};

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct CheckRecord {
  std::string name;
  std::string paper_anchor;
  Status status = Status::Skipped;
  std::string expected;
  std::string actual;
  double runtime_ms = 0;
};

struct Report {
  RunConfig config;
  std::string version = kVersion;
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Suite names in canonical execution order.
const std::vector<std::string>& known_suites();

/// Throws ConfigError for an unknown suite, empty suite list, genus < 2,
/// max_degree < 2, or an unknown report format.
void validate(const RunConfig& config);

/// Runs every requested suite (concurrently) and assembles the report in
/// canonical suite order. Deterministic for a fixed config.
Report run(const RunConfig& config);

/// Records produced by one suite.
std::vector<CheckRecord> run_suite(const std::string& suite, const RunConfig& config);

/// [N:P] from chi(ambient) = [N:P] * chi(sub). Throws std::domain_error on a
/// zero or positive sub characteristic or a non-integral quotient.
long euler_index(long chi_sub, long chi_ambient);

/// Compares the name/status/expected/actual fields of two JSON reports;
/// returns a list of human-readable differences (empty when they match).
std::vector<std::string> golden_diff(const nlohmann::json& expected, const nlohmann::json& actual);

}  // namespace surfalg
