#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "supercong/congruences.hpp"
#include "supercong/registry.hpp"

namespace supercong {

inline constexpr const char* kVersion = "1.0.0";

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { text, json };

struct RunConfig {
  bool identities = true;
  bool congruences = true;
  std::vector<std::string> checks;  // empty = every check of the selected suites
  std::uint64_t prime_min = 5;
  std::uint64_t prime_max = 199;
  std::uint64_t max_n = 200;
  std::uint64_t seed = 0x5EED;
  unsigned jobs = 1;
  Format format = Format::text;
  std::optional<std::string> output;
  bool include_p3 = false;
  bool verbose = false;
};

/// Throws ConfigError on invalid ranges or unknown check names.
void validate(const RunConfig& config);

struct CheckSummary {
  const CheckSpec* spec = nullptr;
  std::uint64_t tested = 0;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skipped = 0;
};

struct Report {
  RunConfig config;
  std::vector<CheckSummary> checks;
  std::vector<CheckResult> results;        // every non-informational result, in task order
  std::vector<CheckResult> informational;  // p = 3 results when requested
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skipped = 0;
  std::uint64_t duration_ms = 0;

  int exit_code() const { return fail == 0 ? 0 : 1; }
};

/// Executes the selected checks. Results are gathered per task slot, so the
/// report does not depend on config.jobs.
Report run(const RunConfig& config);

nlohmann::ordered_json to_json(const CheckResult& r);
nlohmann::ordered_json to_json(const Report& report);
std::string render_json(const Report& report);
std::string render_text(const Report& report);

nlohmann::ordered_json list_checks_json();
std::string list_checks_text();

}  // namespace supercong
