// Command-line driver: `supercong verify` runs the suites, `supercong list`
// prints the check registry.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "supercong/report.hpp"

namespace {

constexpr int kExitConfig = 2;

std::uint64_t parse_u64(const std::string& text, const char* flag) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw supercong::ConfigError(std::string(flag) + ": not an unsigned integer: '" + text + "'");
  }
}

supercong::Format parse_format(const std::string& text) {
  return text == "json" ? supercong::Format::json : supercong::Format::text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of hypergeometric identities and supercongruences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", supercong::kVersion);

  std::string suite = "all";
  std::vector<std::string> checks;
  std::string prime_min = "5", prime_max = "199", max_n = "200", seed = "0x5EED", jobs = "1";
  std::string format = "text";
  std::string output;
  bool include_p3 = false;
  bool verbose = false;

  auto* verify = app.add_subcommand("verify", "run identity and congruence checks");
  verify->add_option("--suite", suite, "identities, congruences or all")
      ->check(CLI::IsMember({"identities", "congruences", "all"}))
      ->envname("SUPERCONG_SUITE");
  verify->add_option("--check", checks, "run only the named check (repeatable)")->envname("SUPERCONG_CHECK");
  verify->add_option("--prime-min", prime_min, "smallest prime tested")->envname("SUPERCONG_PRIME_MIN");
  verify->add_option("--prime-max", prime_max, "largest prime tested")->envname("SUPERCONG_PRIME_MAX");
  verify->add_option("--max-n", max_n, "upper bound for identity parameters")->envname("SUPERCONG_MAX_N");
  verify->add_option("--seed", seed, "seed for random parameter grids (decimal or 0x hex)")->envname("SUPERCONG_SEED");
  verify->add_option("--jobs", jobs, "worker threads")->envname("SUPERCONG_JOBS");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("SUPERCONG_FORMAT");
  verify->add_option("--output", output, "write the report to this file")->envname("SUPERCONG_OUTPUT");
  verify->add_flag("--include-p3", include_p3, "also run p = 3 (informational)")->envname("SUPERCONG_INCLUDE_P3");
  verify->add_flag("--verbose", verbose, "one line per check instance")->envname("SUPERCONG_VERBOSE");

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "print the check registry");
  list->add_option("--format", list_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*list) {
    if (list_format == "json") {
      std::cout << supercong::list_checks_json().dump(2) << "\n";
    } else {
      std::cout << supercong::list_checks_text();
    }
    return 0;
  }

  supercong::RunConfig config;
  try {
    config.identities = suite != "congruences";
    config.congruences = suite != "identities";
    config.checks = checks;
    config.prime_min = parse_u64(prime_min, "--prime-min");
    config.prime_max = parse_u64(prime_max, "--prime-max");
    config.max_n = parse_u64(max_n, "--max-n");
    config.seed = parse_u64(seed, "--seed");
    const auto j = parse_u64(jobs, "--jobs");
    if (j < 1 || j > 4096) throw supercong::ConfigError("--jobs must be in 1..4096");
    config.jobs = static_cast<unsigned>(j);
    config.format = parse_format(format);
    if (!output.empty()) config.output = output;
    config.include_p3 = include_p3;
    config.verbose = verbose;
    supercong::validate(config);
  } catch (const supercong::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  const auto report = supercong::run(config);
  const std::string body =
      config.format == supercong::Format::json ? supercong::render_json(report) : supercong::render_text(report);
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      std::cerr << "config error: cannot write " << *config.output << "\n";
      return kExitConfig;
    }
    file << body;
  } else {
    std::cout << body;
  }
  return report.exit_code();
}
