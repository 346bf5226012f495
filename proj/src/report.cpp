#include "supercong/report.hpp"

#include <algorithm>
#include <cctype>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "supercong/hypergeometric.hpp"

namespace supercong {

namespace {

using nlohmann::ordered_json;

bool selected(const CheckSpec& spec, const RunConfig& c) {
  if (!c.checks.empty()) return std::find(c.checks.begin(), c.checks.end(), spec.name) != c.checks.end();
  return spec.suite == Suite::identities ? c.identities : c.congruences;
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << v;
  return out.str();
}

ordered_json residue_json(const ResidueClass& r) {
  return ordered_json{{"value", to_string(r.value())}, {"modulus", to_string(r.modulus().modulus())}};
}

CheckResult error_result(const CheckSpec& spec, const Task& task, const std::string& what) {
  CheckResult r;
  r.name = spec.name;
  if (task.p) {
    r.p = task.p;
    r.params.emplace_back("p", std::to_string(task.p));
  }
  r.params.emplace_back(spec.suite == Suite::identities ? "n" : "k", std::to_string(task.index));
  r.status = Status::fail;
  r.note = "error: " + what;
  return r;
}

std::vector<CheckResult> execute(const CheckSpec& spec, const Task& task, const Scope& scope) {
  try {
    return spec.run(task, scope);
  } catch (const SkippedPole& e) {
    auto r = error_result(spec, task, e.what());
    r.status = Status::skipped;
    r.note = std::string("SkippedPole(") + e.parameter() + "): " + e.what();
    return {r};
  } catch (const std::exception& e) {
    return {error_result(spec, task, e.what())};
  }
}

std::string params_text(const ParamList& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ' ';
    s += k + "=" + v;
  }
  return s;
}

std::string result_line(const CheckResult& r) {
  std::string s = to_string(r.status);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  s += " " + r.name + " " + params_text(r.params);
  if (r.lhs_residue && r.rhs_residue) {
    s += " lhs=" + to_string(r.lhs_residue->value()) + " rhs=" + to_string(r.rhs_residue->value());
  }
  if (!r.note.empty()) s += " (" + r.note + ")";
  return s;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.prime_min < 2) throw ConfigError("prime-min must be >= 2");
  if (c.prime_min > c.prime_max) throw ConfigError("prime-min must not exceed prime-max");
  if (c.max_n < 2) throw ConfigError("max-n must be >= 2");
  if (c.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (!c.identities && !c.congruences && c.checks.empty()) throw ConfigError("no suite selected");
  for (const auto& name : c.checks) {
    if (!find_check(name)) throw ConfigError("unknown check '" + name + "'");
  }
}

Report run(const RunConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  Scope scope;
  scope.max_n = config.max_n;
  scope.seed = config.seed;
  // p = 3 is opt-in and independent of prime_min; everything else starts at 5.
  if (config.include_p3 && config.prime_max >= 3) scope.primes.push_back(3);
  if (config.prime_max >= 5) {
    for (Prime p : primes_in(std::max<std::uint64_t>(config.prime_min, 5), config.prime_max)) scope.primes.push_back(p);
  }

  struct Slot {
    std::size_t spec;
    Task task;
  };
  std::vector<const CheckSpec*> specs;
  std::vector<Slot> slots;
  for (const auto& spec : registry()) {
    if (!selected(spec, config)) continue;
    specs.push_back(&spec);
    for (const auto& task : spec.tasks(scope)) slots.push_back({specs.size() - 1, task});
  }

  std::vector<std::vector<CheckResult>> outputs(slots.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < slots.size(); i = next.fetch_add(1)) {
      outputs[i] = execute(*specs[slots[i].spec], slots[i].task, scope);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(std::max<std::size_t>(slots.size(), 1))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  Report report;
  report.config = config;
  for (const auto* spec : specs) report.checks.push_back({spec});
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto& summary = report.checks[slots[i].spec];
    for (auto& r : outputs[i]) {
      if (r.p && *r.p == 3) {
        r.informational = true;
        report.informational.push_back(std::move(r));
        continue;
      }
      ++summary.tested;
      switch (r.status) {
        case Status::pass: ++summary.pass; ++report.pass; break;
        case Status::fail: ++summary.fail; ++report.fail; break;
        case Status::skipped: ++summary.skipped; ++report.skipped; break;
      }
      report.results.push_back(std::move(r));
    }
  }
  report.duration_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return report;
}

ordered_json to_json(const CheckResult& r) {
  ordered_json j;
  j["name"] = r.name;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["status"] = to_string(r.status);
  if (r.lhs_residue) j["lhs_residue"] = residue_json(*r.lhs_residue);
  if (r.rhs_residue) j["rhs_residue"] = residue_json(*r.rhs_residue);
  if (r.difference_valuation) j["valuation"] = r.difference_valuation->to_string();
  if (r.status != Status::pass) {
    if (r.lhs_exact) j["lhs"] = *r.lhs_exact;
    if (r.rhs_exact) j["rhs"] = *r.rhs_exact;
  }
  j["note"] = r.note;
  return j;
}

ordered_json to_json(const Report& report) {
  const auto& c = report.config;
  ordered_json j;
  j["version"] = kVersion;
  ordered_json suites = ordered_json::array();
  if (c.identities) suites.push_back("identities");
  if (c.congruences) suites.push_back("congruences");
  j["config"] = ordered_json{{"suites", suites},
                             {"checks", c.checks},
                             {"prime_min", c.prime_min},
                             {"prime_max", c.prime_max},
                             {"max_n", c.max_n},
                             {"seed", c.seed},
                             {"include_p3", c.include_p3}};
  ordered_json checks = ordered_json::array();
  for (const auto& s : report.checks) {
    checks.push_back(ordered_json{{"name", s.spec->name},
                                  {"tag", s.spec->tag},
                                  {"suite", to_string(s.spec->suite)},
                                  {"modulus", s.spec->modulus},
                                  {"domain", s.spec->domain},
                                  {"tested", s.tested},
                                  {"pass", s.pass},
                                  {"fail", s.fail},
                                  {"skipped", s.skipped}});
  }
  j["checks"] = checks;
  ordered_json failures = ordered_json::array();
  ordered_json skips = ordered_json::array();
  for (const auto& r : report.results) {
    if (r.status == Status::fail) failures.push_back(to_json(r));
    if (r.status == Status::skipped) skips.push_back(to_json(r));
  }
  j["failures"] = failures;
  j["skips"] = skips;
  ordered_json info = ordered_json::array();
  for (const auto& r : report.informational) info.push_back(to_json(r));
  j["informational"] = info;
  if (c.verbose) {
    ordered_json all = ordered_json::array();
    for (const auto& r : report.results) all.push_back(to_json(r));
    j["results"] = all;
  }
  j["summary"] = ordered_json{{"pass", report.pass}, {"fail", report.fail}, {"skipped", report.skipped}};
  j["duration_ms"] = report.duration_ms;
  return j;
}

std::string render_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_text(const Report& report) {
  const auto& c = report.config;
  std::ostringstream out;
  out << "supercong " << kVersion << "  primes " << c.prime_min << ".." << c.prime_max << "  max_n " << c.max_n
      << "  seed " << hex(c.seed) << (c.include_p3 ? "  include_p3" : "") << "\n\n";
  out << std::left << std::setw(18) << "check" << std::setw(36) << "tag" << std::setw(16) << "modulus" << std::right
      << std::setw(8) << "tested" << std::setw(8) << "pass" << std::setw(6) << "fail" << std::setw(6) << "skip" << "\n";
  for (const auto& s : report.checks) {
    out << std::left << std::setw(18) << s.spec->name << std::setw(36) << s.spec->tag << std::setw(16)
        << s.spec->modulus << std::right << std::setw(8) << s.tested << std::setw(8) << s.pass << std::setw(6)
        << s.fail << std::setw(6) << s.skipped << "\n";
  }
  if (c.verbose) {
    out << "\n";
    for (const auto& r : report.results) out << result_line(r) << "\n";
  } else if (report.fail > 0) {
    out << "\nfailures:\n";
    for (const auto& r : report.results)
      if (r.status == Status::fail) out << "  " << result_line(r) << "\n";
  }
  if (!report.informational.empty()) {
    out << "\ninformational (p = 3):\n";
    for (const auto& r : report.informational) out << "  " << result_line(r) << "\n";
  }
  out << "\nsummary: pass " << report.pass << ", fail " << report.fail << ", skipped " << report.skipped << "\n";
  out << "duration: " << report.duration_ms << " ms\n";
  return out.str();
}

ordered_json list_checks_json() {
  ordered_json rows = ordered_json::array();
  for (const auto& spec : registry()) {
    rows.push_back(ordered_json{{"name", spec.name},
                                {"tag", spec.tag},
                                {"suite", to_string(spec.suite)},
                                {"modulus", spec.modulus},
                                {"domain", spec.domain}});
  }
  return rows;
}

std::string list_checks_text() {
  std::string out;
  for (const auto& spec : registry()) {
    out += spec.name + " | " + spec.tag + " | " + spec.modulus + " | " + spec.domain + "\n";
  }
  return out;
}

}  // namespace supercong
