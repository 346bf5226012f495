#include "doctest.h"

#include <set>

#include "supercong/report.hpp"

using namespace supercong;

namespace {

RunConfig small() {
  RunConfig c;
  c.prime_max = 41;
  c.max_n = 12;
  return c;
}

std::string without_duration(std::string s) {
  const auto pos = s.find("\"duration_ms\"");
  return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

TEST_CASE("validate rejects bad configs") {
  RunConfig c;
  CHECK_NOTHROW(validate(c));
  c.prime_min = 50;
  c.prime_max = 10;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.max_n = 1;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.checks = {"nope"};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.identities = c.congruences = false;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.jobs = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("registry names are unique and tagged") {
  std::set<std::string> names;
  for (const auto& spec : registry()) {
    CHECK(names.insert(spec.name).second);
    CHECK_FALSE(spec.tag.empty());
    CHECK_FALSE(spec.modulus.empty());
    CHECK(find_check(spec.name) == &spec);
  }
  CHECK(find_check("a3")->modulus == "p^3");
  CHECK(find_check("missing") == nullptr);
}

TEST_CASE("small run passes and counts add up") {
  const Report rep = run(small());
  CHECK(rep.fail == 0);
  CHECK(rep.exit_code() == 0);
  std::uint64_t tested = 0, pass = 0;
  for (const auto& s : rep.checks) {
    CHECK(s.tested == s.pass + s.fail + s.skipped);
    tested += s.tested;
    pass += s.pass;
  }
  CHECK(pass == rep.pass);
  CHECK(tested == rep.pass + rep.fail + rep.skipped);
  CHECK(rep.informational.empty());
}

TEST_CASE("check filter") {
  RunConfig c = small();
  c.checks = {"b11"};
  c.prime_max = 7;
  const Report rep = run(c);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].spec->name == "b11");
  CHECK(rep.pass == 2);
  REQUIRE(rep.results.size() == 2);
  CHECK(*rep.results[0].p == 5);
  CHECK(*rep.results[1].p == 7);
}

TEST_CASE("suite filter") {
  RunConfig c = small();
  c.identities = false;
  for (const auto& s : run(c).checks) CHECK(s.spec->suite == Suite::congruences);
}

TEST_CASE("p = 3 is informational only") {
  RunConfig c = small();
  c.identities = false;
  c.include_p3 = true;
  const Report rep = run(c);
  CHECK_FALSE(rep.informational.empty());
  for (const auto& r : rep.informational) CHECK(*r.p == 3);
  for (const auto& r : rep.results) CHECK(*r.p >= 5);
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("thread count does not change the report") {
  RunConfig c = small();
  c.verbose = true;
  const std::string one = without_duration(render_json(run(c)));
  c.jobs = 8;
  CHECK(without_duration(render_json(run(c))) == one);
}

TEST_CASE("JSON report shape") {
  RunConfig c = small();
  c.checks = {"a3", "gauss"};
  const auto j = nlohmann::json::parse(render_json(run(c)));
  CHECK(j["version"] == kVersion);
  CHECK(j["config"]["prime_max"] == 41);
  CHECK(j["checks"].size() == 2);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["failures"].empty());
  CHECK(j.contains("duration_ms"));
  const auto listed = list_checks_json();
  CHECK(listed.size() == registry().size());
  CHECK(list_checks_text().find("a3 | Eq. (a-3) | p^3") != std::string::npos);
}

TEST_CASE("text report") {
  RunConfig c = small();
  c.checks = {"b11"};
  c.prime_max = 7;
  c.verbose = true;
  const std::string text = render_text(run(c));
  CHECK(text.find("PASS b11 p=5") != std::string::npos);
  CHECK(text.find("PASS b11 p=7") != std::string::npos);
}
