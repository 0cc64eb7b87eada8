#include "surfalg/suites.hpp"

#include <doctest.h>

#include <fstream>
#include <set>

using namespace surfalg;

namespace {

RunConfig small(std::vector<std::string> suites) {
  RunConfig c;
  c.genus = 2;
  c.max_degree = 3;
  c.trials = 20;
  c.suites = std::move(suites);
  return c;
}

nlohmann::json strip_runtime(nlohmann::json j) {
  for (auto& c : j["checks"]) c.erase("runtime_ms");
  j.erase("version");
  return j;
}

}  // namespace

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(validate(small({})), ConfigError);
  CHECK_THROWS_AS(validate(small({"no-such-suite"})), ConfigError);
  auto c = small({"index-formula"});
  c.genus = 1;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.genus = 2;
  c.max_degree = 1;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.max_degree = 3;
  c.report_format = "xml";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.report_format = "text";
  CHECK_NOTHROW(validate(c));
  CHECK_THROWS_AS(run(small({})), ConfigError);
}

TEST_CASE("euler index") {
  CHECK(euler_index(-4, -4) == 1);
  CHECK(euler_index(2 - 2 * 3, 2 - 2 * 3) == 1);
  CHECK(euler_index(-2, -6) == 3);
  CHECK_THROWS_AS(euler_index(-4, -6), std::domain_error);
  CHECK_THROWS_AS(euler_index(0, -6), std::domain_error);
  CHECK_THROWS_AS(euler_index(2, -6), std::domain_error);
}

TEST_CASE("report structure") {
  const Report r = run(small({"index-formula", "lie-center"}));
  CHECK(r.all_passed());
  // canonical order: lie-center before index-formula
  CHECK(r.checks.front().name.rfind("lie-center/", 0) == 0);
  CHECK(r.checks.back().name.rfind("index-formula/", 0) == 0);
  std::set<std::string> names;
  for (const auto& c : r.checks) CHECK(names.insert(c.name).second);
  const auto j = r.to_json();
  CHECK(j.contains("config"));
  CHECK(j.contains("version"));
  CHECK(j["checks"].size() == r.checks.size());
  for (const auto& c : j["checks"])
    for (const char* key : {"name", "paper_anchor", "status", "expected", "actual", "runtime_ms"}) CHECK(c.contains(key));
  CHECK(r.to_text().find("PASS  index-formula/triple-cover") != std::string::npos);
}

TEST_CASE("genus 2 skips the commutant with a reason") {
  const Report r = run(small({"sp-decomposition"}));
  bool found = false;
  for (const auto& c : r.checks)
    if (c.name == "sp-decomposition/commutant-dimension") {
      found = true;
      CHECK(c.status == Status::Skipped);
      CHECK_FALSE(c.actual.empty());
    }
  CHECK(found);
  CHECK(r.all_passed());
}

TEST_CASE("reports are deterministic") {
  auto c = small(known_suites());
  const auto a = strip_runtime(run(c).to_json());
  const auto b = strip_runtime(run(c).to_json());
  CHECK(a.dump() == b.dump());
  c.seed = 99;
  CHECK(run(c).all_passed());
}

TEST_CASE("golden diff ignores timings and reports changes") {
  const auto j = run(small({"index-formula"})).to_json();
  auto k = j;
  k["checks"][0]["runtime_ms"] = 12345.0;
  k["version"] = "other";
  CHECK(golden_diff(j, k).empty());
  k["checks"][0]["actual"] = "2";
  CHECK(golden_diff(j, k).size() == 1);
  k["checks"].erase(0);
  CHECK_FALSE(golden_diff(j, k).empty());
}

TEST_CASE("resource bounds surface as skipped checks") {
  RunConfig c;
  c.genus = 8;
  c.max_degree = 8;
  c.trials = 1;
  c.suites = {"lie-center"};
  const Report r = run(c);
  bool skipped = false;
  for (const auto& rec : r.checks) skipped = skipped || rec.status == Status::Skipped;
  CHECK(skipped);
}
