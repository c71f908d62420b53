#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "permstat/verify.hpp"

using namespace permstat;

TEST_CASE("suite registry") {
  CHECK(suites().size() == 8);
  const SuiteInfo* info = find_suite("recurrences");
  REQUIRE(info != nullptr);
  CHECK(info->default_n_max == 12);
  CHECK(info->n_min == 0);
  CHECK(find_suite("burstein")->default_n_max == 8);
  CHECK(find_suite("theorem-main")->n_min == 1);
  CHECK(find_suite("nope") == nullptr);
  CHECK_THROWS_AS(run_suite("nope", 3, 1), std::invalid_argument);
}

TEST_CASE("every suite passes at small n") {
  for (const auto& info : suites()) {
    const int n_max = std::min(info.default_n_max, 6);
    const VerificationReport report = run_suite(info.name, n_max, 2);
    INFO("suite ", info.name);
    CHECK(report.pass);
    CHECK_FALSE(report.counterexample.has_value());
    CHECK(report.suite == info.name);
    CHECK(report.n_min == info.n_min);
    CHECK(report.n_max == n_max);
    CHECK(static_cast<int>(report.per_n.size()) == n_max - info.n_min + 1);
    for (const auto& run : report.per_n) CHECK(run.pass);
    CHECK(report.seconds >= 0.0);
  }
}

TEST_CASE("reports are deterministic apart from timing") {
  const VerificationReport a = run_suite("conj-1.2", 6, 1);
  const VerificationReport b = run_suite("conj-1.2", 6, 4);
  CHECK(a.pass == b.pass);
  CHECK(a.per_n.size() == b.per_n.size());
  for (size_t i = 0; i < a.per_n.size(); ++i) {
    CHECK(a.per_n[i].n == b.per_n[i].n);
    CHECK(a.per_n[i].pass == b.per_n[i].pass);
  }
  CHECK(a.counterexample.has_value() == b.counterexample.has_value());
}

TEST_CASE("report serialization") {
  const VerificationReport report = run_suite("burstein", 4, 1);
  const nlohmann::json j = report.to_json();
  CHECK(j["suite"] == "burstein");
  CHECK(j["pass"] == true);
  CHECK(j["n_min"] == 1);
  CHECK(j["n_max"] == 4);
  CHECK(j["counterexample"].is_null());
  REQUIRE(j["per_n"].is_array());
  CHECK(j["per_n"].size() == 4);
  CHECK(j["per_n"][0]["n"] == 1);
  CHECK(j["per_n"][0]["pass"] == true);

  const std::string text = report.text();
  CHECK(text.find("suite: burstein") != std::string::npos);
  CHECK(text.find("n=4: pass") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);
}

TEST_CASE("an empty range is vacuously true") {
  const VerificationReport report = run_suite("thm-1.1", 0, 1);
  CHECK(report.pass);
  CHECK(report.per_n.empty());
}

TEST_CASE("failing reports render their counterexample") {
  VerificationReport report;
  report.suite = "demo";
  report.n_min = 1;
  report.n_max = 2;
  report.per_n = {{1, true}, {2, false}};
  report.pass = false;
  Counterexample ce;
  ce.n = 2;
  ce.word = Word::parse("21");
  ce.expected = "0";
  ce.actual = "1";
  ce.detail = "demo mismatch";
  report.counterexample = ce;

  const std::string text = report.text();
  CHECK(text.find("n=2: FAIL") != std::string::npos);
  CHECK(text.find("word: 21") != std::string::npos);
  CHECK(text.find("expected: 0") != std::string::npos);
  CHECK(text.find("result: FAIL") != std::string::npos);

  const nlohmann::json j = report.to_json();
  CHECK(j["pass"] == false);
  CHECK(j["counterexample"]["word"] == "21");
  CHECK(j["counterexample"]["n"] == 2);
  CHECK(j["counterexample"]["detail"] == "demo mismatch");
}
