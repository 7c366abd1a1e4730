#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "unicount/errors.hpp"
#include "unicount/verify.hpp"

using namespace unicount;

namespace {

VerifyOptions small_options() {
  VerifyOptions o;
  o.max_n = 3;
  o.primes = {2, 3};
  o.exec = ff::Exec::Serial;
  return o;
}

}  // namespace

TEST_CASE("appendix suite passes on a reduced grid") {
  const auto records = run_appendix_suite(small_options());
  CHECK_EQ(records.size(), 9);
  for (const auto& r : records) {
    INFO("check: ", r.check);
    CHECK(r.equal);
    CHECK_EQ(r.symbolic, r.oracle);
    CHECK(r.parameters.contains("cases"));
    CHECK(r.parameters["cases"].get<int>() > 0);
  }
  CHECK(all_checks_pass(records));
}

TEST_CASE("appendix check names are stable") {
  const auto records = run_appendix_suite(small_options());
  std::set<std::string> names;
  for (const auto& r : records) names.insert(r.check);
  for (const char* expected :
       {"conservation", "block-permutation-invariance", "gl-pgl-factor",
        "coefficient-nonnegativity", "qminus1-nonnegativity",
        "borel-reference-table", "sl3-closed-forms", "gaussian-symmetry",
        "fixed-point-ratio-reduced"}) {
    INFO("missing: ", expected);
    CHECK(names.count(expected) == 1);
  }
}

TEST_CASE("an injected fault is caught by exactly one check") {
  VerifyOptions o = small_options();
  o.inject_fault = true;
  const auto records = run_appendix_suite(o);
  CHECK_FALSE(all_checks_pass(records));
  int failures = 0;
  for (const auto& r : records) {
    if (r.equal) continue;
    ++failures;
    CHECK_EQ(r.check, "conservation");
    // the record pins the failing case and both disagreeing values
    REQUIRE(r.parameters.contains("first_failure"));
    CHECK(r.parameters["first_failure"].contains("partition"));
    CHECK_NE(r.symbolic, r.oracle);
  }
  CHECK_EQ(failures, 1);
}

TEST_CASE("oracle suite passes on a reduced grid") {
  const auto records = run_oracle_suite(small_options());
  CHECK_EQ(records.size(), 10);
  for (const auto& r : records) {
    INFO("check: ", r.check);
    CHECK(r.equal);
  }
  CHECK(all_checks_pass(records));
}

TEST_CASE("oracle suite refuses an impossible budget") {
  VerifyOptions o = small_options();
  o.element_budget = 2;
  CHECK_THROWS_AS(run_oracle_suite(o), ResourceLimitError);
}

TEST_CASE("check records serialize with all fields") {
  CheckRecord r;
  r.check = "demo";
  r.parameters = {{"n", 3}};
  r.symbolic = "q + 1";
  r.oracle = "q + 1";
  r.equal = true;
  const nlohmann::json j = check_record_to_json(r);
  CHECK_EQ(j.at("check"), "demo");
  CHECK_EQ(j.at("parameters").at("n"), 3);
  CHECK_EQ(j.at("symbolic"), "q + 1");
  CHECK_EQ(j.at("oracle"), "q + 1");
  CHECK_EQ(j.at("equal"), true);
}

TEST_CASE("all_checks_pass is a conjunction") {
  CheckRecord good;
  good.equal = true;
  CheckRecord bad;
  bad.equal = false;
  CHECK(all_checks_pass({}));
  CHECK(all_checks_pass({good, good}));
  CHECK_FALSE(all_checks_pass({good, bad}));
}
