#include "doctest.h"

#include "glal/scenarios.hpp"
#include "glal/suite.hpp"

using namespace glal;

TEST_CASE("bundled suite passes") {
  auto checks = run_suite();
  CHECK(checks.size() >= 30);
  for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.name << ": expected " << c.expected << ", got " << c.actual);
  CHECK(std::is_sorted(checks.begin(), checks.end(),
                       [](const SuiteCheck& a, const SuiteCheck& b) { return a.name < b.name; }));
}

TEST_CASE("filter selects matching checks") {
  auto checks = run_suite({"example1", {}});
  REQUIRE_FALSE(checks.empty());
  for (const auto& c : checks) CHECK(c.name.rfind("example1.", 0) == 0);
}

TEST_CASE("a corrupted fixture fails only its own checks") {
  SuiteOptions opts;
  // Drop the sender's ability to tell the channel worlds apart.
  opts.fixtures.emplace("channel_N",
                        KripkeModel::from_partitions({"w1", "w2"}, {"e", "r", "s"},
                                                     {{"e", {{"w1", "w2"}}}, {"r", {{"w1", "w2"}}}, {"s", {{"w1", "w2"}}}},
                                                     {{"bit0", {"w1"}}}));
  auto checks = run_suite(opts);
  bool any_failed = false;
  for (const auto& c : checks) {
    if (!c.passed) {
      any_failed = true;
      CHECK(c.name.rfind("example1.", 0) != 0);
      CHECK(c.name.rfind("validity.", 0) != 0);
    }
  }
  CHECK(any_failed);
}
