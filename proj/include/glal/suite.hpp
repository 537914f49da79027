#pragma once

// Regression suite over the bundled muddy-children and bit-channel fixtures
// and a small corpus of validity and non-validity checks.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "glal/model.hpp"

namespace glal {

struct SuiteCheck {
  std::string name;   // "<group>.<check>"
  std::string topic;  // one-line description
  std::string expected;
  std::string actual;
  bool passed = false;
  double seconds = 0;
};

struct SuiteOptions {
  std::string filter;  // substring of the check name; empty runs everything
  /// Replacement fixtures by name: "muddy3", "channel_N", "channel_Nprime".
  std::map<std::string, KripkeModel> fixtures;
};

std::vector<std::string> suite_fixture_names();

/// Results sorted by check name.
std::vector<SuiteCheck> run_suite(const SuiteOptions& options = {});

}  // namespace glal
