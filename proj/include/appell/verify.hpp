#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace appell::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// algebra, pade, families, theorems, odes, monomiality, structural, umbral.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Checks run concurrently; results
/// come back in declaration order. UsageError for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite);

}  // namespace appell::verify
