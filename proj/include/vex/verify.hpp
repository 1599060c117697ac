#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vex/weyl.hpp"

namespace vex {

/// Bounds and knobs shared by the verification suites.
struct VerifyOptions {
  std::optional<WeylType> type;  // all relevant types when empty
  std::optional<int> n;  // suite default when empty
  std::optional<int> r;
  std::uint64_t seed = 20240611;
  int threads = 1;
};

/// Outcome of one suite. lines are informational; failures hold counterexamples.
struct Report {
  std::string suite;
  bool pass = true;
  std::vector<std::string> lines;
  std::vector<std::string> failures;
  double seconds = 0;

  void check(bool ok, const std::string& what);
};

const std::vector<std::string>& suite_names();
/// Runs a suite; throws UnknownSuite.
Report run_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace vex
