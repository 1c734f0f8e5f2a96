#pragma once

#include <string>
#include <vector>

#include "ffront/runner/config.hpp"

namespace ffront::runner {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast invariant suite behind `ffront verify`. Every check runs; a check
/// that throws is reported as failed with the exception message.
[[nodiscard]] std::vector<CheckResult> run_verify_suite(const ExperimentConfig& config);

}  // namespace ffront::runner
