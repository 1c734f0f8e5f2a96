#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "ffront/runner/config.hpp"

namespace ffront::runner {

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitInstability = 2,
  kExitIo = 3,
};

/// Formats with 17 significant digits.
[[nodiscard]] std::string format_real(double value);

/// Writes the CSV (or the verify report) for `config` to `out`. Returns the
/// exit code; library exceptions propagate.
int run(const ExperimentConfig& config, std::ostream& out);

/// Opens config.output_path (or uses `fallback` when empty), then calls run.
/// Maps ValidationError, InstabilityError and IoError to exit codes and
/// reports them on `err`.
int run_to_destination(const ExperimentConfig& config, std::ostream& fallback, std::ostream& err);

}  // namespace ffront::runner
