#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ffront::runner {

enum class Command { Front, Moments, Rmt, InitState, Verify };

[[nodiscard]] std::string_view command_name(Command command);
[[nodiscard]] std::optional<Command> parse_command(std::string_view name);

/// Inclusive grid min, min + step, ..., up to max.
struct Grid {
  double min = -6.0;
  double max = 4.0;
  double step = 0.5;

  [[nodiscard]] std::vector<double> points() const;
};

struct ExperimentConfig {
  Command command = Command::Moments;
  std::vector<double> t_list{100.0};
  Grid s_grid{};
  std::vector<double> lambda_list{0.25, 0.5, 1.0};
  std::string pattern = "10";
  /// Empty means stdout.
  std::string output_path;
  int nodes = 64;
  bool verbose = false;
  /// Worker count for grid sweeps. Output does not depend on it.
  int threads = 1;
};

/// One `key = value` setting and where it came from, for diagnostics.
struct Setting {
  std::string key;
  std::string value;
};

struct ConfigSources {
  /// Text of a `key = value` file; lines starting with '#' are comments.
  std::optional<std::string> file_text;
  std::string file_label = "<config>";
  /// Command-line values; these override the file.
  std::vector<Setting> flags;
};

struct ConfigResult {
  std::optional<ExperimentConfig> config;
  /// Every validation problem found, not just the first.
  std::vector<std::string> errors;
  /// Override notices, emitted by the caller when verbose.
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const { return config.has_value(); }
};

[[nodiscard]] ConfigResult parse_config(const ConfigSources& sources);

/// Reads a config file into ConfigSources::file_text. Throws IoError.
[[nodiscard]] std::string read_config_file(const std::string& path);

/// Canonical one-line description used in CSV comment lines. Excludes the
/// thread count and output path so equal experiments print identically.
[[nodiscard]] std::string describe(const ExperimentConfig& config);

}  // namespace ffront::runner
