#include "ffront/runner/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ffront/errors.hpp"
#include "ffront/moments.hpp"
#include "ffront/pattern.hpp"
#include "ffront/runner/runner.hpp"

namespace ffront::runner {

namespace {

constexpr std::size_t kMaxGridPoints = 100'000;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<int> parse_int(std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<std::vector<double>> parse_real_list(std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = parse_real(text.substr(0, comma));
    if (!item) return std::nullopt;
    out.push_back(*item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::optional<Grid> parse_grid(std::string_view text) {
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) {
    // A single value is a one-point grid.
    const auto v = parse_real(text);
    if (!v) return std::nullopt;
    return Grid{*v, *v, 1.0};
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) return std::nullopt;
  const auto lo = parse_real(text.substr(0, c1));
  const auto hi = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
  const auto step = parse_real(text.substr(c2 + 1));
  if (!lo || !hi || !step) return std::nullopt;
  return Grid{*lo, *hi, *step};
}

std::optional<bool> parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  return std::nullopt;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_real(values[i]);
  }
  return out;
}

bool uses_front_window(Command c) { return c == Command::Moments || c == Command::InitState; }

void apply(ExperimentConfig& cfg, const Setting& s, const std::string& origin, std::vector<std::string>& errors) {
  const std::string_view v = trim(s.value);
  const auto bad = [&](std::string_view what) {
    errors.push_back(origin + ": " + s.key + " = '" + std::string(v) + "': " + std::string(what));
  };
  if (s.key == "command") {
    if (auto c = parse_command(v)) cfg.command = *c;
    else bad("unknown command (expected front|moments|rmt|initstate|verify)");
  } else if (s.key == "t") {
    if (auto l = parse_real_list(v)) cfg.t_list = *l;
    else bad("malformed list of reals");
  } else if (s.key == "s") {
    if (auto g = parse_grid(v)) cfg.s_grid = *g;
    else bad("malformed range (expected min:max:step)");
  } else if (s.key == "lambda") {
    if (auto l = parse_real_list(v)) cfg.lambda_list = *l;
    else bad("malformed list of reals");
  } else if (s.key == "pattern") {
    cfg.pattern = std::string(v);
  } else if (s.key == "nodes") {
    if (auto n = parse_int(v)) cfg.nodes = *n;
    else bad("not an integer");
  } else if (s.key == "out") {
    cfg.output_path = std::string(v);
  } else if (s.key == "verbose") {
    if (auto b = parse_bool(v)) cfg.verbose = *b;
    else bad("not a boolean");
  } else if (s.key == "threads") {
    if (auto n = parse_int(v)) cfg.threads = *n;
    else bad("not an integer");
  } else {
    errors.push_back(origin + ": unknown key '" + s.key + "'");
  }
}

void validate(const ExperimentConfig& cfg, std::vector<std::string>& errors) {
  if (cfg.t_list.empty()) errors.push_back("t: at least one time is required");
  for (double t : cfg.t_list) {
    if (t < 0.0) errors.push_back("t: times must be >= 0, got " + format_real(t));
    else if (uses_front_window(cfg.command) && t < 2.0) {
      errors.push_back("t: front-scaled commands need t >= 2, got " + format_real(t));
    }
  }
  const Grid& g = cfg.s_grid;
  if (!(g.step > 0.0)) errors.push_back("s: step must be > 0, got " + format_real(g.step));
  else if (g.max < g.min) errors.push_back("s: max " + format_real(g.max) + " is below min " + format_real(g.min));
  else if ((g.max - g.min) / g.step > static_cast<double>(kMaxGridPoints)) {
    errors.push_back("s: grid has more than 100000 points");
  }
  if ((cfg.command == Command::Rmt || cfg.command == Command::Moments) && g.step > 0.0 && g.min < -12.0) {
    errors.push_back("s: soft-edge functions need s >= -12, got " + format_real(g.min));
  }
  for (double lambda : cfg.lambda_list) {
    if (lambda < 0.0 || lambda >= 2.0) {
      errors.push_back("lambda: values must lie in [0, 2), got " + format_real(lambda));
    }
  }
  try {
    (void)PeriodicPattern::parse(cfg.pattern);
  } catch (const ValidationError& e) {
    errors.push_back(std::string("pattern: ") + e.what());
  }
  if (cfg.nodes < 2 || cfg.nodes > 256) {
    errors.push_back("nodes: must lie in [2, 256], got " + std::to_string(cfg.nodes));
  }
  if (cfg.threads < 1 || cfg.threads > 256) {
    errors.push_back("threads: must lie in [1, 256], got " + std::to_string(cfg.threads));
  }
  if (uses_front_window(cfg.command) && g.step > 0.0) {
    for (double t : cfg.t_list) {
      if (t >= 2.0 && moments::front_index(t, g.min) < 1) {
        errors.push_back("s: front cutoff l < 1 at t = " + format_real(t) + ", s = " + format_real(g.min));
      }
    }
  }
}

}  // namespace

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Front: return "front";
    case Command::Moments: return "moments";
    case Command::Rmt: return "rmt";
    case Command::InitState: return "initstate";
    case Command::Verify: return "verify";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (auto c : {Command::Front, Command::Moments, Command::Rmt, Command::InitState, Command::Verify}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<double> Grid::points() const {
  std::vector<double> out;
  if (!(step > 0.0) || max < min) return out;
  const auto n = static_cast<long>(std::floor((max - min) / step + 1e-9));
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) out.push_back(min + static_cast<double>(k) * step);
  return out;
}

ConfigResult parse_config(const ConfigSources& sources) {
  ConfigResult result;
  ExperimentConfig cfg;
  std::map<std::string, std::string, std::less<>> from_file;

  if (sources.file_text) {
    std::istringstream in(*sources.file_text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string_view body = trim(line);
      if (body.empty() || body.front() == '#') continue;
      const auto eq = body.find('=');
      const std::string origin = sources.file_label + ":" + std::to_string(line_no);
      if (eq == std::string_view::npos) {
        result.errors.push_back(origin + ": expected 'key = value', got '" + std::string(body) + "'");
        continue;
      }
      Setting s{std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1)))};
      apply(cfg, s, origin, result.errors);
      from_file[s.key] = s.value;
    }
  }

  for (const auto& flag : sources.flags) {
    if (auto it = from_file.find(flag.key); it != from_file.end() && it->second != trim(flag.value)) {
      result.notes.push_back("flag --" + flag.key + "=" + flag.value + " overrides " + sources.file_label +
                             " value '" + it->second + "'");
    }
    apply(cfg, flag, "--" + flag.key, result.errors);
  }

  validate(cfg, result.errors);
  if (result.errors.empty()) result.config = std::move(cfg);
  return result;
}

std::string read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading config file '" + path + "'");
  return buf.str();
}

std::string describe(const ExperimentConfig& cfg) {
  std::string out = "command=" + std::string(command_name(cfg.command));
  out += " t=" + join(cfg.t_list);
  out += " s=" + format_real(cfg.s_grid.min) + ":" + format_real(cfg.s_grid.max) + ":" + format_real(cfg.s_grid.step);
  out += " lambda=" + join(cfg.lambda_list);
  out += " pattern=" + cfg.pattern;
  out += " nodes=" + std::to_string(cfg.nodes);
  return out;
}

}  // namespace ffront::runner
