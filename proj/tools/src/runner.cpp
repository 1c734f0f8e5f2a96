#include "ffront/runner/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include "ffront/errors.hpp"
#include "ffront/initcond.hpp"
#include "ffront/lattice.hpp"
#include "ffront/moments.hpp"
#include "ffront/rmt.hpp"
#include "ffront/version.hpp"
#include "verify.hpp"

namespace ffront::runner {

namespace {

// Evaluates f(0..n-1) on `threads` workers; results and the first failure
// (by index) are independent of scheduling.
template <typename F>
auto parallel_map(std::size_t n, int threads, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> results(n);
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = f(i);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (std::size_t k = 0; k < count; ++k) pool.emplace_back(worker);
  }
  for (const auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

void write_preamble(std::ostream& out, const ExperimentConfig& cfg, std::string_view header) {
  out << "# ffront " << kVersion << ' ' << describe(cfg) << '\n' << header << '\n';
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << fields[i];
  }
  out << '\n';
}

using Rows = std::vector<std::vector<std::string>>;

struct Cell {
  double t = 0.0;
  double s = 0.0;
};

std::vector<Cell> ts_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  const auto s_points = cfg.s_grid.points();
  for (double t : cfg.t_list) {
    for (double s : s_points) cells.push_back({t, s});
  }
  return cells;
}

int run_front(const ExperimentConfig& cfg, std::ostream& out) {
  const auto pattern = PeriodicPattern::parse(cfg.pattern);
  write_preamble(out, cfg, "t,m,n,abs_C");
  for (double t : cfg.t_list) {
    // Square window covering the light cone, at most ~201 samples per side.
    const long r = static_cast<long>(std::ceil(2.0 * t + 2.0 * std::cbrt(2.0 * t))) + 4;
    const long stride = std::max(1L, static_cast<long>(std::ceil((2.0 * static_cast<double>(r) + 1.0) / 201.0)));
    std::vector<long> sites;
    for (long m = -r; m <= r; m += stride) sites.push_back(m);
    const auto rows = parallel_map(sites.size(), cfg.threads, [&](std::size_t i) {
      lattice::CorrelatorEngine engine(pattern, t);
      engine.reserve(r);
      Rows block;
      for (long n : sites) {
        block.push_back({format_real(t), std::to_string(sites[i]), std::to_string(n),
                         format_real(std::abs(engine(sites[i], n)))});
      }
      return block;
    });
    for (const auto& block : rows) {
      for (const auto& row : block) write_row(out, row);
    }
  }
  return kExitOk;
}

int run_moments(const ExperimentConfig& cfg, std::ostream& out) {
  const auto pattern = PeriodicPattern::parse(cfg.pattern);
  const auto cells = ts_cells(cfg);
  const auto rows = parallel_map(cells.size(), cfg.threads, [&](std::size_t i) {
    const auto window = moments::FrontWindow::make(cells[i].t, cells[i].s);
    const auto m = moments::moment_table(window, 2, pattern);
    return std::vector<std::string>{format_real(window.t), format_real(window.s), std::to_string(window.l),
                                    format_real(m(1)), format_real(m(2)),
                                    format_real(rmt::predicted_moment(1, window.s)),
                                    format_real(rmt::predicted_moment(2, window.s))};
  });
  write_preamble(out, cfg, "t,s,l,M1,M2,predicted_M1,predicted_M2");
  for (const auto& row : rows) write_row(out, row);
  return kExitOk;
}

int run_rmt(const ExperimentConfig& cfg, std::ostream& out) {
  const auto s_points = cfg.s_grid.points();
  std::vector<std::pair<double, double>> cells;
  for (double lambda : cfg.lambda_list) {
    for (double s : s_points) cells.emplace_back(lambda, s);
  }
  const auto rows = parallel_map(cells.size(), cfg.threads, [&](std::size_t i) {
    const auto [lambda, s] = cells[i];
    return std::vector<std::string>{format_real(lambda), format_real(s),
                                    format_real(rmt::tw1_cdf(s, cfg.nodes)),
                                    format_real(rmt::g_gse(lambda, s, cfg.nodes)),
                                    format_real(rmt::g_goe(lambda, s, cfg.nodes))};
  });
  write_preamble(out, cfg, "lambda,s,tw1_cdf,g_gse,g_goe");
  for (const auto& row : rows) write_row(out, row);
  return kExitOk;
}

int run_initstate(const ExperimentConfig& cfg, std::ostream& out) {
  const auto pattern = PeriodicPattern::parse(cfg.pattern);
  const auto report = initcond::classify(pattern);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const auto cells = ts_cells(cfg);
  const auto rows = parallel_map(cells.size(), cfg.threads, [&](std::size_t i) {
    const auto window = moments::FrontWindow::make(cells[i].t, cells[i].s);
    const auto raw = moments::moment_table(window, 2, pattern);
    const auto alt = moments::moment_table(window, 2);
    const double a1 = report.admits_rmt ? report.rescale.a1 : nan;
    const double a2 = report.admits_rmt ? report.rescale.a2 : nan;
    return std::vector<std::string>{pattern.to_string(), format_real(window.t), format_real(window.s),
                                    std::to_string(window.l), format_real(report.coefficient),
                                    format_real(raw(1)), format_real(raw(2)), format_real(a1), format_real(a2),
                                    format_real(a1 * raw(1)), format_real(a2 * raw(2)),
                                    format_real(alt(1)), format_real(alt(2))};
  });
  write_preamble(out, cfg, "pattern,t,s,l,coefficient,M1,M2,A1,A2,A1_M1,A2_M2,alt_M1,alt_M2");
  for (const auto& row : rows) write_row(out, row);
  return kExitOk;
}

int run_verify(const ExperimentConfig& cfg, std::ostream& out) {
  const auto results = run_verify_suite(cfg);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  out << (failed == 0 ? "verify: all " + std::to_string(results.size()) + " checks passed"
                      : "verify: " + std::to_string(failed) + " of " + std::to_string(results.size()) +
                            " checks failed")
      << '\n';
  return failed == 0 ? kExitOk : kExitInstability;
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

int run(const ExperimentConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::Front: return run_front(config, out);
    case Command::Moments: return run_moments(config, out);
    case Command::Rmt: return run_rmt(config, out);
    case Command::InitState: return run_initstate(config, out);
    case Command::Verify: return run_verify(config, out);
  }
  return kExitValidation;
}

int run_to_destination(const ExperimentConfig& config, std::ostream& fallback, std::ostream& err) {
  try {
    // Buffer everything so a failed run never leaves a partial file.
    std::ostringstream buffer;
    const int code = run(config, buffer);
    if (config.output_path.empty()) {
      fallback << buffer.str() << std::flush;
      if (!fallback) throw IoError("failed to write to standard output");
    } else {
      std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open output file '" + config.output_path + "'");
      file << buffer.str();
      file.close();
      if (!file) throw IoError("failed to write output file '" + config.output_path + "'");
    }
    return code;
  } catch (const ValidationError& e) {
    err << "ffront: validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InstabilityError& e) {
    err << "ffront: numerical instability: " << e.what() << '\n';
    return kExitInstability;
  } catch (const IoError& e) {
    err << "ffront: I/O error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace ffront::runner
