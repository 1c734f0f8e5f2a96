#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffront/runner/config.hpp"
#include "ffront/runner/runner.hpp"
#include "ffront/version.hpp"

namespace {

struct FlagValues {
  std::string t;
  std::string s;
  std::string lambda;
  std::string pattern;
  std::string nodes;
  std::string out;
  std::string threads;
  std::string config;
  bool verbose = false;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace ffront::runner;

  CLI::App app{"Correlation-front dynamics of free fermions and their soft-edge statistics"};
  app.set_version_flag("--version", std::string(ffront::kVersion));

  FlagValues flags;
  app.add_option("--t", flags.t, "Comma-separated times, e.g. 10,100,1000");
  app.add_option("--s", flags.s, "Rescaled front coordinate grid min:max:step");
  app.add_option("--lambda", flags.lambda, "Comma-separated lambda values for rmt");
  app.add_option("--pattern", flags.pattern, "Initial unit cell as a bit string, e.g. 110100");
  app.add_option("--nodes", flags.nodes, "Gauss-Legendre nodes for Fredholm determinants");
  app.add_option("--out", flags.out, "Output CSV path (default: stdout)");
  app.add_option("--threads", flags.threads, "Worker threads for grid sweeps");
  app.add_option("--config", flags.config, "key = value configuration file");
  app.add_flag("--verbose,-v", flags.verbose, "Log configuration overrides and progress");

  std::string command;
  for (const char* name : {"front", "moments", "rmt", "initstate", "verify"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->callback([&command, name] { command = name; });
  }
  app.get_subcommand("front")->description("|C_{m,n}(t)| over a window covering the light cone");
  app.get_subcommand("moments")->description("M1, M2 along the front and their soft-edge predictions");
  app.get_subcommand("rmt")->description("GOE Tracy-Widom CDF and the GSE/GOE generating functions");
  app.get_subcommand("initstate")->description("Raw and rescaled moments for a periodic initial state");
  app.get_subcommand("verify")->description("Run the invariant suite and report pass/fail per check");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  ConfigSources sources;
  try {
    if (!flags.config.empty()) {
      sources.file_text = read_config_file(flags.config);
      sources.file_label = flags.config;
    }
  } catch (const IoError& e) {
    std::cerr << "ffront: I/O error: " << e.what() << '\n';
    return kExitIo;
  }

  const std::pair<const char*, const std::string*> given[] = {
      {"t", &flags.t},           {"s", &flags.s},       {"lambda", &flags.lambda},
      {"pattern", &flags.pattern}, {"nodes", &flags.nodes}, {"out", &flags.out},
      {"threads", &flags.threads},
  };
  if (!command.empty()) sources.flags.push_back({"command", command});
  for (const auto& [key, value] : given) {
    if (app.count(std::string("--") + key) > 0) sources.flags.push_back({key, *value});
  }
  if (flags.verbose) sources.flags.push_back({"verbose", "true"});

  const auto parsed = parse_config(sources);
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) std::cerr << "ffront: " << e << '\n';
    return kExitValidation;
  }
  const auto& config = *parsed.config;
  if (config.verbose) {
    for (const auto& note : parsed.notes) std::clog << "ffront: " << note << '\n';
    std::clog << "ffront: " << describe(config) << " threads=" << config.threads
              << " out=" << (config.output_path.empty() ? "-" : config.output_path) << '\n';
  }
  return run_to_destination(config, std::cout, std::cerr);
}
