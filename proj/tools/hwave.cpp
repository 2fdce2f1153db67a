// Command-line driver for the Hermite wave experiments.
//
//   hwave gaussian1d --scheme conservative --m 2 --lambda 1.0
//   hwave conserve1d --m 3 --steps 10000 --out energy.csv
//   hwave planewave2d --config run.cfg --m 2

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "hermite/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hermite::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class Run>
void emit(const hermite::RunConfig& cfg, const Run& run) {
  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out);
    if (!os) throw hermite::ConfigError("cannot write output file '" + cfg.out + "'");
    hermite::write_csv(os, run);
  }
  hermite::write_summary(std::cout, cfg, run);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite methods for the scalar wave equation"};
  app.require_subcommand(1);

  // Flag values are kept as strings and applied after the config file, so
  // the command line always wins.
  struct Flag {
    const char* key;
    const char* help;
    std::string value;
  };
  std::vector<Flag> flags = {
      {"scheme", "dissipative | conservative", {}},
      {"m", "nodal order of the displacement", {}},
      {"lambda", "CFL number c dt / h in (0, 1]", {}},
      {"levels", "number of refinement levels", {}},
      {"n0", "cells on the coarsest level", {}},
      {"out", "CSV output path", {}},
      {"seed", "random seed for mode=random", {}},
      {"steps", "time steps for conserve1d", {}},
      {"threads", "worker threads for the cell loops", {}},
      {"mode", "smooth | random | zero initial data for conserve1d", {}},
  };
  std::string config_path;

  const std::pair<const char*, const char*> commands[] = {
      {"gaussian1d", "1D Gaussian pulse between Dirichlet walls, convergence study"},
      {"conserve1d", "long conservative run on a periodic domain, energy trace"},
      {"planewave2d", "2D periodic plane wave, convergence study"},
      {"custom", "any setup given by the config file and flags"},
  };
  for (const auto& [name, about] : commands) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("--config", config_path, "key=value configuration file");
    for (Flag& f : flags) sub->add_option(std::string("--") + f.key, f.value, f.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const hermite::Experiment experiment = hermite::parse_experiment(app.get_subcommands().front()->get_name());
    hermite::RunConfig cfg = hermite::defaults_for(experiment);
    if (!config_path.empty()) cfg = hermite::parse_config(read_file(config_path), cfg);
    cfg.experiment = experiment;
    for (const Flag& f : flags)
      if (!f.value.empty()) hermite::apply_setting(cfg, f.key, f.value);
    cfg.validate();

    switch (experiment) {
      case hermite::Experiment::gaussian1d: emit(cfg, hermite::run_gaussian_1d(cfg)); break;
      case hermite::Experiment::conserve1d: emit(cfg, hermite::run_conservation_1d(cfg)); break;
      case hermite::Experiment::planewave2d: emit(cfg, hermite::run_planewave_2d(cfg)); break;
      case hermite::Experiment::custom: emit(cfg, hermite::run_custom(cfg)); break;
    }
  } catch (const hermite::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const hermite::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
