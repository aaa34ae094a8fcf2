// Command line driver: run, converge and sweep subcommands over a key=value
// config file.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitdg/config.hpp"
#include "splitdg/driver.hpp"
#include "splitdg/errors.hpp"

namespace {

using namespace splitdg;

struct CommandArgs {
  std::string config_path;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommandArgs& args) {
  cmd->add_option("config", args.config_path, "key=value config file")->required();
  cmd->add_option("--set", args.overrides, "override a config entry, e.g. --set t_end=2");
}

RunConfig resolve(const CommandArgs& args) {
  RunConfig cfg = load_run_config(args.config_path);
  for (const std::string& item : args.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + item + "'");
    apply_config_value(cfg, item.substr(0, eq), item.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

/// Opens cfg.output, or returns stdout for "" and "-".
std::ostream& open_output(const RunConfig& cfg, std::unique_ptr<std::ofstream>& file) {
  if (cfg.output.empty() || cfg.output == "-") return std::cout;
  file = std::make_unique<std::ofstream>(cfg.output);
  if (!*file) throw ConfigError("cannot open output file '" + cfg.output + "'");
  return *file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3D split-form DG solver for the compressible Euler equations"};
  app.require_subcommand(1);

  CommandArgs run_args, conv_args, sweep_args;
  CLI::App* run = app.add_subcommand("run", "integrate one case and write a diagnostics time series");
  add_common(run, run_args);
  CLI::App* converge = app.add_subcommand("converge", "h-convergence study of the manufactured case");
  add_common(converge, conv_args);
  CLI::App* sweep = app.add_subcommand("sweep", "robustness matrix over N x grid x scheme");
  add_common(sweep, sweep_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    std::unique_ptr<std::ofstream> file;
    if (run->parsed()) {
      const RunConfig cfg = resolve(run_args);
      std::ostream& out = open_output(cfg, file);
      const RunResult res = run_simulation(cfg, &out);
      if (res.crashed) {
        std::cerr << "crashed at t = " << res.t_final << " after " << res.steps
                  << " steps: " << res.crash_message << '\n';
        return kExitCrash;
      }
      std::cerr << "completed t = " << res.t_final << " in " << res.steps << " steps\n";
    } else if (converge->parsed()) {
      const RunConfig cfg = resolve(conv_args);
      run_convergence(cfg, &open_output(cfg, file));
    } else if (sweep->parsed()) {
      const RunConfig cfg = resolve(sweep_args);
      run_sweep(cfg, &open_output(cfg, file));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const SolverCrash& e) {
    std::cerr << e.what() << '\n';
    return kExitCrash;
  }
  return kExitOk;
}
