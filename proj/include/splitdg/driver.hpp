#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitdg/config.hpp"
#include "splitdg/diagnostics.hpp"

namespace splitdg {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitCrash = 3;

struct RunResult {
  bool crashed = false;
  /// time reached, or the time at which the invalid state appeared
  double t_final = 0.0;
  long steps = 0;
  std::string crash_message;
  std::vector<DiagnosticsRecord> records;
  /// per-variable L2 errors at t_final (manufactured case only)
  std::optional<Vec5> final_l2;
};

/// Integrates one case to t_end, or until the first invalid state.
/// When `csv` is given, writes the header and one row per output interval;
/// a crash appends a row with the crash time and nan values.
RunResult run_simulation(const RunConfig& cfg, std::ostream* csv = nullptr);

struct ConvergenceRow {
  int elements = 0;
  Vec5 l2{};
  /// log2 ratio against the previous grid; empty for the first
  std::optional<Vec5> order;
};

/// Runs the manufactured case on every entry of cfg.grids (at least two)
/// and writes grid, errors and observed orders. Throws ConfigError for other
/// cases and SolverCrash when a run fails.
std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg, std::ostream* csv = nullptr);

struct SweepEntry {
  int degree = 0;
  int elements = 0;
  FluxScheme scheme = FluxScheme::kg;
  Stabilization stab = Stabilization::llf;
  bool crashed = false;
  double t_final = 0.0;
};

/// Completion matrix over degrees x grids x schemes (cfg.degree, cfg.elements
/// and cfg.scheme stand in for empty lists). Crashes are recorded, not thrown.
std::vector<SweepEntry> run_sweep(const RunConfig& cfg, std::ostream* csv = nullptr);

/// Raised by run_convergence when a run ends with an invalid state.
class SolverCrash : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caps OpenMP worker threads when threads > 0.
void apply_thread_limit(int threads);

}  // namespace splitdg
