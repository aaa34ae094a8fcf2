#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitdg/cases.hpp"
#include "splitdg/numerical_fluxes.hpp"

namespace splitdg {

/// Settings for run, converge and sweep. Parsed from flat key=value text;
/// '#' starts a comment and list values are comma separated.
///
/// Keys: case, N, elements, scheme, stab, cfl, t_end, output_interval,
/// gamma, seed, threads, output, grids, degrees, schemes.
struct RunConfig {
  CaseId case_id = CaseId::tgv;
  int degree = 3;
  int elements = 4;
  FluxScheme scheme = FluxScheme::kg;
  /// empty means the scheme's paired stabilization
  std::optional<Stabilization> stab;
  double cfl = 0.5;
  double t_end = 1.0;
  double output_interval = 0.1;
  double gamma = 1.4;
  std::uint64_t seed = 0;
  /// 0 keeps the OpenMP default
  int threads = 0;
  /// CSV destination; empty or "-" writes to stdout
  std::string output;
  /// element counts per axis for converge and sweep
  std::vector<int> grids;
  /// polynomial degrees for sweep
  std::vector<int> degrees;
  /// schemes for sweep
  std::vector<FluxScheme> schemes;

  Stabilization effective_stab() const noexcept { return stab.value_or(paired_stabilization(scheme)); }
  Stabilization effective_stab(FluxScheme s) const noexcept { return stab.value_or(paired_stabilization(s)); }

  /// Throws ConfigError when a value is out of range.
  void validate() const;
};

/// Throws ConfigError on unknown keys, malformed lines or bad values.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::string& path);

/// Applies one key=value assignment; used by the parser and for overrides.
void apply_config_value(RunConfig& cfg, std::string_view key, std::string_view value);

}  // namespace splitdg
