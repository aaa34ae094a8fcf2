#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "splitdg/euler.hpp"

namespace splitdg {

/// Two-point volume flux families.
enum class FluxScheme { standard, mo, du, kg, pi, ir, ch, qu };

/// Jump-proportional interface dissipation.
enum class Stabilization { none, llf, ch, ir };

inline constexpr FluxScheme kAllFluxSchemes[] = {FluxScheme::standard, FluxScheme::mo, FluxScheme::du,
                                                 FluxScheme::kg,       FluxScheme::pi, FluxScheme::ir,
                                                 FluxScheme::ch,       FluxScheme::qu};
inline constexpr Stabilization kAllStabilizations[] = {Stabilization::none, Stabilization::llf,
                                                       Stabilization::ch, Stabilization::ir};

/// Config names: "standard", "mo", "du", "kg", "pi", "ir", "ch", "qu".
FluxScheme parse_flux_scheme(std::string_view name);
/// Config names: "none", "llf", "ch", "ir".
Stabilization parse_stabilization(std::string_view name);
std::string_view to_string(FluxScheme scheme) noexcept;
std::string_view to_string(Stabilization stab) noexcept;

/// The dissipation each volume flux is paired with: CH and IR use their
/// entropy-stable terms, every other scheme uses LLF.
Stabilization paired_stabilization(FluxScheme scheme) noexcept;

/// Nodal quantities shared by all two-point fluxes, computed once per node.
struct NodeState {
  double rho;
  double vel[3];
  double p;
  double rho_e;     // total energy density
  double e;         // specific total energy
  double h;         // specific enthalpy
  double beta;      // rho / (2 p)
  double z1;        // sqrt(rho / p)
  double z5;        // sqrt(rho p)
  double sqrt_rho;  // first Roe variable

  PrimState prim() const noexcept { return {rho, vel[0], vel[1], vel[2], p}; }
  EulerState conserved() const noexcept {
    return EulerState{{rho, rho * vel[0], rho * vel[1], rho * vel[2], rho_e}};
  }
};

inline NodeState make_node_state(const PrimState& prim, const GasModel& gas) noexcept {
  NodeState s;
  s.rho = prim.rho;
  s.vel[0] = prim.u;
  s.vel[1] = prim.v;
  s.vel[2] = prim.w;
  s.p = prim.p;
  s.e = prim.total_energy(gas);
  s.rho_e = prim.rho * s.e;
  s.h = s.e + prim.p / prim.rho;
  s.beta = prim.beta();
  s.z1 = std::sqrt(prim.rho / prim.p);
  s.z5 = std::sqrt(prim.rho * prim.p);
  s.sqrt_rho = std::sqrt(prim.rho);
  return s;
}

/// Throws InvalidStateError for invalid states.
NodeState make_node_state(const EulerState& state, const GasModel& gas);

namespace detail {

inline double avg(double a, double b) noexcept { return 0.5 * (a + b); }

}  // namespace detail

/// Symmetric, consistent two-point flux of family S in direction Dir.
/// Assumes valid states (positive rho and p).
template <FluxScheme S, int Dir>
inline Vec5 two_point_flux(const NodeState& l, const NodeState& r, double gamma) noexcept {
  using detail::avg;
  static_assert(Dir >= 0 && Dir < 3);
  constexpr int n = Dir;
  Vec5 f;
  if constexpr (S == FluxScheme::standard) {
    const double mass_l = l.rho * l.vel[n], mass_r = r.rho * r.vel[n];
    f[0] = avg(mass_l, mass_r);
    for (int k = 0; k < 3; ++k) f[1 + k] = avg(mass_l * l.vel[k], mass_r * r.vel[k]);
    f[1 + n] += avg(l.p, r.p);
    f[4] = avg(l.vel[n] * (l.rho_e + l.p), r.vel[n] * (r.rho_e + r.p));
  } else if constexpr (S == FluxScheme::mo) {
    const double mass_l = l.rho * l.vel[n], mass_r = r.rho * r.vel[n];
    f[0] = avg(mass_l, mass_r);
    const double inv_gm1 = 1.0 / (gamma - 1.0);
    double energy = avg((l.p * inv_gm1 + l.p) * l.vel[n], (r.p * inv_gm1 + r.p) * r.vel[n]);
    for (int k = 0; k < 3; ++k) {
      const double uk = avg(l.vel[k], r.vel[k]);
      f[1 + k] = f[0] * uk;
      const double ml = mass_l * l.vel[k], mr = mass_r * r.vel[k];
      energy += avg(ml, mr) * uk - 0.5 * avg(ml * l.vel[k], mr * r.vel[k]);
    }
    f[1 + n] += avg(l.p, r.p);
    f[4] = energy;
  } else if constexpr (S == FluxScheme::du) {
    const double un = avg(l.vel[n], r.vel[n]);
    f[0] = avg(l.rho, r.rho) * un;
    for (int k = 0; k < 3; ++k) f[1 + k] = avg(l.rho * l.vel[k], r.rho * r.vel[k]) * un;
    const double p_avg = avg(l.p, r.p);
    f[1 + n] += p_avg;
    f[4] = (avg(l.rho_e, r.rho_e) + p_avg) * un;
  } else if constexpr (S == FluxScheme::kg || S == FluxScheme::pi) {
    const double un = avg(l.vel[n], r.vel[n]);
    f[0] = avg(l.rho, r.rho) * un;
    for (int k = 0; k < 3; ++k) f[1 + k] = f[0] * avg(l.vel[k], r.vel[k]);
    const double p_avg = avg(l.p, r.p);
    f[1 + n] += p_avg;
    if constexpr (S == FluxScheme::kg) {
      f[4] = f[0] * avg(l.e, r.e) + p_avg * un;
    } else {
      f[4] = f[0] * avg(l.h, r.h);
    }
  } else if constexpr (S == FluxScheme::ir) {
    const double z1_avg = avg(l.z1, r.z1);
    const double z5_avg = avg(l.z5, r.z5);
    const double z1_ln = log_mean_unchecked(l.z1, r.z1);
    const double z5_ln = log_mean_unchecked(l.z5, r.z5);
    const double rho_hat = z1_avg * z5_ln;
    double vel_hat[3];
    double speed2 = 0.0;
    for (int k = 0; k < 3; ++k) {
      vel_hat[k] = avg(l.z1 * l.vel[k], r.z1 * r.vel[k]) / z1_avg;
      speed2 += vel_hat[k] * vel_hat[k];
    }
    const double p1_hat = z5_avg / z1_avg;
    const double p2_hat =
        (gamma + 1.0) / (2.0 * gamma) * z5_ln / z1_ln + (gamma - 1.0) / (2.0 * gamma) * p1_hat;
    const double h_hat = gamma * p2_hat / (rho_hat * (gamma - 1.0)) + 0.5 * speed2;
    f[0] = rho_hat * vel_hat[n];
    for (int k = 0; k < 3; ++k) f[1 + k] = f[0] * vel_hat[k];
    f[1 + n] += p1_hat;
    f[4] = f[0] * h_hat;
  } else if constexpr (S == FluxScheme::ch) {
    const double rho_ln = log_mean_unchecked(l.rho, r.rho);
    const double beta_ln = log_mean_unchecked(l.beta, r.beta);
    const double p_hat = avg(l.rho, r.rho) / (2.0 * avg(l.beta, r.beta));
    double vel_avg[3];
    double mean_sq = 0.0, sq_mean = 0.0;
    for (int k = 0; k < 3; ++k) {
      vel_avg[k] = avg(l.vel[k], r.vel[k]);
      sq_mean += vel_avg[k] * vel_avg[k];
      mean_sq += avg(l.vel[k] * l.vel[k], r.vel[k] * r.vel[k]);
    }
    const double h_hat =
        1.0 / (2.0 * beta_ln * (gamma - 1.0)) - 0.5 * mean_sq + p_hat / rho_ln + sq_mean;
    f[0] = rho_ln * vel_avg[n];
    for (int k = 0; k < 3; ++k) f[1 + k] = f[0] * vel_avg[k];
    f[1 + n] += p_hat;
    f[4] = f[0] * h_hat;
  } else if constexpr (S == FluxScheme::qu) {
    // Roe variables q = sqrt(rho) (1, u, v, w, h)
    const double q1 = avg(l.sqrt_rho, r.sqrt_rho);
    double qv[3];
    double q_sq = 0.0;
    for (int k = 0; k < 3; ++k) {
      qv[k] = avg(l.sqrt_rho * l.vel[k], r.sqrt_rho * r.vel[k]);
      q_sq += qv[k] * qv[k];
    }
    const double q5 = avg(l.sqrt_rho * l.h, r.sqrt_rho * r.h);
    f[0] = q1 * qv[n];
    for (int k = 0; k < 3; ++k) f[1 + k] = qv[n] * qv[k];
    f[1 + n] += (gamma - 1.0) / gamma * (q1 * q5 - 0.5 * q_sq);
    f[4] = qv[n] * q5;
  }
  return f;
}

/// Runtime-dispatched two-point volume flux.
Vec5 volume_flux(FluxScheme scheme, const NodeState& left, const NodeState& right, Axis dir,
                 const GasModel& gas);
/// As above; IR and CH throw std::domain_error for nonpositive rho or p,
/// all schemes throw InvalidStateError for invalid states.
Vec5 volume_flux(FluxScheme scheme, const EulerState& left, const EulerState& right, Axis dir,
                 const GasModel& gas);

/// Interface dissipation Stab(U-, U+); subtracted from the volume flux.
Vec5 stabilization(Stabilization stab, const NodeState& left, const NodeState& right, Axis dir,
                   const GasModel& gas);
Vec5 stabilization(Stabilization stab, const EulerState& left, const EulerState& right, Axis dir,
                   const GasModel& gas);

/// F*(U-, U+) = F#(U-, U+) - Stab(U-, U+)
Vec5 surface_flux(FluxScheme scheme, Stabilization stab, const NodeState& left, const NodeState& right,
                  Axis dir, const GasModel& gas);
Vec5 surface_flux(FluxScheme scheme, Stabilization stab, const EulerState& left,
                  const EulerState& right, Axis dir, const GasModel& gas);

/// IR-averaged state (rho^, u^, v^, w^, p^_1) and the enthalpy h^ built from p^_2.
struct IrAverage {
  PrimState prim;
  double h_hat;
};
IrAverage ir_average(const NodeState& left, const NodeState& right, const GasModel& gas) noexcept;

/// Random valid states: rho in [0.1, 10], velocities in [-2, 2], p in [0.1, 10].
class StateSampler {
public:
  explicit StateSampler(std::uint64_t seed = 20160321) : rng_(seed) {}

  PrimState prim();
  EulerState conserved(const GasModel& gas) { return conserved_from_primitive(prim(), gas); }

private:
  std::mt19937_64 rng_;
};

struct KepReport {
  bool passes = false;
  double max_defect = 0.0;
};

/// Defect threshold below which a scheme counts as having the kinetic
/// energy preserving momentum structure.
inline constexpr double kKepDefectTolerance = 1e-13;

/// Samples random state pairs and checks, in all three directions, that
/// the momentum components factor as F^1 <u_k> + delta_kn p~ with a pressure
/// p~ that is consistent and symmetric. Defects are relative to the flux size.
KepReport check_kep_structure(FluxScheme scheme, int sample_count, std::uint64_t seed = 7,
                              const GasModel& gas = {});

}  // namespace splitdg
