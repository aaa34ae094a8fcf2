#pragma once

#include <array>
#include <cmath>

namespace splitdg {

using Vec5 = std::array<double, 5>;
using Mat5 = std::array<std::array<double, 5>, 5>;

enum class Axis : int { x = 0, y = 1, z = 2 };

constexpr int index_of(Axis a) noexcept { return static_cast<int>(a); }

/// Perfect gas closure p = (gamma - 1) rho theta.
struct GasModel {
  double gamma = 1.4;

  /// Throws ConfigError unless gamma > 1.
  void validate() const;
};

/// Conserved densities (rho, rho u, rho v, rho w, rho e).
struct EulerState {
  Vec5 u{};

  double& operator[](int i) noexcept { return u[i]; }
  double operator[](int i) const noexcept { return u[i]; }
  double rho() const noexcept { return u[0]; }
  double momentum(Axis a) const noexcept { return u[1 + index_of(a)]; }
  double energy() const noexcept { return u[4]; }
};

/// Primitive state (rho, u, v, w, p); everything else is derived on demand.
struct PrimState {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double p = 1.0;

  double velocity(Axis a) const noexcept {
    switch (a) {
      case Axis::x: return u;
      case Axis::y: return v;
      default: return w;
    }
  }
  double speed_squared() const noexcept { return u * u + v * v + w * w; }
  /// specific inner energy theta
  double inner_energy(const GasModel& gas) const noexcept { return p / ((gas.gamma - 1.0) * rho); }
  /// specific total energy e
  double total_energy(const GasModel& gas) const noexcept {
    return inner_energy(gas) + 0.5 * speed_squared();
  }
  /// specific enthalpy h = e + p / rho
  double enthalpy(const GasModel& gas) const noexcept { return total_energy(gas) + p / rho; }
  double sound_speed(const GasModel& gas) const noexcept { return std::sqrt(gas.gamma * p / rho); }
  /// inverse temperature proxy beta = rho / (2 p)
  double beta() const noexcept { return rho / (2.0 * p); }
};

/// Throws InvalidStateError on nonpositive density or pressure.
PrimState primitive_from_conserved(const EulerState& state, const GasModel& gas);
EulerState conserved_from_primitive(const PrimState& prim, const GasModel& gas);

/// Physical Euler flux in direction `dir`.
Vec5 physical_flux(const EulerState& state, Axis dir, const GasModel& gas);
Vec5 physical_flux(const PrimState& prim, Axis dir, const GasModel& gas);

/// max(|u_n^L| + a_L, |u_n^R| + a_R)
double max_wave_speed(const EulerState& left, const EulerState& right, Axis dir, const GasModel& gas);
double max_wave_speed(const PrimState& left, const PrimState& right, Axis dir, const GasModel& gas);

/// s = ln p - gamma ln rho
double specific_entropy(const PrimState& prim, const GasModel& gas);

/// Entropy variables for the entropy S = -rho s / (gamma - 1).
Vec5 entropy_variables(const EulerState& state, const GasModel& gas);
Vec5 entropy_variables(const PrimState& prim, const GasModel& gas);

/// dU/dV: symmetric positive definite for valid states.
Mat5 entropy_jacobian(const EulerState& state, const GasModel& gas);
Mat5 entropy_jacobian(const PrimState& prim, const GasModel& gas);

/// Logarithmic mean (a - b) / (ln a - ln b) with a series branch near a == b.
/// Throws std::domain_error for nonpositive input.
double log_mean(double a, double b);

/// Relative distance |a/b - 1| below which log_mean uses the series branch.
inline constexpr double kLogMeanSeriesThreshold = 1e-4;

/// log_mean without the domain check, for the inner kernels.
inline double log_mean_unchecked(double a, double b) noexcept {
  // f = (a - b) / (a + b), ln(a / b) = 2 atanh(f); the mean is (a + b) f / (2 atanh f).
  const double sum = a + b;
  const double f = (a - b) / sum;
  // |a/b - 1| ~ 2|f|; comparing f keeps the branch choice symmetric in (a, b).
  if (std::abs(f) < 0.5 * kLogMeanSeriesThreshold) {
    const double u = f * f;
    // atanh(f) / f = 1 + u/3 + u^2/5 + u^3/7 + u^4/9 + ...
    const double series = 1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0 + u * (1.0 / 9.0))));
    return 0.5 * sum / series;
  }
  return 0.5 * sum * f / std::atanh(f);
}

/// Kinetic energy density 1/2 rho |u|^2.
inline double kinetic_energy_density(const PrimState& prim) noexcept {
  return 0.5 * prim.rho * prim.speed_squared();
}

}  // namespace splitdg
