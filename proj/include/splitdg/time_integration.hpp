#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "splitdg/field.hpp"
#include "splitdg/solver.hpp"

namespace splitdg {

/// Coefficients of a 2-register low-storage Runge-Kutta scheme.
struct LsrkCoefficients {
  std::array<double, 5> a;
  std::array<double, 5> b;
  std::array<double, 5> c;
};

/// Carpenter-Kennedy five-stage, fourth-order 2N-storage scheme.
const LsrkCoefficients& carpenter_kennedy_rk4() noexcept;

/// rate(u, t, out) writes du/dt into out.
using RateFn = std::function<void(std::span<const double> u, double t, std::span<double> out)>;

/// Stepper with persistent register storage:
///   R <- a_i R + rate(U, t + c_i dt);  U <- U + b_i dt R
class LowStorageRk {
public:
  explicit LowStorageRk(const LsrkCoefficients& coeffs = carpenter_kennedy_rk4()) : coeffs_(coeffs) {}

  /// Advances u in place. Exceptions thrown by `rate` propagate and leave u
  /// at an intermediate stage.
  void step(std::span<double> u, double t, double dt, const RateFn& rate);

  /// Field form driven by the DG residual.
  void step(Field& u, double t, double dt, const SplitFormDg& solver);

private:
  LsrkCoefficients coeffs_;
  std::vector<double> reg_;
  std::vector<double> k_;
  Field rate_field_;
};

/// Allocating one-step convenience.
Field lsrk_step(const Field& u, double t, double dt, const SplitFormDg& solver);

/// dt = cfl / max over nodes of sum_d (|u_d| + a) (N + 1) / dx_d.
/// Throws ConfigError for cfl <= 0 and InvalidStateError for invalid states.
double compute_dt(const Field& u, const CartesianMesh& mesh, const PolyBasis& basis, const GasModel& gas,
                  double cfl);

}  // namespace splitdg
