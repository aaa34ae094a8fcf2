#pragma once

#include <functional>
#include <optional>

#include "splitdg/euler.hpp"
#include "splitdg/field.hpp"
#include "splitdg/mesh.hpp"
#include "splitdg/sbp_basis.hpp"

namespace splitdg {

/// Quadrature totals and derived scalars at one instant.
struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;
  double mom_x = 0.0;
  double mom_y = 0.0;
  double mom_z = 0.0;
  double energy = 0.0;
  double kinetic_energy = 0.0;
  /// integral of S = -rho s / (gamma - 1)
  double entropy_total = 0.0;
  double enstrophy = 0.0;
  /// -d kappa / dt, positive when kinetic energy decays
  double ke_dissipation_rate = 0.0;
  std::optional<double> mu_num;
};

/// Fills t and the conserved, kinetic energy and entropy totals.
/// Throws InvalidStateError for invalid states.
DiagnosticsRecord total_quantities(const Field& u, const CartesianMesh& mesh, const PolyBasis& basis,
                                   const GasModel& gas);

/// sigma = (1 / |Omega|) sum J w rho / 2 |curl u|^2 with per-element
/// (broken) collocation derivatives.
double enstrophy(const Field& u, const CartesianMesh& mesh, const PolyBasis& basis);

/// -d kappa / dt from the chain rule contracted with the rate.
double ke_dissipation_rate(const Field& u, const Field& rate, const CartesianMesh& mesh,
                           const PolyBasis& basis);

inline constexpr double kEnstrophyFloor = 1e-12;

/// rate / (2 sigma), or nothing when sigma <= kEnstrophyFloor.
std::optional<double> numerical_viscosity(double rate, double sigma) noexcept;

using ExactSolution = std::function<EulerState(double x, double y, double z, double t)>;

/// Per conserved variable, sqrt(sum J w (U_h - U_exact)^2).
Vec5 discrete_l2_error(const Field& u, const ExactSolution& exact, double t, const CartesianMesh& mesh,
                       const PolyBasis& basis);

}  // namespace splitdg
