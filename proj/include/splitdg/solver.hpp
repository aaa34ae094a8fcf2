#pragma once

#include <functional>
#include <vector>

#include "splitdg/euler.hpp"
#include "splitdg/field.hpp"
#include "splitdg/mesh.hpp"
#include "splitdg/numerical_fluxes.hpp"
#include "splitdg/sbp_basis.hpp"

namespace splitdg {

/// Pointwise source q(x, y, z, t) added to dU/dt.
using SourceFunction = std::function<Vec5(double x, double y, double z, double t)>;

struct SemidiscreteConfig {
  FluxScheme scheme = FluxScheme::kg;
  Stabilization stab = Stabilization::llf;
  GasModel gas{};
  SourceFunction source{};
};

/// Terms of the discrete kinetic energy balance, each integrated over the
/// domain. With a kinetic energy preserving flux,
/// total = -(advective + pressure_work) + stabilization + source.
struct KeBalance {
  /// flux-difference terms of the kinetic energy flux (volume and interfaces)
  double advective_rate = 0.0;
  /// p~-gradient (pressure work) terms
  double pressure_work_rate = 0.0;
  /// contribution of the interface dissipation
  double stabilization_rate = 0.0;
  double source_rate = 0.0;
  /// chain rule applied to the scheme's full rate
  double total_ke_rate = 0.0;
  /// |total - (-(advective + pressure_work) + stabilization + source)|
  double identity_defect = 0.0;
};

/// Strong-form DGSEM with flux-differencing volume terms on a periodic
/// Cartesian mesh. All evaluation methods are const and allocate their own
/// scratch, so one instance can serve concurrent callers.
class SplitFormDg {
public:
  SplitFormDg(CartesianMesh mesh, PolyBasis basis, SemidiscreteConfig cfg);

  const CartesianMesh& mesh() const noexcept { return mesh_; }
  const PolyBasis& basis() const noexcept { return basis_; }
  const SemidiscreteConfig& config() const noexcept { return cfg_; }
  const GasModel& gas() const noexcept { return cfg_.gas; }

  /// dU/dt. Throws InvalidStateError (with location and time) when any
  /// nodal state is invalid.
  void compute_residual(const Field& u, double t, Field& rate) const;
  Field compute_residual(const Field& u, double t) const;

  /// Same surface and source treatment, but the volume operator is built
  /// from explicit split-form products of D with diagonal matrices.
  /// Only for schemes with a known split form (not IR or CH).
  Field split_form_reference_residual(const Field& u, double t) const;

  KeBalance ke_balance_decomposition(const Field& u, double t) const;

private:
  std::vector<NodeState> node_states(const Field& u, double t) const;
  /// F* at every +face, indexed [dir][element][a + n b][var].
  std::vector<double> face_fluxes(const std::vector<NodeState>& states) const;
  void add_surface_terms(const std::vector<NodeState>& states, const std::vector<double>& face_flux,
                         Field& rate) const;
  void add_source(Field& rate, double t) const;

  CartesianMesh mesh_;
  PolyBasis basis_;
  SemidiscreteConfig cfg_;
};

/// Free-function form of SplitFormDg::compute_residual.
Field compute_residual(const Field& u, const CartesianMesh& mesh, const PolyBasis& basis,
                       const SemidiscreteConfig& cfg, double t);

/// Quadrature integral of the chain-rule kinetic energy rate
/// sum J w [ -|u|^2/2 rho_t + u . (rho u)_t ].
double kinetic_energy_rate(const Field& u, const Field& rate, const CartesianMesh& mesh,
                           const PolyBasis& basis);

}  // namespace splitdg
