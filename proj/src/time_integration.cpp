#include "splitdg/time_integration.hpp"

#include <algorithm>
#include <cmath>

#include "splitdg/errors.hpp"

namespace splitdg {

namespace {

LsrkCoefficients make_carpenter_kennedy() {
  LsrkCoefficients k{
      {0.0, -567301805773.0 / 1357537059087.0, -2404267990393.0 / 2016746695238.0,
       -3550918686646.0 / 2091501179385.0, -1275806237668.0 / 842570457699.0},
      {1432997174477.0 / 9575080441755.0, 5161836677717.0 / 13612068292357.0,
       1720146321549.0 / 2090206949498.0, 3134564353537.0 / 4481467310338.0,
       2277821191437.0 / 14882151754819.0},
      {}};
  // Stage times follow from a and b (the time reached under f = 1). The
  // published c_2 = 2526269341429 / 6820363183716 is off by 4e-8.
  double reg = 0.0, c = 0.0;
  for (int s = 0; s < 5; ++s) {
    k.c[s] = c;
    reg = k.a[s] * reg + 1.0;
    c += k.b[s] * reg;
  }
  return k;
}

}  // namespace

const LsrkCoefficients& carpenter_kennedy_rk4() noexcept {
  static const LsrkCoefficients coeffs = make_carpenter_kennedy();
  return coeffs;
}

void LowStorageRk::step(std::span<double> u, double t, double dt, const RateFn& rate) {
  reg_.assign(u.size(), 0.0);
  k_.resize(u.size());
  for (std::size_t s = 0; s < coeffs_.a.size(); ++s) {
    rate(u, t + coeffs_.c[s] * dt, k_);
    const double a = coeffs_.a[s];
    const double bdt = coeffs_.b[s] * dt;
    for (std::size_t i = 0; i < u.size(); ++i) {
      reg_[i] = a * reg_[i] + k_[i];
      u[i] += bdt * reg_[i];
    }
  }
}

void LowStorageRk::step(Field& u, double t, double dt, const SplitFormDg& solver) {
  if (!rate_field_.same_shape(u)) rate_field_ = Field(u.degree(), u.num_elements());
  const auto data = u.data();
  reg_.assign(data.size(), 0.0);
  for (std::size_t s = 0; s < coeffs_.a.size(); ++s) {
    solver.compute_residual(u, t + coeffs_.c[s] * dt, rate_field_);
    const auto k = rate_field_.data();
    const double a = coeffs_.a[s];
    const double bdt = coeffs_.b[s] * dt;
    for (std::size_t i = 0; i < data.size(); ++i) {
      reg_[i] = a * reg_[i] + k[i];
      data[i] += bdt * reg_[i];
    }
  }
}

Field lsrk_step(const Field& u, double t, double dt, const SplitFormDg& solver) {
  Field out = u;
  LowStorageRk rk;
  rk.step(out, t, dt, solver);
  return out;
}

double compute_dt(const Field& u, const CartesianMesh& mesh, const PolyBasis& basis, const GasModel& gas,
                  double cfl) {
  if (!(cfl > 0.0)) throw ConfigError("cfl must be positive");
  const double np1 = basis.num_nodes();
  double max_rate = 0.0;
  for (int e = 0; e < u.num_elements(); ++e) {
    for (int node = 0; node < u.nodes_per_element(); ++node) {
      const PrimState prim = primitive_from_conserved(u.state(e, node), gas);
      const double a = prim.sound_speed(gas);
      double local = 0.0;
      for (int d = 0; d < 3; ++d) {
        local += (std::abs(prim.velocity(static_cast<Axis>(d))) + a) * np1 / mesh.spacing(d);
      }
      if (!std::isfinite(local)) throw InvalidStateError(prim.rho, prim.p, e, node);
      max_rate = std::max(max_rate, local);
    }
  }
  return cfl / max_rate;
}

}  // namespace splitdg
