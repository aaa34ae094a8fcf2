#include "splitdg/euler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "splitdg/errors.hpp"

namespace splitdg {

namespace {

std::string describe_state(double rho, double p) {
  return "invalid state: rho = " + std::to_string(rho) + ", p = " + std::to_string(p);
}

}  // namespace

InvalidStateError::InvalidStateError(double rho, double p, long element, long node, double time)
    : std::runtime_error(describe_state(rho, p) +
                         (element >= 0 ? " at element " + std::to_string(element) + ", node " +
                                             std::to_string(node) + ", t = " + std::to_string(time)
                                       : std::string{})),
      rho_(rho),
      p_(p),
      element_(element),
      node_(node),
      time_(time) {}

void GasModel::validate() const {
  if (!(gamma > 1.0)) throw ConfigError("gamma must be > 1, got " + std::to_string(gamma));
}

PrimState primitive_from_conserved(const EulerState& s, const GasModel& gas) {
  const double rho = s[0];
  if (!(rho > 0.0)) throw InvalidStateError(rho, std::nan(""));
  const double inv_rho = 1.0 / rho;
  PrimState prim{rho, s[1] * inv_rho, s[2] * inv_rho, s[3] * inv_rho, 0.0};
  prim.p = (gas.gamma - 1.0) * (s[4] - 0.5 * rho * prim.speed_squared());
  if (!(prim.p > 0.0)) throw InvalidStateError(rho, prim.p);
  return prim;
}

EulerState conserved_from_primitive(const PrimState& prim, const GasModel& gas) {
  const double rho = prim.rho;
  return EulerState{{rho, rho * prim.u, rho * prim.v, rho * prim.w,
                     prim.p / (gas.gamma - 1.0) + 0.5 * rho * prim.speed_squared()}};
}

Vec5 physical_flux(const PrimState& prim, Axis dir, const GasModel& gas) {
  const double un = prim.velocity(dir);
  const double rho_un = prim.rho * un;
  const double rho_e = prim.rho * prim.total_energy(gas);
  Vec5 f{rho_un, rho_un * prim.u, rho_un * prim.v, rho_un * prim.w, (rho_e + prim.p) * un};
  f[1 + index_of(dir)] += prim.p;
  return f;
}

Vec5 physical_flux(const EulerState& state, Axis dir, const GasModel& gas) {
  return physical_flux(primitive_from_conserved(state, gas), dir, gas);
}

double max_wave_speed(const PrimState& l, const PrimState& r, Axis dir, const GasModel& gas) {
  return std::max(std::abs(l.velocity(dir)) + l.sound_speed(gas),
                  std::abs(r.velocity(dir)) + r.sound_speed(gas));
}

double max_wave_speed(const EulerState& l, const EulerState& r, Axis dir, const GasModel& gas) {
  return max_wave_speed(primitive_from_conserved(l, gas), primitive_from_conserved(r, gas), dir, gas);
}

double specific_entropy(const PrimState& prim, const GasModel& gas) {
  return std::log(prim.p) - gas.gamma * std::log(prim.rho);
}

Vec5 entropy_variables(const PrimState& prim, const GasModel& gas) {
  const double g = gas.gamma;
  const double s = specific_entropy(prim, gas);
  const double rho_p = prim.rho / prim.p;
  return {(g - s) / (g - 1.0) - 0.5 * rho_p * prim.speed_squared(), rho_p * prim.u, rho_p * prim.v,
          rho_p * prim.w, -rho_p};
}

Vec5 entropy_variables(const EulerState& state, const GasModel& gas) {
  return entropy_variables(primitive_from_conserved(state, gas), gas);
}

Mat5 entropy_jacobian(const PrimState& prim, const GasModel& gas) {
  const double rho = prim.rho, u = prim.u, v = prim.v, w = prim.w, p = prim.p;
  const double rho_e = rho * prim.total_energy(gas);
  const double h = prim.enthalpy(gas);
  const double a2 = gas.gamma * p / rho;
  Mat5 m{};
  m[0] = {rho, rho * u, rho * v, rho * w, rho_e};
  m[1] = {rho * u, rho * u * u + p, rho * u * v, rho * u * w, rho * h * u};
  m[2] = {rho * v, rho * u * v, rho * v * v + p, rho * v * w, rho * h * v};
  m[3] = {rho * w, rho * u * w, rho * v * w, rho * w * w + p, rho * h * w};
  m[4] = {rho_e, rho * h * u, rho * h * v, rho * h * w, rho * h * h - a2 * p / (gas.gamma - 1.0)};
  return m;
}

Mat5 entropy_jacobian(const EulerState& state, const GasModel& gas) {
  return entropy_jacobian(primitive_from_conserved(state, gas), gas);
}

double log_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("log_mean requires positive arguments, got " + std::to_string(a) +
                            " and " + std::to_string(b));
  }
  return log_mean_unchecked(a, b);
}

}  // namespace splitdg
