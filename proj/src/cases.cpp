#include "splitdg/cases.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "splitdg/errors.hpp"

namespace splitdg {

CaseId parse_case(std::string_view name) {
  if (name == "manufactured") return CaseId::manufactured;
  if (name == "tgv") return CaseId::tgv;
  if (name == "tgv-ma04") return CaseId::tgv_ma04;
  throw ConfigError("unknown case '" + std::string(name) + "' (expected manufactured, tgv, tgv-ma04)");
}

std::string_view to_string(CaseId id) noexcept {
  switch (id) {
    case CaseId::manufactured: return "manufactured";
    case CaseId::tgv: return "tgv";
    case CaseId::tgv_ma04: return "tgv-ma04";
  }
  return "?";
}

std::array<Interval, 3> case_domain(CaseId id) noexcept {
  if (id == CaseId::manufactured) return {Interval{-1.0, 1.0}, Interval{-1.0, 1.0}, Interval{-1.0, 1.0}};
  const double two_pi = 2.0 * std::numbers::pi;
  return {Interval{0.0, two_pi}, Interval{0.0, two_pi}, Interval{0.0, two_pi}};
}

EulerState manufactured_solution(double x, double y, double z, double t) {
  const double rho = 2.0 + 0.1 * std::sin(std::numbers::pi * (x + y + z - 2.0 * t));
  return EulerState{{rho, rho, rho, rho, rho * rho}};
}

Vec5 manufactured_source(double x, double y, double z, double t, const GasModel& gas) {
  constexpr double pi = std::numbers::pi;
  const double g = gas.gamma;
  const double c1 = pi / 10.0;
  const double c2 = pi * (5.0 * g - 3.0) / 20.0;
  const double c3 = pi * (g - 1.0) / 100.0;
  const double c4 = pi * (15.0 * g - 7.0) / 20.0;
  const double c5 = pi * (3.0 * g - 2.0) / 100.0;
  const double phi = pi * (x + y + z - 2.0 * t);
  const double c = std::cos(phi);
  // second harmonic comes from products sin(phi) cos(phi)
  const double s2 = std::sin(2.0 * phi);
  const double mom = c2 * c + c3 * s2;
  return {c1 * c, mom, mom, mom, c4 * c + c5 * s2};
}

EulerState tgv_initial_condition(double x, double y, double z, TgvVariant variant, const GasModel& gas) {
  const double g = gas.gamma;
  const double base = variant == TgvVariant::low ? 100.0 / g : 1.0 / (g * 0.4 * 0.4);
  const double p = base + (std::cos(2.0 * x) * std::cos(2.0 * z) + 2.0 * std::cos(2.0 * y) +
                           2.0 * std::cos(2.0 * x) + std::cos(2.0 * y) * std::cos(2.0 * z)) /
                              16.0;
  const PrimState prim{1.0, std::sin(x) * std::cos(y) * std::cos(z), -std::cos(x) * std::sin(y) * std::cos(z),
                       0.0, p};
  return conserved_from_primitive(prim, gas);
}

}  // namespace splitdg
