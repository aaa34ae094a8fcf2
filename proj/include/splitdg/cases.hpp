#pragma once

#include <array>
#include <string_view>

#include "splitdg/euler.hpp"
#include "splitdg/mesh.hpp"

namespace splitdg {

enum class CaseId { manufactured, tgv, tgv_ma04 };

/// Config names: "manufactured", "tgv", "tgv-ma04". Throws ConfigError.
CaseId parse_case(std::string_view name);
std::string_view to_string(CaseId id) noexcept;

/// Periodic box for each case: [-1, 1]^3 or [0, 2 pi]^3.
std::array<Interval, 3> case_domain(CaseId id) noexcept;

/// Travelling density wave: rho = 2 + sin(phi) / 10, phi = pi (x + y + z - 2t),
/// u = v = w = 1, rho e = rho^2.
EulerState manufactured_solution(double x, double y, double z, double t);

/// Forcing that makes manufactured_solution an exact solution.
Vec5 manufactured_source(double x, double y, double z, double t, const GasModel& gas);

enum class TgvVariant { low, ma04 };

/// Inviscid Taylor-Green vortex on [0, 2 pi]^3, rho = 1.
/// The constant pressure term is 100 / gamma (low) or 1 / (gamma 0.4^2) (ma04).
EulerState tgv_initial_condition(double x, double y, double z, TgvVariant variant, const GasModel& gas);

}  // namespace splitdg
