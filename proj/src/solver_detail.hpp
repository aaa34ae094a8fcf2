#pragma once

#include "splitdg/mesh.hpp"
#include "splitdg/numerical_fluxes.hpp"

namespace splitdg::detail {

/// Volume index of the node at position `l` along `dir`, with transverse
/// indices (a, b) in increasing axis order.
inline int line_node(int dir, int l, int a, int b, int n) noexcept {
  switch (dir) {
    case 0: return l + n * (a + n * b);
    case 1: return a + n * (l + n * b);
    default: return a + n * (b + n * l);
  }
}

/// Physical flux from precomputed nodal quantities.
inline Vec5 node_flux(const NodeState& s, int dir) noexcept {
  const double un = s.vel[dir];
  const double mass = s.rho * un;
  Vec5 f{mass, mass * s.vel[0], mass * s.vel[1], mass * s.vel[2], un * (s.rho_e + s.p)};
  f[1 + dir] += s.p;
  return f;
}

inline Axis axis_of(int dir) noexcept { return static_cast<Axis>(dir); }

inline Face minus_face(int dir) noexcept { return static_cast<Face>(2 * dir); }
inline Face plus_face(int dir) noexcept { return static_cast<Face>(2 * dir + 1); }

}  // namespace splitdg::detail
