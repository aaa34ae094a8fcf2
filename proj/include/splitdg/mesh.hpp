#pragma once

#include <array>

namespace splitdg {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const noexcept { return hi - lo; }
};

/// Face ids, ordered -x, +x, -y, +y, -z, +z.
enum class Face : int { xm = 0, xp = 1, ym = 2, yp = 3, zm = 4, zp = 5 };

/// Uniform, fully periodic Cartesian hexahedral mesh.
///
/// Elements are numbered lexicographically, e = i + nx (j + ny k).
class CartesianMesh {
public:
  int nx() const noexcept { return counts_[0]; }
  int ny() const noexcept { return counts_[1]; }
  int nz() const noexcept { return counts_[2]; }
  int count(int axis) const noexcept { return counts_[axis]; }
  int num_elements() const noexcept { return counts_[0] * counts_[1] * counts_[2]; }

  const Interval& bounds(int axis) const noexcept { return bounds_[axis]; }
  /// element side length along axis
  double spacing(int axis) const noexcept { return spacing_[axis]; }
  /// X_xi, Y_eta, Z_zeta: half the side lengths
  double metric(int axis) const noexcept { return 0.5 * spacing_[axis]; }
  /// J = dx dy dz / 8
  double jacobian() const noexcept { return 0.125 * spacing_[0] * spacing_[1] * spacing_[2]; }
  double domain_volume() const noexcept {
    return bounds_[0].length() * bounds_[1].length() * bounds_[2].length();
  }

  int element_index(int i, int j, int k) const noexcept { return i + counts_[0] * (j + counts_[1] * k); }
  std::array<int, 3> element_coords(int e) const noexcept;

  /// Periodic face neighbor; throws std::invalid_argument on bad indices.
  int neighbor(int element, Face face) const;

  /// Physical coordinate of reference coordinate xi in [-1, 1] of element cell `cell` along axis.
  double physical_coordinate(int axis, int cell, double xi) const noexcept {
    return bounds_[axis].lo + spacing_[axis] * (cell + 0.5 * (xi + 1.0));
  }

private:
  friend CartesianMesh build_cartesian_mesh(int, int, int, const std::array<Interval, 3>&);

  std::array<int, 3> counts_{1, 1, 1};
  std::array<Interval, 3> bounds_{};
  std::array<double, 3> spacing_{1.0, 1.0, 1.0};
};

/// Throws ConfigError on nonpositive counts or empty intervals.
CartesianMesh build_cartesian_mesh(int nx, int ny, int nz, const std::array<Interval, 3>& bounds);

}  // namespace splitdg
