#include "splitdg/mesh.hpp"

#include <stdexcept>
#include <string>

#include "splitdg/errors.hpp"

namespace splitdg {

CartesianMesh build_cartesian_mesh(int nx, int ny, int nz, const std::array<Interval, 3>& bounds) {
  CartesianMesh mesh;
  const std::array<int, 3> counts{nx, ny, nz};
  for (int a = 0; a < 3; ++a) {
    if (counts[a] < 1) {
      throw ConfigError("element count per axis must be >= 1, got " + std::to_string(counts[a]));
    }
    if (!(bounds[a].hi > bounds[a].lo)) {
      throw ConfigError("degenerate domain interval along axis " + std::to_string(a));
    }
    mesh.counts_[a] = counts[a];
    mesh.bounds_[a] = bounds[a];
    mesh.spacing_[a] = bounds[a].length() / counts[a];
  }
  return mesh;
}

std::array<int, 3> CartesianMesh::element_coords(int e) const noexcept {
  const int i = e % counts_[0];
  const int rest = e / counts_[0];
  return {i, rest % counts_[1], rest / counts_[1]};
}

int CartesianMesh::neighbor(int element, Face face) const {
  if (element < 0 || element >= num_elements()) {
    throw std::invalid_argument("neighbor: element index out of range");
  }
  const int f = static_cast<int>(face);
  if (f < 0 || f > 5) throw std::invalid_argument("neighbor: invalid face id");
  std::array<int, 3> c = element_coords(element);
  const int axis = f / 2;
  const int step = (f % 2 == 0) ? -1 : 1;
  c[axis] = (c[axis] + step + counts_[axis]) % counts_[axis];
  return element_index(c[0], c[1], c[2]);
}

}  // namespace splitdg
