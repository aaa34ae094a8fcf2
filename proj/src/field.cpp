#include "splitdg/field.hpp"

#include <cmath>

#include "splitdg/errors.hpp"

namespace splitdg {

void Field::validate(const GasModel& gas, double time) const {
  for (int e = 0; e < num_elements_; ++e) {
    for (int n = 0; n < nodes_per_element_; ++n) {
      const double* s = node(e, n);
      const double rho = s[0];
      const double p =
          (gas.gamma - 1.0) * (s[4] - 0.5 * (s[1] * s[1] + s[2] * s[2] + s[3] * s[3]) / rho);
      if (!(rho > 0.0) || !(p > 0.0) || !std::isfinite(rho) || !std::isfinite(p)) {
        throw InvalidStateError(rho, p, e, n, time);
      }
    }
  }
}

Point node_coordinates(const CartesianMesh& mesh, const PolyBasis& basis, int element, int i, int j,
                       int k) {
  const auto c = mesh.element_coords(element);
  const auto xi = basis.nodes();
  return {mesh.physical_coordinate(0, c[0], xi[i]), mesh.physical_coordinate(1, c[1], xi[j]),
          mesh.physical_coordinate(2, c[2], xi[k])};
}

Field interpolate_field(const CartesianMesh& mesh, const PolyBasis& basis, const StateFunction& fn) {
  Field f = Field::zeros(mesh, basis);
  const int nn = basis.num_nodes();
  for (int e = 0; e < mesh.num_elements(); ++e) {
    for (int k = 0; k < nn; ++k) {
      for (int j = 0; j < nn; ++j) {
        for (int i = 0; i < nn; ++i) {
          const Point x = node_coordinates(mesh, basis, e, i, j, k);
          f.set_state(e, f.node_index(i, j, k), fn(x.x, x.y, x.z));
        }
      }
    }
  }
  return f;
}

}  // namespace splitdg
