#include "splitdg/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "splitdg/solver.hpp"

namespace splitdg {

DiagnosticsRecord total_quantities(const Field& u, const CartesianMesh& mesh, const PolyBasis& basis,
                                   const GasModel& gas) {
  const int n = basis.num_nodes();
  const auto w = basis.weights();
  double sums[7] = {0, 0, 0, 0, 0, 0, 0};
  for (int e = 0; e < u.num_elements(); ++e) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const EulerState s = u.state(e, u.node_index(i, j, k));
          const PrimState prim = primitive_from_conserved(s, gas);
          const double wq = w[i] * w[j] * w[k];
          for (int v = 0; v < 5; ++v) sums[v] += wq * s[v];
          sums[5] += wq * kinetic_energy_density(prim);
          sums[6] += wq * (-prim.rho * specific_entropy(prim, gas) / (gas.gamma - 1.0));
        }
      }
    }
  }
  const double jac = mesh.jacobian();
  DiagnosticsRecord r;
  r.mass = jac * sums[0];
  r.mom_x = jac * sums[1];
  r.mom_y = jac * sums[2];
  r.mom_z = jac * sums[3];
  r.energy = jac * sums[4];
  r.kinetic_energy = jac * sums[5];
  r.entropy_total = jac * sums[6];
  return r;
}

double enstrophy(const Field& u, const CartesianMesh& mesh, const PolyBasis& basis) {
  const int n = basis.num_nodes();
  const int npe = u.nodes_per_element();
  const auto w = basis.weights();
  const DenseMatrix& d = basis.deriv();
  std::vector<double> vel(3 * static_cast<std::size_t>(npe));
  // grad[c][dir] per node: derivative of velocity component c along dir
  std::vector<double> grad(9 * static_cast<std::size_t>(npe));
  double total = 0.0;
  for (int e = 0; e < u.num_elements(); ++e) {
    for (int node = 0; node < npe; ++node) {
      const double* s = u.node(e, node);
      if (!(s[0] > 0.0)) throw std::domain_error("enstrophy: nonpositive density");
      for (int c = 0; c < 3; ++c) vel[3 * node + c] = s[1 + c] / s[0];
    }
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const int node = u.node_index(i, j, k);
          const int idx[3] = {i, j, k};
          for (int dir = 0; dir < 3; ++dir) {
            const double scale = 2.0 / mesh.spacing(dir);
            for (int c = 0; c < 3; ++c) {
              double acc = 0.0;
              for (int m = 0; m < n; ++m) {
                int ijk[3] = {i, j, k};
                ijk[dir] = m;
                acc += d(idx[dir], m) * vel[3 * u.node_index(ijk[0], ijk[1], ijk[2]) + c];
              }
              grad[9 * node + 3 * c + dir] = scale * acc;
            }
          }
        }
      }
    }
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const int node = u.node_index(i, j, k);
          const double* g = grad.data() + 9 * node;
          const double wx = g[3 * 2 + 1] - g[3 * 1 + 2];
          const double wy = g[3 * 0 + 2] - g[3 * 2 + 0];
          const double wz = g[3 * 1 + 0] - g[3 * 0 + 1];
          total += w[i] * w[j] * w[k] * 0.5 * u.node(e, node)[0] * (wx * wx + wy * wy + wz * wz);
        }
      }
    }
  }
  return mesh.jacobian() * total / mesh.domain_volume();
}

double ke_dissipation_rate(const Field& u, const Field& rate, const CartesianMesh& mesh,
                           const PolyBasis& basis) {
  return -kinetic_energy_rate(u, rate, mesh, basis);
}

std::optional<double> numerical_viscosity(double rate, double sigma) noexcept {
  if (!(sigma > kEnstrophyFloor)) return std::nullopt;
  return rate / (2.0 * sigma);
}

Vec5 discrete_l2_error(const Field& u, const ExactSolution& exact, double t, const CartesianMesh& mesh,
                       const PolyBasis& basis) {
  const int n = basis.num_nodes();
  const auto w = basis.weights();
  Vec5 sums{};
  for (int e = 0; e < u.num_elements(); ++e) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const Point x = node_coordinates(mesh, basis, e, i, j, k);
          const EulerState ex = exact(x.x, x.y, x.z, t);
          const double* s = u.node(e, u.node_index(i, j, k));
          const double wq = w[i] * w[j] * w[k];
          for (int v = 0; v < 5; ++v) sums[v] += wq * (s[v] - ex[v]) * (s[v] - ex[v]);
        }
      }
    }
  }
  Vec5 out;
  for (int v = 0; v < 5; ++v) out[v] = std::sqrt(mesh.jacobian() * sums[v]);
  return out;
}

}  // namespace splitdg
