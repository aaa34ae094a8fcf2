#include "splitdg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "solver_detail.hpp"
#include "splitdg/errors.hpp"

namespace splitdg {

namespace {

using detail::line_node;
using detail::node_flux;

/// Adds the flux-differencing volume terms of one direction for one
/// element. `dscaled` holds -(2 / dx) 2 D row-major.
template <FluxScheme S, int Dir>
void volume_direction(const NodeState* st, double* r, int n, const double* dscaled, double gamma) {
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      for (int i = 0; i < n; ++i) {
        const int ni = line_node(Dir, i, a, b, n);
        const NodeState& si = st[ni];
        double* ri = r + 5 * ni;
        const double dii = dscaled[i * n + i];
        if (dii != 0.0) {
          const Vec5 f = two_point_flux<S, Dir>(si, si, gamma);
          for (int v = 0; v < 5; ++v) ri[v] += dii * f[v];
        }
        // each symmetric pair once, scattered to both ends
        for (int m = i + 1; m < n; ++m) {
          const int nm = line_node(Dir, m, a, b, n);
          const Vec5 f = two_point_flux<S, Dir>(si, st[nm], gamma);
          const double dim = dscaled[i * n + m];
          const double dmi = dscaled[m * n + i];
          double* rm = r + 5 * nm;
          for (int v = 0; v < 5; ++v) {
            ri[v] += dim * f[v];
            rm[v] += dmi * f[v];
          }
        }
      }
    }
  }
}

template <FluxScheme S>
void volume_terms(const CartesianMesh& mesh, const PolyBasis& basis, const std::vector<NodeState>& states,
                  double gamma, Field& rate) {
  const int n = basis.num_nodes();
  const int npe = rate.nodes_per_element();
  const DenseMatrix& d = basis.deriv();
  std::vector<double> dscaled(3 * static_cast<std::size_t>(n) * n);
  for (int dir = 0; dir < 3; ++dir) {
    const double scale = -2.0 * 2.0 / mesh.spacing(dir);
    for (int i = 0; i < n; ++i) {
      for (int m = 0; m < n; ++m) dscaled[(dir * n + i) * n + m] = scale * d(i, m);
    }
  }
  const int nelem = mesh.num_elements();
#pragma omp parallel for schedule(static)
  for (int e = 0; e < nelem; ++e) {
    const NodeState* st = states.data() + static_cast<std::size_t>(e) * npe;
    double* r = rate.node(e, 0);
    volume_direction<S, 0>(st, r, n, dscaled.data(), gamma);
    volume_direction<S, 1>(st, r, n, dscaled.data() + n * n, gamma);
    volume_direction<S, 2>(st, r, n, dscaled.data() + 2 * n * n, gamma);
  }
}

void dispatch_volume(FluxScheme scheme, const CartesianMesh& mesh, const PolyBasis& basis,
                     const std::vector<NodeState>& states, double gamma, Field& rate) {
  switch (scheme) {
    case FluxScheme::standard: return volume_terms<FluxScheme::standard>(mesh, basis, states, gamma, rate);
    case FluxScheme::mo: return volume_terms<FluxScheme::mo>(mesh, basis, states, gamma, rate);
    case FluxScheme::du: return volume_terms<FluxScheme::du>(mesh, basis, states, gamma, rate);
    case FluxScheme::kg: return volume_terms<FluxScheme::kg>(mesh, basis, states, gamma, rate);
    case FluxScheme::pi: return volume_terms<FluxScheme::pi>(mesh, basis, states, gamma, rate);
    case FluxScheme::ir: return volume_terms<FluxScheme::ir>(mesh, basis, states, gamma, rate);
    case FluxScheme::ch: return volume_terms<FluxScheme::ch>(mesh, basis, states, gamma, rate);
    case FluxScheme::qu: return volume_terms<FluxScheme::qu>(mesh, basis, states, gamma, rate);
  }
  throw std::invalid_argument("unknown flux scheme");
}

}  // namespace

SplitFormDg::SplitFormDg(CartesianMesh mesh, PolyBasis basis, SemidiscreteConfig cfg)
    : mesh_(std::move(mesh)), basis_(std::move(basis)), cfg_(std::move(cfg)) {
  cfg_.gas.validate();
}

std::vector<NodeState> SplitFormDg::node_states(const Field& u, double t) const {
  if (u.degree() != basis_.degree() || u.num_elements() != mesh_.num_elements()) {
    throw std::invalid_argument("field shape does not match mesh and basis");
  }
  const int npe = u.nodes_per_element();
  const double gm1 = cfg_.gas.gamma - 1.0;
  std::vector<NodeState> states(static_cast<std::size_t>(u.num_elements()) * npe);
  for (int e = 0; e < u.num_elements(); ++e) {
    for (int node = 0; node < npe; ++node) {
      const double* s = u.node(e, node);
      const double rho = s[0];
      const double p = gm1 * (s[4] - 0.5 * (s[1] * s[1] + s[2] * s[2] + s[3] * s[3]) / rho);
      if (!(rho > 0.0) || !(p > 0.0) || !std::isfinite(rho) || !std::isfinite(p)) {
        throw InvalidStateError(rho, p, e, node, t);
      }
      const PrimState prim{rho, s[1] / rho, s[2] / rho, s[3] / rho, p};
      states[static_cast<std::size_t>(e) * npe + node] = make_node_state(prim, cfg_.gas);
    }
  }
  return states;
}

std::vector<double> SplitFormDg::face_fluxes(const std::vector<NodeState>& states) const {
  const int n = basis_.num_nodes();
  const int nn = n * n;
  const int npe = n * nn;
  const int nelem = mesh_.num_elements();
  const int last = n - 1;
  std::vector<double> flux(3 * static_cast<std::size_t>(nelem) * nn * 5);
  for (int dir = 0; dir < 3; ++dir) {
    const Axis axis = detail::axis_of(dir);
#pragma omp parallel for schedule(static)
    for (int e = 0; e < nelem; ++e) {
      const int er = mesh_.neighbor(e, detail::plus_face(dir));
      const NodeState* left = states.data() + static_cast<std::size_t>(e) * npe;
      const NodeState* right = states.data() + static_cast<std::size_t>(er) * npe;
      double* out = flux.data() + (static_cast<std::size_t>(dir) * nelem + e) * nn * 5;
      for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
          const Vec5 f = surface_flux(cfg_.scheme, cfg_.stab, left[line_node(dir, last, a, b, n)],
                                      right[line_node(dir, 0, a, b, n)], axis, cfg_.gas);
          for (int v = 0; v < 5; ++v) out[(a + n * b) * 5 + v] = f[v];
        }
      }
    }
  }
  return flux;
}

void SplitFormDg::add_surface_terms(const std::vector<NodeState>& states,
                                    const std::vector<double>& face_flux, Field& rate) const {
  const int n = basis_.num_nodes();
  const int nn = n * n;
  const int npe = n * nn;
  const int nelem = mesh_.num_elements();
  const int last = n - 1;
  const auto w = basis_.weights();
#pragma omp parallel for schedule(static)
  for (int e = 0; e < nelem; ++e) {
    const NodeState* st = states.data() + static_cast<std::size_t>(e) * npe;
    for (int dir = 0; dir < 3; ++dir) {
      const double scale = 2.0 / mesh_.spacing(dir);
      const double cr = -scale / w[last];
      const double cl = scale / w[0];
      const int el = mesh_.neighbor(e, detail::minus_face(dir));
      const double* fr = face_flux.data() + (static_cast<std::size_t>(dir) * nelem + e) * nn * 5;
      const double* fl = face_flux.data() + (static_cast<std::size_t>(dir) * nelem + el) * nn * 5;
      for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
          const int t = (a + n * b) * 5;
          const int n_hi = line_node(dir, last, a, b, n);
          const int n_lo = line_node(dir, 0, a, b, n);
          const Vec5 f_hi = node_flux(st[n_hi], dir);
          const Vec5 f_lo = node_flux(st[n_lo], dir);
          double* r_hi = rate.node(e, n_hi);
          double* r_lo = rate.node(e, n_lo);
          for (int v = 0; v < 5; ++v) {
            r_hi[v] += cr * (fr[t + v] - f_hi[v]);
            r_lo[v] += cl * (fl[t + v] - f_lo[v]);
          }
        }
      }
    }
  }
}

void SplitFormDg::add_source(Field& rate, double t) const {
  if (!cfg_.source) return;
  const int n = basis_.num_nodes();
  for (int e = 0; e < mesh_.num_elements(); ++e) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const Point x = node_coordinates(mesh_, basis_, e, i, j, k);
          const Vec5 q = cfg_.source(x.x, x.y, x.z, t);
          double* r = rate.node(e, rate.node_index(i, j, k));
          for (int v = 0; v < 5; ++v) r[v] += q[v];
        }
      }
    }
  }
}

void SplitFormDg::compute_residual(const Field& u, double t, Field& rate) const {
  const std::vector<NodeState> states = node_states(u, t);
  if (!rate.same_shape(u)) rate = Field(u.degree(), u.num_elements());
  std::fill(rate.data().begin(), rate.data().end(), 0.0);
  const std::vector<double> face_flux = face_fluxes(states);
  dispatch_volume(cfg_.scheme, mesh_, basis_, states, cfg_.gas.gamma, rate);
  add_surface_terms(states, face_flux, rate);
  add_source(rate, t);
}

Field SplitFormDg::compute_residual(const Field& u, double t) const {
  Field rate(u.degree(), u.num_elements());
  compute_residual(u, t, rate);
  return rate;
}

Field compute_residual(const Field& u, const CartesianMesh& mesh, const PolyBasis& basis,
                       const SemidiscreteConfig& cfg, double t) {
  return SplitFormDg(mesh, basis, cfg).compute_residual(u, t);
}

double kinetic_energy_rate(const Field& u, const Field& rate, const CartesianMesh& mesh,
                           const PolyBasis& basis) {
  if (!u.same_shape(rate)) throw std::invalid_argument("kinetic_energy_rate: shape mismatch");
  const int n = basis.num_nodes();
  const auto w = basis.weights();
  double total = 0.0;
  for (int e = 0; e < u.num_elements(); ++e) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const int node = u.node_index(i, j, k);
          const double* s = u.node(e, node);
          const double* r = rate.node(e, node);
          const double vx = s[1] / s[0], vy = s[2] / s[0], vz = s[3] / s[0];
          const double local =
              -0.5 * (vx * vx + vy * vy + vz * vz) * r[0] + vx * r[1] + vy * r[2] + vz * r[3];
          total += w[i] * w[j] * w[k] * local;
        }
      }
    }
  }
  return mesh.jacobian() * total;
}

}  // namespace splitdg
