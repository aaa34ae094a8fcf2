#include <cmath>

#include "solver_detail.hpp"
#include "splitdg/solver.hpp"

namespace splitdg {

namespace {

/// Kinetic energy flux 1/2 F1 (u_i . u_m) and the pressure p~ = F_{1+n} - F1 <u_n>
/// implied by a two-point flux.
struct KeParts {
  double fk;
  double pt;
};

KeParts ke_parts(const Vec5& f, const NodeState& a, const NodeState& b, int dir) {
  const double dot = a.vel[0] * b.vel[0] + a.vel[1] * b.vel[1] + a.vel[2] * b.vel[2];
  return {0.5 * f[0] * dot, f[1 + dir] - f[0] * 0.5 * (a.vel[dir] + b.vel[dir])};
}

/// -|u|^2/2 x_0 + u . (x_1, x_2, x_3) at state s.
double ke_contract(const NodeState& s, const Vec5& x) {
  const double u2 = s.vel[0] * s.vel[0] + s.vel[1] * s.vel[1] + s.vel[2] * s.vel[2];
  return -0.5 * u2 * x[0] + s.vel[0] * x[1] + s.vel[1] * x[2] + s.vel[2] * x[3];
}

}  // namespace

KeBalance SplitFormDg::ke_balance_decomposition(const Field& u, double t) const {
  const std::vector<NodeState> states = node_states(u, t);
  const int n = basis_.num_nodes();
  const int npe = u.nodes_per_element();
  const int last = n - 1;
  const int nelem = mesh_.num_elements();
  const DenseMatrix& d = basis_.deriv();
  const auto w = basis_.weights();
  const GasModel& gas = cfg_.gas;

  // nodal contributions, summed with quadrature weights at the end
  std::vector<double> adv(static_cast<std::size_t>(nelem) * npe, 0.0);
  std::vector<double> pw(adv.size(), 0.0);
  std::vector<double> stab(adv.size(), 0.0);
  std::vector<double> src(adv.size(), 0.0);

  for (int e = 0; e < nelem; ++e) {
    const NodeState* st = states.data() + static_cast<std::size_t>(e) * npe;
    double* adv_e = adv.data() + static_cast<std::size_t>(e) * npe;
    double* pw_e = pw.data() + static_cast<std::size_t>(e) * npe;
    double* stab_e = stab.data() + static_cast<std::size_t>(e) * npe;
    for (int dir = 0; dir < 3; ++dir) {
      const Axis axis = detail::axis_of(dir);
      const double scale = 2.0 / mesh_.spacing(dir);
      const int er = mesh_.neighbor(e, detail::plus_face(dir));
      const int el = mesh_.neighbor(e, detail::minus_face(dir));
      const NodeState* st_r = states.data() + static_cast<std::size_t>(er) * npe;
      const NodeState* st_l = states.data() + static_cast<std::size_t>(el) * npe;
      for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
          for (int i = 0; i < n; ++i) {
            const int ni = detail::line_node(dir, i, a, b, n);
            const NodeState& si = st[ni];
            double fk_sum = 0.0, pt_sum = 0.0;
            for (int m = 0; m < n; ++m) {
              const NodeState& sm = st[detail::line_node(dir, m, a, b, n)];
              const KeParts kp = ke_parts(volume_flux(cfg_.scheme, si, sm, axis, gas), si, sm, dir);
              fk_sum += 2.0 * d(i, m) * kp.fk;
              pt_sum += 2.0 * d(i, m) * kp.pt;
            }
            adv_e[ni] += scale * fk_sum;
            pw_e[ni] += scale * si.vel[dir] * pt_sum;
          }

          // +face: this element's last node against the right neighbor's first
          const int n_hi = detail::line_node(dir, last, a, b, n);
          const NodeState& s_hi = st[n_hi];
          const NodeState& s_r = st_r[detail::line_node(dir, 0, a, b, n)];
          const KeParts face_r = ke_parts(volume_flux(cfg_.scheme, s_hi, s_r, axis, gas), s_hi, s_r, dir);
          const KeParts self_hi = ke_parts(detail::node_flux(s_hi, dir), s_hi, s_hi, dir);
          const double c_hi = scale / w[last];
          adv_e[n_hi] += c_hi * (face_r.fk - self_hi.fk);
          pw_e[n_hi] += c_hi * s_hi.vel[dir] * (face_r.pt - self_hi.pt);
          stab_e[n_hi] += c_hi * ke_contract(s_hi, stabilization(cfg_.stab, s_hi, s_r, axis, gas));

          // -face: left neighbor's last node against this element's first
          const int n_lo = detail::line_node(dir, 0, a, b, n);
          const NodeState& s_lo = st[n_lo];
          const NodeState& s_l = st_l[detail::line_node(dir, last, a, b, n)];
          const KeParts face_l = ke_parts(volume_flux(cfg_.scheme, s_l, s_lo, axis, gas), s_lo, s_l, dir);
          const KeParts self_lo = ke_parts(detail::node_flux(s_lo, dir), s_lo, s_lo, dir);
          const double c_lo = scale / w[0];
          adv_e[n_lo] -= c_lo * (face_l.fk - self_lo.fk);
          pw_e[n_lo] -= c_lo * s_lo.vel[dir] * (face_l.pt - self_lo.pt);
          stab_e[n_lo] -= c_lo * ke_contract(s_lo, stabilization(cfg_.stab, s_l, s_lo, axis, gas));
        }
      }
    }
    if (cfg_.source) {
      for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
          for (int i = 0; i < n; ++i) {
            const int node = u.node_index(i, j, k);
            const Point x = node_coordinates(mesh_, basis_, e, i, j, k);
            src[static_cast<std::size_t>(e) * npe + node] =
                ke_contract(st[node], cfg_.source(x.x, x.y, x.z, t));
          }
        }
      }
    }
  }

  auto integrate = [&](const std::vector<double>& nodal) {
    double total = 0.0;
    for (int e = 0; e < nelem; ++e) {
      for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
          for (int i = 0; i < n; ++i) {
            total += w[i] * w[j] * w[k] *
                     nodal[static_cast<std::size_t>(e) * npe + u.node_index(i, j, k)];
          }
        }
      }
    }
    return mesh_.jacobian() * total;
  };

  KeBalance out;
  out.advective_rate = integrate(adv);
  out.pressure_work_rate = integrate(pw);
  out.stabilization_rate = integrate(stab);
  out.source_rate = integrate(src);
  out.total_ke_rate = kinetic_energy_rate(u, compute_residual(u, t), mesh_, basis_);
  out.identity_defect =
      std::abs(out.total_ke_rate - (-(out.advective_rate + out.pressure_work_rate) +
                                    out.stabilization_rate + out.source_rate));
  return out;
}

}  // namespace splitdg
