// Matrix-form split operators, used to cross-check the flux-differencing
// kernel. Each two-point average maps to a combination of D applied to
// nodal products:
//   <a><b>      -> (D(ab) + a Db + b Da) / 2
//   <a><b><c>   -> (D(abc) + a D(bc) + b D(ac) + c D(ab) + bc Da + ac Db + ab Dc) / 4
//   <ab>        -> D(ab)

#include <string>

#include "solver_detail.hpp"
#include "splitdg/errors.hpp"
#include "splitdg/solver.hpp"

namespace splitdg {

namespace {

using Line = std::vector<double>;

class LineOps {
public:
  LineOps(const DenseMatrix& d, int n) : d_(d), n_(n) {}

  Line diff(const Line& a) const {
    Line out(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      double s = 0.0;
      for (int m = 0; m < n_; ++m) s += d_(i, m) * a[m];
      out[i] = s;
    }
    return out;
  }

  Line mul(const Line& a, const Line& b) const {
    Line out(n_);
    for (int i = 0; i < n_; ++i) out[i] = a[i] * b[i];
    return out;
  }

  Line quad(const Line& a, const Line& b) const {
    const Line dab = diff(mul(a, b)), da = diff(a), db = diff(b);
    Line out(n_);
    for (int i = 0; i < n_; ++i) out[i] = 0.5 * (dab[i] + a[i] * db[i] + b[i] * da[i]);
    return out;
  }

  Line cubic(const Line& a, const Line& b, const Line& c) const {
    const Line bc = mul(b, c), ac = mul(a, c), ab = mul(a, b);
    const Line dabc = diff(mul(ab, c)), dbc = diff(bc), dac = diff(ac), dab = diff(ab);
    const Line da = diff(a), db = diff(b), dc = diff(c);
    Line out(n_);
    for (int i = 0; i < n_; ++i) {
      out[i] = 0.25 * (dabc[i] + a[i] * dbc[i] + b[i] * dac[i] + c[i] * dab[i] + bc[i] * da[i] +
                       ac[i] * db[i] + ab[i] * dc[i]);
    }
    return out;
  }

private:
  const DenseMatrix& d_;
  int n_;
};

void add_to(Line& acc, const Line& x, double factor = 1.0) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += factor * x[i];
}

/// Returns 2 sum_m D_im F#(U_i, U_m) along one line, per variable.
std::array<Line, 5> split_line(FluxScheme scheme, const std::vector<NodeState>& line, int dir,
                               double gamma, const LineOps& ops) {
  const int n = static_cast<int>(line.size());
  auto gather = [&](auto fn) {
    Line out(n);
    for (int i = 0; i < n; ++i) out[i] = fn(line[i]);
    return out;
  };
  const Line rho = gather([](const NodeState& s) { return s.rho; });
  const Line p = gather([](const NodeState& s) { return s.p; });
  std::array<Line, 3> vel;
  for (int k = 0; k < 3; ++k) vel[k] = gather([k](const NodeState& s) { return s.vel[k]; });
  const Line& un = vel[dir];
  const Line dp = ops.diff(p);

  std::array<Line, 5> out;
  switch (scheme) {
    case FluxScheme::standard: {
      const Line mass = ops.mul(rho, un);
      out[0] = ops.diff(mass);
      for (int k = 0; k < 3; ++k) out[1 + k] = ops.diff(ops.mul(mass, vel[k]));
      out[4] = ops.diff(gather([dir](const NodeState& s) { return s.vel[dir] * (s.rho_e + s.p); }));
      break;
    }
    case FluxScheme::mo: {
      const Line mass = ops.mul(rho, un);
      out[0] = ops.diff(mass);
      for (int k = 0; k < 3; ++k) out[1 + k] = ops.quad(mass, vel[k]);
      out[4] = ops.diff(gather(
          [dir, gamma](const NodeState& s) { return (s.p / (gamma - 1.0) + s.p) * s.vel[dir]; }));
      for (int k = 0; k < 3; ++k) {
        const Line mk = ops.mul(mass, vel[k]);
        add_to(out[4], ops.quad(mk, vel[k]));
        add_to(out[4], ops.diff(ops.mul(mk, vel[k])), -0.5);
      }
      break;
    }
    case FluxScheme::du: {
      out[0] = ops.quad(rho, un);
      for (int k = 0; k < 3; ++k) out[1 + k] = ops.quad(ops.mul(rho, vel[k]), un);
      out[4] = ops.quad(gather([](const NodeState& s) { return s.rho_e; }), un);
      add_to(out[4], ops.quad(p, un));
      break;
    }
    case FluxScheme::kg:
    case FluxScheme::pi: {
      out[0] = ops.quad(rho, un);
      for (int k = 0; k < 3; ++k) out[1 + k] = ops.cubic(rho, un, vel[k]);
      if (scheme == FluxScheme::kg) {
        out[4] = ops.cubic(rho, un, gather([](const NodeState& s) { return s.e; }));
        add_to(out[4], ops.quad(p, un));
      } else {
        out[4] = ops.cubic(rho, un, gather([](const NodeState& s) { return s.h; }));
      }
      break;
    }
    case FluxScheme::qu: {
      const Line q1 = gather([](const NodeState& s) { return s.sqrt_rho; });
      std::array<Line, 3> qv;
      for (int k = 0; k < 3; ++k) qv[k] = ops.mul(q1, vel[k]);
      const Line q5 = gather([](const NodeState& s) { return s.sqrt_rho * s.h; });
      out[0] = ops.quad(q1, qv[dir]);
      for (int k = 0; k < 3; ++k) out[1 + k] = ops.quad(qv[dir], qv[k]);
      Line pressure = ops.quad(q1, q5);
      for (int k = 0; k < 3; ++k) add_to(pressure, ops.quad(qv[k], qv[k]), -0.5);
      for (int i = 0; i < n; ++i) out[1 + dir][i] += (gamma - 1.0) / gamma * pressure[i];
      out[4] = ops.quad(qv[dir], q5);
      return out;
    }
    default:
      throw UnsupportedSchemeError("no explicit split form for scheme " +
                                   std::string(to_string(scheme)));
  }
  add_to(out[1 + dir], dp);
  return out;
}

}  // namespace

Field SplitFormDg::split_form_reference_residual(const Field& u, double t) const {
  if (cfg_.scheme == FluxScheme::ir || cfg_.scheme == FluxScheme::ch) {
    throw UnsupportedSchemeError("no explicit split form for scheme " +
                                 std::string(to_string(cfg_.scheme)));
  }
  const std::vector<NodeState> states = node_states(u, t);
  Field rate(u.degree(), u.num_elements());
  const int n = basis_.num_nodes();
  const int npe = u.nodes_per_element();
  const LineOps ops(basis_.deriv(), n);
  std::vector<NodeState> line(n);
  for (int e = 0; e < u.num_elements(); ++e) {
    const NodeState* st = states.data() + static_cast<std::size_t>(e) * npe;
    for (int dir = 0; dir < 3; ++dir) {
      const double scale = -2.0 / mesh_.spacing(dir);
      for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
          for (int l = 0; l < n; ++l) line[l] = st[detail::line_node(dir, l, a, b, n)];
          const auto vol = split_line(cfg_.scheme, line, dir, cfg_.gas.gamma, ops);
          for (int l = 0; l < n; ++l) {
            double* r = rate.node(e, detail::line_node(dir, l, a, b, n));
            for (int v = 0; v < 5; ++v) r[v] += scale * vol[v][l];
          }
        }
      }
    }
  }
  add_surface_terms(states, face_fluxes(states), rate);
  add_source(rate, t);
  return rate;
}

}  // namespace splitdg
