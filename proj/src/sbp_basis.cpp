#include "splitdg/sbp_basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "splitdg/errors.hpp"

namespace splitdg {

LegendreValue legendre(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  if (n == 1) return {x, 1.0};
  double p_prev2 = 1.0, p_prev1 = x;
  double dp_prev2 = 0.0, dp_prev1 = 1.0;
  double p = 0.0, dp = 0.0;
  for (int k = 2; k <= n; ++k) {
    p = ((2.0 * k - 1.0) * x * p_prev1 - (k - 1.0) * p_prev2) / k;
    dp = dp_prev2 + (2.0 * k - 1.0) * p_prev1;
    p_prev2 = p_prev1;
    p_prev1 = p;
    dp_prev2 = dp_prev1;
    dp_prev1 = dp;
  }
  return {p, dp};
}

namespace {

// q(x) = P_{N+1}(x) - P_{N-1}(x) vanishes at the interior LGL nodes (it is
// proportional to (x^2 - 1) P_N'(x)); q'(x) = (2N + 1) P_N(x).
struct LobattoPoly {
  double q;
  double dq;
  double p_n;
};

LobattoPoly lobatto_poly(int n, double x) {
  const LegendreValue lm1 = legendre(n - 1, x);
  const LegendreValue ln = legendre(n, x);
  const LegendreValue lp1 = legendre(n + 1, x);
  return {lp1.value - lm1.value, lp1.derivative - lm1.derivative, ln.value};
}

void lgl_nodes_and_weights(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n + 1, 0.0);
  weights.assign(n + 1, 0.0);
  const double norm = 2.0 / (n * (n + 1.0));
  nodes[0] = -1.0;
  nodes[n] = 1.0;
  weights[0] = weights[n] = norm;

  constexpr double pi = std::numbers::pi;
  for (int j = 1; j <= (n + 1) / 2 - 1; ++j) {
    double x = -std::cos((j + 0.25) * pi / n - 3.0 / (8.0 * n * pi * (j + 0.25)));
    for (int iter = 0; iter < 100; ++iter) {
      const LobattoPoly lp = lobatto_poly(n, x);
      const double delta = -lp.q / lp.dq;
      x += delta;
      if (std::abs(delta) <= 1e-15 * std::abs(x) + 1e-17) break;
    }
    const LobattoPoly lp = lobatto_poly(n, x);
    nodes[j] = x;
    nodes[n - j] = -x;
    weights[j] = weights[n - j] = norm / (lp.p_n * lp.p_n);
  }
  if (n % 2 == 0) {
    const LegendreValue mid = legendre(n, 0.0);
    nodes[n / 2] = 0.0;
    weights[n / 2] = norm / (mid.value * mid.value);
  }
}

}  // namespace

PolyBasis build_basis(int degree) {
  if (degree < 1 || degree > PolyBasis::kMaxDegree) {
    throw ConfigError("polynomial degree must lie in [1, 20], got " + std::to_string(degree));
  }
  PolyBasis b;
  b.degree_ = degree;
  const int nn = degree + 1;
  lgl_nodes_and_weights(degree, b.nodes_, b.weights_);

  b.bary_.assign(nn, 1.0);
  for (int j = 0; j < nn; ++j) {
    for (int k = 0; k < nn; ++k) {
      if (k != j) b.bary_[j] *= b.nodes_[j] - b.nodes_[k];
    }
    b.bary_[j] = 1.0 / b.bary_[j];
  }

  // Off-diagonal entries from the barycentric formula, diagonal by the
  // negative-sum trick so that every row sums to zero.
  b.deriv_ = DenseMatrix(nn, nn);
  for (int i = 0; i < nn; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < nn; ++j) {
      if (j == i) continue;
      const double d = (b.bary_[j] / b.bary_[i]) / (b.nodes_[i] - b.nodes_[j]);
      b.deriv_(i, j) = d;
      row_sum += d;
    }
    b.deriv_(i, i) = -row_sum;
  }

  b.qmat_ = DenseMatrix(nn, nn);
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nn; ++j) b.qmat_(i, j) = b.weights_[i] * b.deriv_(i, j);
  }
  b.bmat_ = DenseMatrix(nn, nn);
  b.bmat_(0, 0) = -1.0;
  b.bmat_(degree, degree) = 1.0;
  return b;
}

double PolyBasis::interpolate(std::span<const double> values, double x) const {
  if (static_cast<int>(values.size()) != num_nodes()) {
    throw std::invalid_argument("interpolate: expected " + std::to_string(num_nodes()) + " values");
  }
  double num = 0.0, den = 0.0;
  for (int j = 0; j < num_nodes(); ++j) {
    const double dx = x - nodes_[j];
    if (dx == 0.0) return values[j];
    const double t = bary_[j] / dx;
    num += t * values[j];
    den += t;
  }
  return num / den;
}

std::vector<double> differentiate(const PolyBasis& basis, std::span<const double> values) {
  const int nn = basis.num_nodes();
  if (static_cast<int>(values.size()) != nn) {
    throw std::invalid_argument("differentiate: expected " + std::to_string(nn) + " values");
  }
  std::vector<double> out(nn, 0.0);
  const DenseMatrix& d = basis.deriv();
  for (int i = 0; i < nn; ++i) {
    double s = 0.0;
    for (int j = 0; j < nn; ++j) s += d(i, j) * values[j];
    out[i] = s;
  }
  return out;
}

double quadrature_integrate(const PolyBasis& basis, std::span<const double> values) {
  const int nn = basis.num_nodes();
  if (static_cast<int>(values.size()) != nn) {
    throw std::invalid_argument("quadrature_integrate: expected " + std::to_string(nn) + " values");
  }
  double s = 0.0;
  for (int i = 0; i < nn; ++i) s += basis.weights()[i] * values[i];
  return s;
}

}  // namespace splitdg
