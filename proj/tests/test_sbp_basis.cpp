#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "splitdg/errors.hpp"
#include "splitdg/sbp_basis.hpp"
#include "test_support.hpp"

using namespace splitdg;

namespace {

/// Lagrange derivative l_j'(x_i) from the product formula.
double lagrange_derivative(const std::vector<double>& x, int j, int i) {
  const int n = static_cast<int>(x.size());
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == j) continue;
    double term = 1.0 / (x[j] - x[k]);
    for (int m = 0; m < n; ++m) {
      if (m == j || m == k) continue;
      term *= (x[i] - x[m]) / (x[j] - x[m]);
    }
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("closed-form nodes and weights for low degrees") {
  const PolyBasis b1 = build_basis(1);
  CHECK(b1.nodes()[0] == doctest::Approx(-1.0));
  CHECK(b1.nodes()[1] == doctest::Approx(1.0));
  CHECK(b1.weights()[0] == doctest::Approx(1.0));

  const PolyBasis b2 = build_basis(2);
  CHECK(std::abs(b2.nodes()[1]) < 1e-15);
  CHECK(b2.weights()[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(b2.weights()[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

  const PolyBasis b3 = build_basis(3);
  CHECK(b3.nodes()[2] == doctest::Approx(std::sqrt(0.2)).epsilon(1e-14));
  CHECK(b3.nodes()[1] == doctest::Approx(-std::sqrt(0.2)).epsilon(1e-14));
  CHECK(b3.weights()[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(b3.weights()[1] == doctest::Approx(5.0 / 6.0).epsilon(1e-14));

  const PolyBasis b4 = build_basis(4);
  CHECK(b4.nodes()[3] == doctest::Approx(std::sqrt(3.0 / 7.0)).epsilon(1e-14));
  CHECK(b4.weights()[2] == doctest::Approx(32.0 / 45.0).epsilon(1e-14));
  CHECK(b4.weights()[1] == doctest::Approx(49.0 / 90.0).epsilon(1e-14));
  CHECK(b4.weights()[0] == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("nodes are sorted, symmetric and weights sum to two") {
  for (int n = 1; n <= PolyBasis::kMaxDegree; ++n) {
    const PolyBasis b = build_basis(n);
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
      sum += b.weights()[i];
      CHECK(b.nodes()[i] == doctest::Approx(-b.nodes()[n - i]).epsilon(1e-15));
      CHECK(b.weights()[i] == doctest::Approx(b.weights()[n - i]).epsilon(1e-14));
      if (i > 0) CHECK(b.nodes()[i] > b.nodes()[i - 1]);
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("quadrature is exact to degree 2N-1 and D to degree N") {
  for (int n = 1; n <= 12; ++n) {
    const PolyBasis b = build_basis(n);
    std::vector<double> vals(n + 1);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      for (int i = 0; i <= n; ++i) vals[i] = std::pow(b.nodes()[i], p);
      const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
      CHECK(quadrature_integrate(b, vals) == doctest::Approx(exact).epsilon(1e-13));
    }
    for (int i = 0; i <= n; ++i) vals[i] = std::pow(b.nodes()[i], n);
    const auto dv = differentiate(b, vals);
    for (int i = 0; i <= n; ++i) {
      CHECK(dv[i] == doctest::Approx(n * std::pow(b.nodes()[i], n - 1)).epsilon(1e-11));
    }
  }
}

TEST_CASE("derivative matrix matches the Lagrange product formula") {
  for (int n : {1, 2, 5, 9, 15}) {
    const PolyBasis b = build_basis(n);
    const std::vector<double> x(b.nodes().begin(), b.nodes().end());
    for (int i = 0; i <= n; ++i) {
      double row = 0.0;
      for (int j = 0; j <= n; ++j) {
        CHECK(b.deriv()(i, j) == doctest::Approx(lagrange_derivative(x, j, i)).epsilon(1e-10));
        row += b.deriv()(i, j);
      }
      CHECK(std::abs(row) < 1e-12);
    }
    // endpoint diagonal entries are +-N(N+1)/4
    CHECK(b.deriv()(0, 0) == doctest::Approx(-n * (n + 1) / 4.0).epsilon(1e-12));
    CHECK(b.deriv()(n, n) == doctest::Approx(n * (n + 1) / 4.0).epsilon(1e-12));
  }
}

TEST_CASE("summation by parts Q + Q^T = B") {
  for (int n = 1; n <= PolyBasis::kMaxDegree; ++n) {
    const PolyBasis b = build_basis(n);
    double worst = 0.0;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        worst = std::max(worst, std::abs(b.qmat()(i, j) + b.qmat()(j, i) - b.bmat()(i, j)));
      }
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("two-point averaging identities for the derivative matrix") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int n : {2, 3, 5, 8}) {
    const PolyBasis b = build_basis(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> a(n + 1), bb(n + 1), c(n + 1);
      for (int i = 0; i <= n; ++i) {
        a[i] = dist(rng);
        bb[i] = dist(rng);
        c[i] = dist(rng);
      }
      CHECK(testing::flux_diff_defect(b.deriv(), a, bb, c) < 1e-12);
    }
  }
}

TEST_CASE("interpolation reproduces polynomials of degree N") {
  const PolyBasis b = build_basis(6);
  std::vector<double> vals(7);
  auto poly = [](double x) { return 1.0 - 2.0 * x + 0.5 * std::pow(x, 5) + std::pow(x, 6); };
  for (int i = 0; i <= 6; ++i) vals[i] = poly(b.nodes()[i]);
  for (double x : {-0.9, -0.33, 0.0, 0.41, 0.77}) {
    CHECK(b.interpolate(vals, x) == doctest::Approx(poly(x)).epsilon(1e-13));
  }
  CHECK(b.interpolate(vals, b.nodes()[3]) == doctest::Approx(vals[3]));
}

TEST_CASE("legendre recurrence values") {
  const auto p2 = legendre(2, 0.5);
  CHECK(p2.value == doctest::Approx(-0.125));
  CHECK(p2.derivative == doctest::Approx(1.5));
  const auto p3 = legendre(3, 1.0);
  CHECK(p3.value == doctest::Approx(1.0));
  CHECK(p3.derivative == doctest::Approx(6.0));
}

TEST_CASE("invalid degrees and mismatched inputs are rejected") {
  CHECK_THROWS_AS(build_basis(0), ConfigError);
  CHECK_THROWS_AS(build_basis(PolyBasis::kMaxDegree + 1), ConfigError);
  const PolyBasis b = build_basis(3);
  const std::vector<double> short_vals(3, 1.0);
  CHECK_THROWS_AS(differentiate(b, short_vals), std::invalid_argument);
  CHECK_THROWS_AS(quadrature_integrate(b, short_vals), std::invalid_argument);
}
