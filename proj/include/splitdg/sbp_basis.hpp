#pragma once

#include <span>
#include <vector>

namespace splitdg {

/// Small dense row-major matrix.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, value) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  double& operator()(int i, int j) noexcept { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const noexcept {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::span<const double> row(int i) const noexcept {
    return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Legendre-Gauss-Lobatto nodal basis of degree N on [-1, 1] together with
/// its collocation quadrature and summation-by-parts operators.
///
/// Invariants: Q + Q^T = B, every row of D sums to zero, the quadrature is
/// exact up to degree 2N-1 and D is exact up to degree N.
class PolyBasis {
public:
  static constexpr int kMaxDegree = 20;

  int degree() const noexcept { return degree_; }
  int num_nodes() const noexcept { return degree_ + 1; }

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> barycentric_weights() const noexcept { return bary_; }

  /// D_ij = l_j'(xi_i)
  const DenseMatrix& deriv() const noexcept { return deriv_; }
  /// Q = M D
  const DenseMatrix& qmat() const noexcept { return qmat_; }
  /// B = diag(-1, 0, ..., 0, 1)
  const DenseMatrix& bmat() const noexcept { return bmat_; }

  /// Evaluates the Lagrange interpolant of nodal values at x.
  double interpolate(std::span<const double> values, double x) const;

private:
  friend PolyBasis build_basis(int degree);

  int degree_ = 0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> bary_;
  DenseMatrix deriv_;
  DenseMatrix qmat_;
  DenseMatrix bmat_;
};

/// Builds the LGL basis; throws ConfigError unless 1 <= degree <= 20.
PolyBasis build_basis(int degree);

/// Returns D * values.
std::vector<double> differentiate(const PolyBasis& basis, std::span<const double> values);

/// Returns sum_i w_i values_i.
double quadrature_integrate(const PolyBasis& basis, std::span<const double> values);

/// Legendre polynomial P_n(x) and its derivative, by the three-term recurrence.
struct LegendreValue {
  double value;
  double derivative;
};
LegendreValue legendre(int n, double x);

}  // namespace splitdg
