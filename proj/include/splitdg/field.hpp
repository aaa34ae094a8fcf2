#pragma once

#include <functional>
#include <span>
#include <vector>

#include "splitdg/euler.hpp"
#include "splitdg/mesh.hpp"
#include "splitdg/sbp_basis.hpp"

namespace splitdg {

/// Nodal values of the five conserved variables on every element.
///
/// Storage is element-major, then node (i + n (j + n k)), then variable.
/// The same type holds states and their time derivatives.
class Field {
public:
  Field() = default;
  Field(int degree, int num_elements)
      : degree_(degree),
        nodes_per_element_((degree + 1) * (degree + 1) * (degree + 1)),
        num_elements_(num_elements),
        data_(static_cast<std::size_t>(num_elements) * nodes_per_element_ * 5, 0.0) {}

  /// Zero field shaped for the given mesh and basis.
  static Field zeros(const CartesianMesh& mesh, const PolyBasis& basis) {
    return Field(basis.degree(), mesh.num_elements());
  }

  int degree() const noexcept { return degree_; }
  int nodes_1d() const noexcept { return degree_ + 1; }
  int nodes_per_element() const noexcept { return nodes_per_element_; }
  int num_elements() const noexcept { return num_elements_; }
  std::size_t size() const noexcept { return data_.size(); }

  int node_index(int i, int j, int k) const noexcept { return i + nodes_1d() * (j + nodes_1d() * k); }

  double* node(int element, int node) noexcept {
    return data_.data() + (static_cast<std::size_t>(element) * nodes_per_element_ + node) * 5;
  }
  const double* node(int element, int node) const noexcept {
    return data_.data() + (static_cast<std::size_t>(element) * nodes_per_element_ + node) * 5;
  }

  EulerState state(int element, int node) const noexcept {
    const double* p = this->node(element, node);
    return EulerState{{p[0], p[1], p[2], p[3], p[4]}};
  }
  void set_state(int element, int node, const EulerState& s) noexcept {
    double* p = this->node(element, node);
    for (int v = 0; v < 5; ++v) p[v] = s[v];
  }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  bool same_shape(const Field& other) const noexcept {
    return degree_ == other.degree_ && num_elements_ == other.num_elements_;
  }

  /// Throws InvalidStateError (with element, node and `time`) at the first
  /// node with nonpositive or non-finite density or pressure.
  void validate(const GasModel& gas, double time = 0.0) const;

private:
  int degree_ = 0;
  int nodes_per_element_ = 0;
  int num_elements_ = 0;
  std::vector<double> data_;
};

/// Physical coordinates of a node.
struct Point {
  double x, y, z;
};
Point node_coordinates(const CartesianMesh& mesh, const PolyBasis& basis, int element, int i, int j,
                       int k);

using StateFunction = std::function<EulerState(double x, double y, double z)>;

/// Collocation: samples `fn` at every node.
Field interpolate_field(const CartesianMesh& mesh, const PolyBasis& basis, const StateFunction& fn);

}  // namespace splitdg
