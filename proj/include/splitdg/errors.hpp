#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitdg {

/// Bad user input: out-of-range degree, degenerate interval, unknown scheme name, ...
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A nodal state with nonpositive (or non-finite) density or pressure.
///
/// This is the crash signal for robustness runs. The location fields are
/// filled in when the state belongs to a field; element/node are -1 otherwise.
class InvalidStateError : public std::runtime_error {
public:
  InvalidStateError(double rho, double p, long element = -1, long node = -1,
                    double time = 0.0);

  double rho() const noexcept { return rho_; }
  double pressure() const noexcept { return p_; }
  long element() const noexcept { return element_; }
  long node() const noexcept { return node_; }
  double time() const noexcept { return time_; }

private:
  double rho_;
  double p_;
  long element_;
  long node_;
  double time_;
};

/// Operation requested for a scheme that does not support it.
class UnsupportedSchemeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace splitdg
