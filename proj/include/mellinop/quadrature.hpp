#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mellinop/types.hpp"

namespace mellinop {

struct TanhSinhOptions {
  int min_level = 3;
  int max_level = 12;  // step 2^-level in the sinh parameter
  double abs_tol = 1e-16;
  double rel_tol = 1e-13;
};

struct QuadratureResult {
  CMatrix value;
  double error_estimate = 0.0;
  int levels = 0;
  std::size_t evaluations = 0;
  bool converged = false;
  /// Error estimate after each level, starting at level 1.
  std::vector<double> level_errors;
};

/// Tanh-sinh (double exponential) quadrature of a matrix-valued integrand
/// on the finite interval [a, b]. Each level halves the step and reuses all
/// previous nodes; the error estimate is the change between levels plus a
/// roundoff floor.
QuadratureResult tanh_sinh(const std::function<CMatrix(double)>& f, double a, double b,
                           const TanhSinhOptions& opts = {});

/// Composite rule over consecutive panels [breaks[i], breaks[i+1]], all
/// refined together so the level errors describe the whole integral.
QuadratureResult tanh_sinh_panels(const std::function<CMatrix(double)>& f, const std::vector<double>& breaks,
                                  const TanhSinhOptions& opts = {});

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  /// ln(weights), accurate where the weights themselves underflow.
  std::vector<double> log_weights;
};

/// n-point Gauss-Laguerre rule for weight e^{-x} on [0, inf). Nodes from
/// Golub-Welsch, polished by Newton; weights x / (n L_{n-1}(x))^2 in log form.
GaussRule gauss_laguerre(int n);

}  // namespace mellinop
