#pragma once

#include <span>
#include <string>

#include "mellinop/mellin.hpp"
#include "mellinop/types.hpp"

namespace mellinop {

/// Two points in R^n and the Mellin exponent. The kernel depends on the
/// points only through r = |x_b - x_a|.
struct KernelQuery {
  int n = 3;
  Eigen::VectorXd x_a;
  Eigen::VectorXd x_b;
  Complex alpha{1.0, 0.0};

  double r() const;
  /// x_a at the origin, x_b at distance r along the first axis.
  static KernelQuery radial(int n, double r, Complex alpha = {1.0, 0.0});
};

struct KernelResult {
  Complex value;
  double error_estimate = 0.0;
  std::string method;
};

/// theta(t) t^{alpha - n/2} e^{-pi r^2 / t}, the time-forward propagator.
Complex equivariant_propagator(const KernelQuery& q, double t);

/// t -> e^{-pi r^2/t} t^{-n/2}; the Mellin weight t^alpha supplies the rest.
SemigroupSampler kernel_sampler(int n, double r);

/// Mellin transform of the propagator against dt/t:
/// Gamma(n/2 - alpha) (pi r^2)^{alpha - n/2}, which at alpha = 1 is the
/// Laplacian kernel pi^{1-n/2} Gamma(n/2 - 1) r^{2-n}. Requires Re(alpha) < n/2.
KernelResult elementary_kernel(const KernelQuery& q, const QuadratureScheme& scheme = {});

/// K(r1) - K(r2) at alpha = 1 for n = 1 or 2, where the kernel integral
/// itself diverges. n = 2: identity-subtracted sampler under symmetric
/// cutoffs [1/T, T] with T increased until the difference settles.
/// n = 1: in-strip samples continued to alpha = 1 with the model
/// C Gamma(1/2 - alpha) (pi r^2)^{alpha - 1/2}.
KernelResult regularized_kernel_difference(int n, double r1, double r2, const QuadratureScheme& scheme = {});

/// max over interior grid points of |(1/4pi)(K'' + (n-1)/r K')| by second-order
/// central differences. The grid must be uniform with at least 3 points.
double radial_laplacian_residual(int n, std::span<const double> r_grid, std::span<const double> values);

/// radial_laplacian_residual applied to elementary_kernel values (alpha = 1, n >= 3).
double kernel_harmonicity_check(int n, std::span<const double> r_grid, const QuadratureScheme& scheme = {});

}  // namespace mellinop
