#include "mellinop/greens.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "mellinop/errors.hpp"

namespace mellinop {
namespace {

constexpr double kPi = std::numbers::pi;

void require_dimension(int n) {
  if (n < 1) throw InputError("kernel: spatial dimension must be at least 1");
}

Complex kernel_at(int n, double r, Complex alpha, const QuadratureScheme& scheme) {
  const SemigroupSampler s = kernel_sampler(n, r);
  MellinParams p;
  p.alpha = alpha;
  p.strip = fundamental_strip(s);
  p.quadrature = scheme;
  return mellin_transform(s, p).value(0, 0);
}

KernelResult plane_difference(double r1, double r2, const QuadratureScheme& scheme) {
  // regularized kernel under cutoffs [1/T, T]; the T-dependence is common to both radii
  auto cutoff_kernel = [&](double r, double big_t) {
    MellinParams p;
    p.alpha = 1.0;
    p.quadrature = scheme;
    p.quadrature.t_min = 1.0 / big_t;
    p.quadrature.t_max = big_t;
    p.hard_cutoff = true;
    return mellin_transform(regularize_subtract_identity(kernel_sampler(2, r)), p);
  };
  constexpr std::array<double, 5> ladder = {1e4, 1e8, 1e12, 1e16, 1e20};
  double prev = std::numeric_limits<double>::quiet_NaN();
  double quad_err = 0.0;
  for (double big_t : ladder) {
    const MellinResult k1 = cutoff_kernel(r1, big_t);
    const MellinResult k2 = cutoff_kernel(r2, big_t);
    const double diff = (k1.value(0, 0) - k2.value(0, 0)).real();
    quad_err = k1.error_estimate + k2.error_estimate;
    const double change = std::abs(diff - prev);
    if (change <= std::max(1e-10, 1e-10 * std::abs(diff)) + quad_err) {
      std::ostringstream method;
      method << "identity-subtraction, symmetric cutoff T=" << big_t;
      return {diff, change + quad_err, method.str()};
    }
    prev = diff;
  }
  throw NumericalError("regularized_kernel_difference: cutoff ladder did not settle for n = 2");
}

KernelResult line_difference(double r1, double r2, const QuadratureScheme& scheme) {
  constexpr std::array<double, 3> sample_alphas = {0.1, 0.2, 0.3};
  auto continued = [&](double r, double& err) {
    std::vector<std::pair<Complex, Complex>> samples;
    for (double a : sample_alphas) samples.emplace_back(a, kernel_at(1, r, a, scheme));
    const ContinuationResult c = continue_in_alpha(samples, 1.0, gamma_power_model(0.5, kPi * r * r));
    err += c.residual * std::abs(c.value);
    return c.value.real();
  };
  double err = 0.0;
  const double value = continued(r1, err) - continued(r2, err);
  return {value, err, "analytic continuation in alpha from {0.1, 0.2, 0.3}"};
}

}  // namespace

double KernelQuery::r() const {
  if (x_a.size() != n || x_b.size() != n) throw InputError("kernel query: points must have n coordinates");
  return (x_b - x_a).norm();
}

KernelQuery KernelQuery::radial(int n, double r, Complex alpha) {
  require_dimension(n);
  KernelQuery q;
  q.n = n;
  q.x_a = Eigen::VectorXd::Zero(n);
  q.x_b = Eigen::VectorXd::Zero(n);
  q.x_b(0) = r;
  q.alpha = alpha;
  return q;
}

Complex equivariant_propagator(const KernelQuery& q, double t) {
  require_dimension(q.n);
  if (!(t > 0.0)) throw InputError("equivariant_propagator: t must be positive");
  const double r = q.r();
  return std::pow(Complex(t), q.alpha - 0.5 * q.n) * std::exp(-kPi * r * r / t);
}

SemigroupSampler kernel_sampler(int n, double r) {
  require_dimension(n);
  const double a = kPi * r * r;
  const double half_n = 0.5 * n;
  SemigroupSampler s = SemigroupSampler::scalar(
      [a, half_n](double t) { return Complex(std::exp(-a / t - half_n * std::log(t)), 0.0); });
  s.near_zero = a > 0.0 ? Asymptote::exp_decay() : Asymptote::power_law(-half_n);
  s.near_infinity = Asymptote::power_law(-half_n);
  return s;
}

KernelResult elementary_kernel(const KernelQuery& q, const QuadratureScheme& scheme) {
  require_dimension(q.n);
  const double r = q.r();
  if (!(r > 0.0)) throw InputError("elementary_kernel: coincident points");
  const Strip strip = fundamental_strip(kernel_sampler(q.n, r));
  if (!strip.contains(q.alpha.real())) {
    std::ostringstream msg;
    msg << "elementary_kernel: Re(alpha) = " << q.alpha.real() << " is outside the strip (-inf, " << strip.upper
        << ") for n = " << q.n;
    if (q.n <= 2) msg << "; use regularized_kernel_difference";
    throw InputError(msg.str());
  }
  const SemigroupSampler s = kernel_sampler(q.n, r);
  MellinParams p;
  p.alpha = q.alpha;
  p.strip = strip;
  p.quadrature = scheme;
  const MellinResult m = mellin_transform(s, p);
  return {m.value(0, 0), m.error_estimate, "mellin quadrature"};
}

KernelResult regularized_kernel_difference(int n, double r1, double r2, const QuadratureScheme& scheme) {
  if (n != 1 && n != 2) throw InputError("regularized_kernel_difference: n must be 1 or 2");
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw InputError("regularized_kernel_difference: radii must be positive");
  if (r1 == r2) return {0.0, 0.0, "equal radii"};
  return n == 2 ? plane_difference(r1, r2, scheme) : line_difference(r1, r2, scheme);
}

double radial_laplacian_residual(int n, std::span<const double> r_grid, std::span<const double> values) {
  if (r_grid.size() != values.size()) throw InputError("radial_laplacian_residual: grid and values differ in length");
  if (r_grid.size() < 3) throw InputError("radial_laplacian_residual: need at least 3 grid points");
  const double h = r_grid[1] - r_grid[0];
  if (!(h > 0.0)) throw InputError("radial_laplacian_residual: grid must be increasing");
  for (std::size_t i = 1; i < r_grid.size(); ++i) {
    if (std::abs((r_grid[i] - r_grid[i - 1]) - h) > 1e-9 * h)
      throw InputError("radial_laplacian_residual: grid must be uniform");
  }
  if (!(r_grid[0] > 0.0)) throw InputError("radial_laplacian_residual: grid must stay away from r = 0");
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < r_grid.size(); ++i) {
    const double second = (values[i + 1] - 2.0 * values[i] + values[i - 1]) / (h * h);
    const double first = (values[i + 1] - values[i - 1]) / (2.0 * h);
    const double lap = second + (n - 1) / r_grid[i] * first;
    worst = std::max(worst, std::abs(lap / (4.0 * kPi)));
  }
  return worst;
}

double kernel_harmonicity_check(int n, std::span<const double> r_grid, const QuadratureScheme& scheme) {
  if (n < 3) throw InputError("kernel_harmonicity_check: requires n >= 3");
  std::vector<double> values;
  values.reserve(r_grid.size());
  for (double r : r_grid) values.push_back(elementary_kernel(KernelQuery::radial(n, r), scheme).value.real());
  return radial_laplacian_residual(n, r_grid, values);
}

}  // namespace mellinop
