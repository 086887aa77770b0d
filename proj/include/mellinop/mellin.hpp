#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mellinop/types.hpp"

namespace mellinop {

/// Open interval of Re(alpha); infinite bounds mean unbounded.
struct Strip {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double re_alpha) const { return lower < re_alpha && re_alpha < upper; }
  bool unbounded() const {
    return lower == -std::numeric_limits<double>::infinity() &&
           upper == std::numeric_limits<double>::infinity();
  }
};

struct QuadratureScheme {
  /// TanhSinhLogAxis is the general scheme. GaussLaguerreSplit suits samplers
  /// with a known decay rate and |Im alpha| up to a few times Re(alpha); past
  /// that the t < 1 part oscillates and it reports non-convergence.
  enum class Kind { TanhSinhLogAxis, GaussLaguerreSplit };

  Kind kind = Kind::TanhSinhLogAxis;
  int levels = 12;
  /// Truncation threshold relative to the integrand peak, and absolute error floor.
  double abs_tol = 1e-16;
  double rel_tol = 1e-13;
  double t_min = 1e-100;
  double t_max = 1e100;

  void validate() const;
};

struct MellinParams {
  Complex alpha{1.0, 0.0};
  /// When set, the measure is (dt/t) / Gamma(*gamma_normalizer).
  std::optional<Complex> gamma_normalizer;
  Strip strip;
  QuadratureScheme quadrature;
  /// Integrate over exactly [t_min, t_max] without the decay scan or the
  /// strip check. Used for cutoff-regularized integrals whose cutoff
  /// dependence cancels in differences.
  bool hard_cutoff = false;
};

/// Leading behavior of a sampler at one end of (0, inf): either F ~ t^power
/// or decay faster than any power.
struct Asymptote {
  bool exponential = false;
  double power = 0.0;

  static Asymptote exp_decay() { return {true, 0.0}; }
  static Asymptote power_law(double p) { return {false, p}; }
};

/// t -> F(t) on the multiplicative half-line. Scalars are 1x1 matrices.
struct SemigroupSampler {
  std::function<CMatrix(double)> evaluator;
  /// Exponential decay constant as t -> inf (smallest eigenvalue for e^{-tH}).
  std::optional<double> decay_rate;
  std::optional<Asymptote> near_zero;
  std::optional<Asymptote> near_infinity;
  /// Semigroup samplers tend to the identity at t -> 0+.
  bool identity_at_zero = false;

  CMatrix operator()(double t) const { return evaluator(t); }

  static SemigroupSampler scalar(std::function<Complex(double)> f);
};

struct MellinResult {
  CMatrix value;
  double error_estimate = 0.0;
  int levels = 0;
  std::size_t evaluations = 0;
  std::vector<double> level_errors;
  /// Multiplicative-axis window actually integrated.
  double t_lo = 0.0;
  double t_hi = 0.0;
};

/// Integral of F(t) t^alpha dt/t over (0, inf), divided by Gamma(normalizer)
/// when one is set. Throws InputError when Re(alpha) is outside p.strip and
/// NumericalError when the quadrature cannot reach its tolerance.
MellinResult mellin_transform(const SemigroupSampler& s, const MellinParams& p);

/// Convergence strip from the sampler's end behavior. power_at_infinity,
/// when given, overrides what the sampler records for t -> inf.
Strip fundamental_strip(const SemigroupSampler& s, std::optional<double> power_at_infinity = {});

/// t -> F(t) - e^{-t} I. Moves the lower strip edge left by one for
/// semigroups with F(0+) = I; for those the difference near t = 0 comes from
/// a cubic fit away from the cancellation.
SemigroupSampler regularize_subtract_identity(const SemigroupSampler& s);

/// A closed functional form in alpha that is linear in its free constants:
/// value(alpha) = sum_j c_j basis_j(alpha).
struct ContinuationModel {
  std::string name;
  std::vector<std::function<Complex(Complex)>> basis;
};

/// C * Gamma(u - alpha) * a^(alpha - u), one free constant C.
ContinuationModel gamma_power_model(double u, double a);

struct ContinuationResult {
  Complex value;
  std::vector<Complex> coefficients;
  double condition = 1.0;
  double residual = 0.0;
};

/// Least-squares fit of the model's constants to in-strip samples
/// (alpha, value), then evaluation at target_alpha.
ContinuationResult continue_in_alpha(std::span<const std::pair<Complex, Complex>> samples,
                                     Complex target_alpha, const ContinuationModel& model,
                                     double max_condition = 1e12);

}  // namespace mellinop
