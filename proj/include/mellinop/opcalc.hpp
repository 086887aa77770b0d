#pragma once

#include <functional>
#include <memory>

#include "mellinop/mellin.hpp"
#include "mellinop/types.hpp"

namespace mellinop {

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix eigenvectors;         // unitary, columns

  /// U diag(fn(lambda_i)) U^dagger.
  CMatrix apply(const std::function<Complex(double)>& fn) const;
  CMatrix reconstruct() const;
};

/// Full eigensystem of a Hermitian matrix. Throws InputError if m is not
/// Hermitian within tol (relative to its largest entry).
SpectralDecomposition eig_oracle(const CMatrix& m, double tol = 1e-12);

/// Dense Hermitian matrix with its eigensystem computed once and shared
/// between copies.
class HermitianOperator {
 public:
  explicit HermitianOperator(CMatrix m, double tol = 1e-12);

  Eigen::Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  const SpectralDecomposition& spectrum() const { return *spec_; }
  double min_eigenvalue() const { return spec_->eigenvalues(0); }
  double max_eigenvalue() const { return spec_->eigenvalues(spec_->eigenvalues.size() - 1); }
  bool positive_definite() const { return min_eigenvalue() > 0.0; }
  /// Operator norm, max |lambda_i|.
  double norm() const;

 private:
  CMatrix m_;
  std::shared_ptr<const SpectralDecomposition> spec_;
};

struct OperatorResult {
  CMatrix value;
  double error_estimate = 0.0;
  int levels = 0;
  std::size_t evaluations = 0;
};

struct ScalarResult {
  Complex value;
  double error_estimate = 0.0;
  int levels = 0;
  std::size_t evaluations = 0;
};

/// e^{-tH}, t >= 0.
CMatrix semigroup(const HermitianOperator& h, double t);

/// t -> e^{-tH} as a Mellin sampler.
SemigroupSampler heat_sampler(const HermitianOperator& h);

/// H^{-alpha} as the Mellin transform of e^{-tH} against (dt/t)/Gamma(alpha).
/// Requires H positive-definite and Re(alpha) > 0.
OperatorResult functional_power(const HermitianOperator& h, Complex alpha, const QuadratureScheme& q = {});

/// H^{-alpha} for Re(alpha) > -1 via the identity-subtracted sampler:
/// M[e^{-tH} - e^{-t} I](alpha) / Gamma(alpha) + I.
OperatorResult regularized_power(const HermitianOperator& h, Complex alpha, const QuadratureScheme& q = {});

struct ResolventOptions {
  /// Minimum distance from z to the spectrum; negative means 1e-8 * ||H||.
  double guard = -1.0;
  QuadratureScheme quadrature;
};

/// (zI - H)^{-alpha}; alpha = 1 gives the resolvent. The semigroup of H - zI
/// is integrated along the ray t = omega * tau on which every mode decays.
/// Throws InputError when z is within the guard distance of the spectrum
/// or when no such ray exists (real z strictly inside the spectral range).
OperatorResult resolvent_power(const HermitianOperator& h, Complex z, Complex alpha,
                               const ResolventOptions& opts = {});

/// Tr H^{-alpha} = zeta_H(alpha), Mellin transform of tr e^{-tH}.
ScalarResult functional_trace(const HermitianOperator& h, Complex alpha, const QuadratureScheme& q = {});

/// zeta_H(s) for Re(s) > -1, continued by identity subtraction.
ScalarResult spectral_zeta(const HermitianOperator& h, Complex s, const QuadratureScheme& q = {});

/// Mellin transform of det(e^{-tH}) = e^{-t tr H} against t^{alpha N} (dt/t)/Gamma(alpha N);
/// equals (tr H)^{-alpha N}. Requires tr H > 0.
ScalarResult functional_determinant_mellin(const HermitianOperator& h, Complex alpha,
                                           const QuadratureScheme& q = {});

/// Derivative settings for zeta_determinant and functional_log: central
/// differences at +-eps and +-eps/2 combined by one Richardson step.
struct DifferenceOptions {
  double eps = 1e-4;
  /// Maximum allowed gap between the Richardson value and the finer central difference.
  double stability_tol = 1e-5;
  QuadratureScheme quadrature;
};

struct ZetaDeterminant {
  double value = 0.0;           // exp(-zeta'(0))
  double zeta_prime_zero = 0.0;
  double step_gap = 0.0;        // |Richardson - central(eps/2)|
};

ZetaDeterminant zeta_determinant(const HermitianOperator& h, const DifferenceOptions& opts = {});

/// -log H as d/dalpha H^{-alpha} at alpha = 0.
OperatorResult functional_log(const HermitianOperator& h, const DifferenceOptions& opts = {});

/// e^{-i t h}.
CMatrix enveloping_exponential(const HermitianOperator& h, double t);

}  // namespace mellinop
