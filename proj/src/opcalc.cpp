#include "mellinop/opcalc.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mellinop/errors.hpp"

namespace mellinop {
namespace {

// e^{-t l} - e^{-t} without cancellation or inf * 0
double exp_gap(double t, double l) {
  if (l >= 1.0) return std::exp(-t) * std::expm1(-t * (l - 1.0));
  return -std::exp(-t * l) * std::expm1(-t * (1.0 - l));
}

void require_pd(const HermitianOperator& h, const char* op) {
  if (!h.positive_definite()) {
    std::ostringstream msg;
    msg << op << ": operator is not positive-definite (smallest eigenvalue " << h.min_eigenvalue() << ")";
    throw InputError(msg.str());
  }
}

void require_right_half_plane(Complex alpha, const char* op) {
  if (!(alpha.real() > 0.0)) {
    std::ostringstream msg;
    msg << op << ": requires Re(alpha) > 0, got " << alpha.real();
    throw InputError(msg.str());
  }
}

// tr e^{-tH} as a 1x1 sampler
SemigroupSampler trace_sampler(const HermitianOperator& h) {
  SemigroupSampler s = SemigroupSampler::scalar([ev = h.spectrum().eigenvalues](double t) {
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) acc += std::exp(-t * ev(i));
    return acc;
  });
  s.decay_rate = h.min_eigenvalue();
  s.near_zero = Asymptote::power_law(0.0);
  return s;
}

template <class Fn>
auto richardson_derivative(Fn&& f, double eps) {
  auto central = [&](double e) { return ((f(e) - f(-e)) / (2.0 * e)).eval(); };
  auto coarse = central(eps);
  auto fine = central(0.5 * eps);
  auto extrapolated = ((4.0 * fine - coarse) / 3.0).eval();
  const double gap = (extrapolated - fine).norm();
  return std::make_pair(extrapolated, gap);
}

}  // namespace

CMatrix SpectralDecomposition::apply(const std::function<Complex(double)>& fn) const {
  CVector d(eigenvalues.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = fn(eigenvalues(i));
  return eigenvectors * d.asDiagonal() * eigenvectors.adjoint();
}

CMatrix SpectralDecomposition::reconstruct() const {
  return apply([](double x) { return Complex(x, 0.0); });
}

SpectralDecomposition eig_oracle(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) throw InputError("eig_oracle: matrix must be square and non-empty");
  if (!m.allFinite()) throw InputError("eig_oracle: non-finite entry");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol * scale) throw InputError("eig_oracle: matrix is not Hermitian");
  const CMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  if (es.info() != Eigen::Success) throw NumericalError("eig_oracle: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

HermitianOperator::HermitianOperator(CMatrix m, double tol)
    : m_(std::move(m)), spec_(std::make_shared<const SpectralDecomposition>(eig_oracle(m_, tol))) {}

double HermitianOperator::norm() const {
  return std::max(std::abs(min_eigenvalue()), std::abs(max_eigenvalue()));
}

CMatrix semigroup(const HermitianOperator& h, double t) {
  if (t < 0.0) throw InputError("semigroup: t must be non-negative");
  return h.spectrum().apply([t](double x) { return Complex(std::exp(-t * x), 0.0); });
}

SemigroupSampler heat_sampler(const HermitianOperator& h) {
  SemigroupSampler s;
  s.evaluator = [h](double t) { return semigroup(h, t); };
  if (h.positive_definite()) s.decay_rate = h.min_eigenvalue();
  s.near_zero = Asymptote::power_law(0.0);
  s.identity_at_zero = true;
  return s;
}

OperatorResult functional_power(const HermitianOperator& h, Complex alpha, const QuadratureScheme& q) {
  require_pd(h, "functional_power");
  require_right_half_plane(alpha, "functional_power");
  const SemigroupSampler s = heat_sampler(h);
  MellinParams p;
  p.alpha = alpha;
  p.gamma_normalizer = alpha;
  p.strip = fundamental_strip(s);
  p.quadrature = q;
  MellinResult r = mellin_transform(s, p);
  return {std::move(r.value), r.error_estimate, r.levels, r.evaluations};
}

OperatorResult regularized_power(const HermitianOperator& h, Complex alpha, const QuadratureScheme& q) {
  require_pd(h, "regularized_power");
  // Same sampler as regularize_subtract_identity(heat_sampler(h)), but the
  // subtraction happens per eigenvalue so U U^dagger - I roundoff cannot
  // survive as t -> 0.
  SemigroupSampler s = regularize_subtract_identity(heat_sampler(h));
  s.evaluator = [h](double t) {
    return h.spectrum().apply([t](double l) { return Complex(exp_gap(t, l), 0.0); });
  };
  MellinParams p;
  p.alpha = alpha;
  p.gamma_normalizer = alpha;
  p.strip = fundamental_strip(s);
  p.quadrature = q;
  MellinResult r = mellin_transform(s, p);
  r.value += CMatrix::Identity(h.dim(), h.dim());
  return {std::move(r.value), r.error_estimate, r.levels, r.evaluations};
}

OperatorResult resolvent_power(const HermitianOperator& h, Complex z, Complex alpha, const ResolventOptions& opts) {
  require_right_half_plane(alpha, "resolvent_power");
  const Eigen::VectorXd& ev = h.spectrum().eigenvalues;
  const double guard = opts.guard >= 0.0 ? opts.guard : 1e-8 * std::max(h.norm(), 1.0);
  double dist = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < ev.size(); ++i) dist = std::min(dist, std::abs(ev(i) - z));
  if (dist < guard) {
    std::ostringstream msg;
    msg << "resolvent_power: z lies within " << dist << " of the spectrum (guard " << guard << ")";
    throw InputError(msg.str());
  }

  // Ray direction: rotate the arc of arg(lambda_i - z) onto the positive real axis.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double a = std::arg(Complex(ev(i)) - z);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  if (z.imag() == 0.0 && hi - lo > 0.5 * std::numbers::pi) {
    throw InputError(
        "resolvent_power: real z inside the spectral range; no single decay direction for e^{-t(H - zI)}");
  }
  const Complex omega = std::polar(1.0, -0.5 * (lo + hi));
  double decay = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    decay = std::min(decay, (omega * (Complex(ev(i)) - z)).real());
  if (!(decay > 0.0)) throw NumericalError("resolvent_power: no decaying ray for e^{-t(H - zI)}");

  SemigroupSampler s;
  s.evaluator = [eig = h.spectrum(), omega, z](double t) {
    return eig.apply([&](double x) { return std::exp(-t * omega * (Complex(x) - z)); });
  };
  s.decay_rate = decay;
  s.near_zero = Asymptote::power_law(0.0);

  MellinParams p;
  p.alpha = alpha;
  p.gamma_normalizer = alpha;
  p.strip = fundamental_strip(s);
  p.quadrature = opts.quadrature;
  MellinResult r = mellin_transform(s, p);
  // (zI - H) = (omega (H - zI)) * (-1/omega)
  const Complex branch = std::exp(-alpha * std::log(-1.0 / omega));
  r.value *= branch;
  return {std::move(r.value), r.error_estimate * std::abs(branch), r.levels, r.evaluations};
}

ScalarResult functional_trace(const HermitianOperator& h, Complex alpha, const QuadratureScheme& q) {
  require_pd(h, "functional_trace");
  require_right_half_plane(alpha, "functional_trace");
  const SemigroupSampler s = trace_sampler(h);
  MellinParams p;
  p.alpha = alpha;
  p.gamma_normalizer = alpha;
  p.strip = fundamental_strip(s);
  p.quadrature = q;
  const MellinResult r = mellin_transform(s, p);
  return {r.value(0, 0), r.error_estimate, r.levels, r.evaluations};
}

ScalarResult spectral_zeta(const HermitianOperator& h, Complex s_arg, const QuadratureScheme& q) {
  require_pd(h, "spectral_zeta");
  const auto n = static_cast<double>(h.dim());
  // tr e^{-tH} - N e^{-t}: the trace of the identity-subtracted semigroup
  SemigroupSampler s = SemigroupSampler::scalar([ev = h.spectrum().eigenvalues](double t) {
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) acc += exp_gap(t, ev(i));
    return acc;
  });
  s.decay_rate = std::min(h.min_eigenvalue(), 1.0);
  s.near_zero = Asymptote::power_law(1.0);
  MellinParams p;
  p.alpha = s_arg;
  p.gamma_normalizer = s_arg;
  p.strip = fundamental_strip(s);
  p.quadrature = q;
  const MellinResult r = mellin_transform(s, p);
  return {r.value(0, 0) + n, r.error_estimate, r.levels, r.evaluations};
}

ScalarResult functional_determinant_mellin(const HermitianOperator& h, Complex alpha, const QuadratureScheme& q) {
  require_right_half_plane(alpha, "functional_determinant_mellin");
  const double tr = h.spectrum().eigenvalues.sum();
  if (!(tr > 0.0)) throw InputError("functional_determinant_mellin: requires tr H > 0");
  const auto n = static_cast<double>(h.dim());
  // det(e^{-tH}) as the product of the semigroup eigenvalues e^{-t lambda_i},
  // accumulated in log space so indefinite H cannot overflow a factor
  SemigroupSampler s = SemigroupSampler::scalar([ev = h.spectrum().eigenvalues](double t) {
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) log_det -= t * ev(i);
    return Complex(std::exp(log_det), 0.0);
  });
  s.decay_rate = tr;
  s.near_zero = Asymptote::power_law(0.0);
  MellinParams p;
  p.alpha = alpha * n;
  p.gamma_normalizer = alpha * n;
  p.strip = fundamental_strip(s);
  p.quadrature = q;
  const MellinResult r = mellin_transform(s, p);
  return {r.value(0, 0), r.error_estimate, r.levels, r.evaluations};
}

ZetaDeterminant zeta_determinant(const HermitianOperator& h, const DifferenceOptions& opts) {
  require_pd(h, "zeta_determinant");
  if (!(opts.eps > 0.0 && opts.eps < 0.5)) throw InputError("zeta_determinant: eps must lie in (0, 0.5)");
  auto zeta = [&](double s) {
    Eigen::Matrix<Complex, 1, 1> v;
    v(0, 0) = spectral_zeta(h, s, opts.quadrature).value;
    return v;
  };
  const auto [d, gap] = richardson_derivative(zeta, opts.eps);
  ZetaDeterminant out;
  out.zeta_prime_zero = d(0, 0).real();
  out.step_gap = gap;
  if (gap > opts.stability_tol * std::max(1.0, std::abs(out.zeta_prime_zero))) {
    std::ostringstream msg;
    msg << "zeta_determinant: difference step unstable (eps = " << opts.eps << ", Richardson gap " << gap << ")";
    throw NumericalError(msg.str());
  }
  out.value = std::exp(-out.zeta_prime_zero);
  return out;
}

OperatorResult functional_log(const HermitianOperator& h, const DifferenceOptions& opts) {
  require_pd(h, "functional_log");
  if (!(opts.eps > 0.0 && opts.eps < 0.5)) throw InputError("functional_log: eps must lie in (0, 0.5)");
  double err = 0.0;
  int levels = 0;
  std::size_t evals = 0;
  auto power = [&](double a) {
    OperatorResult r = regularized_power(h, a, opts.quadrature);
    err = std::max(err, r.error_estimate);
    levels = std::max(levels, r.levels);
    evals += r.evaluations;
    return r.value;
  };
  auto [d, gap] = richardson_derivative(power, opts.eps);
  const double scale = std::max(1.0, d.norm());
  if (gap > opts.stability_tol * scale) {
    std::ostringstream msg;
    msg << "functional_log: difference step unstable (eps = " << opts.eps << ", Richardson gap " << gap << ")";
    throw NumericalError(msg.str());
  }
  return {std::move(d), gap + err / opts.eps, levels, evals};
}

CMatrix enveloping_exponential(const HermitianOperator& h, double t) {
  return h.spectrum().apply([t](double x) { return std::exp(Complex(0.0, -t * x)); });
}

}  // namespace mellinop
