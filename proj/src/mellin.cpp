#include "mellinop/mellin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "mellinop/errors.hpp"
#include "mellinop/quadrature.hpp"
#include "mellinop/special.hpp"

namespace mellinop {
namespace {

constexpr double kScanStep = 0.5;
constexpr int kScanMargin = 2;
constexpr double kPanelWidth = 4.0;

// F(e^s) e^{alpha s}; a zero sampler value stays zero even where e^{alpha s} overflows.
CMatrix log_axis_integrand(const SemigroupSampler& s, Complex alpha, double log_t) {
  CMatrix v = s(std::exp(log_t));
  if (v.isZero(0.0)) return v;
  return v * std::exp(alpha * log_t);
}

MellinResult tanh_sinh_log_axis(const SemigroupSampler& s, const MellinParams& p) {
  const QuadratureScheme& q = p.quadrature;
  const double s_min = std::log(q.t_min);
  const double s_max = std::log(q.t_max);
  const int n_scan = static_cast<int>(std::ceil((s_max - s_min) / kScanStep)) + 1;

  std::vector<double> mag(n_scan);
  double peak = 0.0;
  for (int k = 0; k < n_scan; ++k) {
    const double x = std::min(s_min + k * kScanStep, s_max);
    const CMatrix v = log_axis_integrand(s, p.alpha, x);
    if (!v.allFinite()) {
      std::ostringstream msg;
      msg << "mellin_transform: non-finite integrand at t = e^" << x;
      throw NumericalError(msg.str());
    }
    mag[k] = v.norm();
    peak = std::max(peak, mag[k]);
  }

  MellinResult res;
  if (peak == 0.0) {
    const CMatrix probe = s(1.0);
    res.value = CMatrix::Zero(probe.rows(), probe.cols());
    res.t_lo = res.t_hi = 1.0;
    return res;
  }

  const double thresh = q.abs_tol * peak;
  // A power-law end that has not decayed inside the window is closed in closed
  // form: int_0^a c t^{p+alpha} dt/t = F(a) a^alpha / (p + alpha), and likewise above.
  // The error is the tail times the drift of F(t) t^{-p} across one scan step.
  auto power_tail = [&](const std::optional<Asymptote>& asym, double edge, double inward, double sign,
                        CMatrix& value, double& err) {
    if (!asym || asym->exponential) return false;
    const Complex denom = p.alpha + asym->power;
    if (sign * denom.real() <= 0.0) return false;
    const CMatrix f0 = s(std::exp(edge)) * std::exp(-asym->power * edge);
    const CMatrix f1 = s(std::exp(inward)) * std::exp(-asym->power * inward);
    value = f0 * (std::exp(denom * edge) / denom) * sign;
    const double scale = f0.norm();
    err = scale > 0.0 ? value.norm() * (f0 - f1).norm() / scale : 0.0;
    return value.allFinite();
  };
  CMatrix tail_value;
  double tail_error = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;
  if (mag.front() > thresh) {
    CMatrix v;
    double e = 0.0;
    lo_closed = power_tail(s.near_zero, s_min, s_min + kScanStep, 1.0, v, e);
    if (lo_closed) {
      tail_value = v;
      tail_error += e;
    }
  }
  if (mag.back() > thresh) {
    CMatrix v;
    double e = 0.0;
    hi_closed = power_tail(s.near_infinity, s_max, s_max - kScanStep, -1.0, v, e);
    if (hi_closed) {
      tail_value = tail_value.size() ? CMatrix(tail_value + v) : v;
      tail_error += e;
    }
  }
  if ((mag.front() > thresh && !lo_closed) || (mag.back() > thresh && !hi_closed)) {
    std::ostringstream msg;
    msg << "mellin_transform: integrand has not decayed to " << q.abs_tol
        << " of its peak inside [t_min, t_max]; alpha is at or near the edge of the fundamental strip"
        << " (regularize or continue in alpha)";
    throw NumericalError(msg.str());
  }
  int lo = 0;
  while (mag[lo] <= thresh) ++lo;
  int hi = n_scan - 1;
  while (mag[hi] <= thresh) --hi;
  lo = std::max(0, lo - kScanMargin);
  hi = std::min(n_scan - 1, hi + kScanMargin);

  double tail = 0.0;
  for (int k = 0; k < lo; ++k) tail += kScanStep * mag[k];
  for (int k = hi + 1; k < n_scan; ++k) tail += kScanStep * mag[k];

  // rounding of alpha * ln t and of t = e^s is amplified by |alpha s| and by
  // |d ln F / d ln t| ~ k t; the quadrature cannot see either
  double conditioning = 0.0;
  const double rate = s.decay_rate.value_or(0.0);
  for (int k = 0; k < n_scan; ++k) {
    const double x = std::min(s_min + k * kScanStep, s_max);
    conditioning += kScanStep * mag[k] * (2.0 + std::abs(p.alpha) * std::abs(x) + rate * std::exp(x));
  }
  conditioning *= std::numeric_limits<double>::epsilon();

  const double a = s_min + lo * kScanStep;
  const double b = std::min(s_min + hi * kScanStep, s_max);

  TanhSinhOptions opts;
  opts.max_level = q.levels;
  opts.abs_tol = q.abs_tol;
  opts.rel_tol = q.rel_tol;
  // panels of fixed log-width keep O(1) features resolved from the first level,
  // however wide the window
  const int n_panels = std::max(1, static_cast<int>(std::ceil((b - a) / kPanelWidth)));
  std::vector<double> breaks(n_panels + 1);
  for (int i = 0; i <= n_panels; ++i) breaks[i] = a + (b - a) * i / n_panels;
  QuadratureResult qr = tanh_sinh_panels(
      [&](double x) { return log_axis_integrand(s, p.alpha, x); }, breaks, opts);
  if (!qr.converged) {
    std::ostringstream msg;
    msg << "mellin_transform: no convergence after " << qr.levels << " levels (error estimate "
        << qr.error_estimate << ")";
    throw NumericalError(msg.str());
  }
  res.value = std::move(qr.value);
  if (tail_value.size()) res.value += tail_value;
  res.error_estimate = qr.error_estimate + tail + tail_error + conditioning;
  res.levels = qr.levels;
  res.evaluations = qr.evaluations + static_cast<std::size_t>(n_scan) + (lo_closed ? 2 : 0) + (hi_closed ? 2 : 0);
  res.level_errors = std::move(qr.level_errors);
  res.t_lo = std::exp(a);
  res.t_hi = std::exp(b);
  return res;
}

MellinResult cutoff_log_axis(const SemigroupSampler& s, const MellinParams& p) {
  const QuadratureScheme& q = p.quadrature;
  TanhSinhOptions opts;
  opts.max_level = q.levels;
  opts.abs_tol = q.abs_tol;
  opts.rel_tol = q.rel_tol;
  const double a = std::log(q.t_min);
  const double b = std::log(q.t_max);
  QuadratureResult qr = tanh_sinh([&](double x) { return log_axis_integrand(s, p.alpha, x); }, a, b, opts);
  if (!qr.converged) {
    std::ostringstream msg;
    msg << "mellin_transform: cutoff integral did not converge (error estimate " << qr.error_estimate << ")";
    throw NumericalError(msg.str());
  }
  MellinResult res;
  res.value = std::move(qr.value);
  res.error_estimate = qr.error_estimate;
  res.levels = qr.levels;
  res.evaluations = qr.evaluations;
  res.level_errors = std::move(qr.level_errors);
  res.t_lo = q.t_min;
  res.t_hi = q.t_max;
  if (p.gamma_normalizer) {
    const Complex r = rgamma(*p.gamma_normalizer);
    res.value *= r;
    res.error_estimate *= std::abs(r);
  }
  return res;
}

// Splits at t = c0/k, k the sampler's decay rate (1 when unknown). Above:
// t = (c0 + x)/k with Laguerre weight e^{-x}; below: t = c0 e^{-x/c}/k, c = Re(alpha),
// so the weight carries the whole t^{Re alpha} decay (c = 1 when Re(alpha) <= 0
// and F itself decays). log_w folds the rule weight into the exponent so
// neither factor overflows alone.
MellinResult gauss_laguerre_split(const SemigroupSampler& s, const MellinParams& p) {
  const double k = s.decay_rate.value_or(1.0);
  const Complex alpha = p.alpha;
  constexpr double c0 = 2.0;
  const Complex scale = std::exp(-alpha * std::log(k / c0));
  auto upper = [&](double x, double log_w) -> CMatrix {
    CMatrix v = s((c0 + x) / k);
    if (v.isZero(0.0)) return v;
    return v * (std::exp(log_w + x + (alpha - 1.0) * std::log1p(x / c0)) * scale / c0);
  };
  const double c = alpha.real() > 0.0 ? alpha.real() : 1.0;
  auto lower = [&](double x, double log_w) -> CMatrix {
    CMatrix v = s(std::exp(-x / c) * c0 / k);
    if (v.isZero(0.0)) return v;
    return v * (std::exp(log_w + x - alpha * (x / c)) * scale / c);
  };
  auto apply = [&](int n) {
    const GaussRule rule = gauss_laguerre(n);
    CMatrix acc;
    for (int i = 0; i < n; ++i) {
      CMatrix term = upper(rule.nodes[i], rule.log_weights[i]) + lower(rule.nodes[i], rule.log_weights[i]);
      if (!term.allFinite()) {
        std::ostringstream msg;
        msg << "mellin_transform: non-finite Gauss-Laguerre term at node " << rule.nodes[i];
        throw NumericalError(msg.str());
      }
      if (acc.size() == 0) acc = CMatrix::Zero(term.rows(), term.cols());
      acc += term;
    }
    return acc;
  };

  const int max_level = std::min(p.quadrature.levels, 6);
  MellinResult res;
  CMatrix prev = apply(16);
  res.evaluations = 32;
  for (int level = 1; level <= max_level; ++level) {
    const int n = 16 << level;
    CMatrix cur = apply(n);
    res.evaluations += 2 * static_cast<std::size_t>(n);
    const double err = (cur - prev).norm();
    res.level_errors.push_back(err);
    res.levels = level;
    res.error_estimate = err;
    res.value = cur;
    // the weights carry ~n eps relative error, so tighter targets are unreachable
    const double rel = std::max(p.quadrature.rel_tol, 4.0 * n * std::numeric_limits<double>::epsilon());
    if (err <= std::max(p.quadrature.abs_tol, rel * cur.norm())) return res;
    prev = std::move(cur);
  }
  std::ostringstream msg;
  msg << "mellin_transform: Gauss-Laguerre split did not converge (error estimate "
      << res.error_estimate << ")";
  throw NumericalError(msg.str());
}

}  // namespace

void QuadratureScheme::validate() const {
  if (!(abs_tol > 0) || !(rel_tol > 0)) throw InputError("quadrature tolerances must be positive");
  if (!(t_min > 0) || !(t_min < t_max)) throw InputError("quadrature requires 0 < t_min < t_max");
  if (levels < 1) throw InputError("quadrature requires at least one level");
}

SemigroupSampler SemigroupSampler::scalar(std::function<Complex(double)> f) {
  SemigroupSampler s;
  s.evaluator = [f = std::move(f)](double t) {
    CMatrix m(1, 1);
    m(0, 0) = f(t);
    return m;
  };
  return s;
}

MellinResult mellin_transform(const SemigroupSampler& s, const MellinParams& p) {
  if (!s.evaluator) throw InputError("mellin_transform: sampler has no evaluator");
  p.quadrature.validate();
  if (p.hard_cutoff) return cutoff_log_axis(s, p);
  if (!p.strip.contains(p.alpha.real())) {
    std::ostringstream msg;
    msg << "mellin_transform: Re(alpha) = " << p.alpha.real() << " lies outside the fundamental strip ("
        << p.strip.lower << ", " << p.strip.upper << "); regularize or continue in alpha";
    throw InputError(msg.str());
  }
  MellinResult res = p.quadrature.kind == QuadratureScheme::Kind::TanhSinhLogAxis
                         ? tanh_sinh_log_axis(s, p)
                         : gauss_laguerre_split(s, p);
  if (p.gamma_normalizer) {
    const Complex r = rgamma(*p.gamma_normalizer);
    res.value *= r;
    res.error_estimate *= std::abs(r);
  }
  return res;
}

Strip fundamental_strip(const SemigroupSampler& s, std::optional<double> power_at_infinity) {
  if (!s.near_zero) throw InputError("fundamental_strip: sampler records no behavior at t -> 0");
  Strip strip;
  if (!s.near_zero->exponential) strip.lower = -s.near_zero->power;

  if (power_at_infinity) {
    strip.upper = -*power_at_infinity;
  } else if (s.decay_rate || (s.near_infinity && s.near_infinity->exponential)) {
    // exponential decay: unbounded above
  } else if (s.near_infinity) {
    strip.upper = -s.near_infinity->power;
  } else {
    throw InputError("fundamental_strip: sampler records no decay data at t -> inf");
  }
  return strip;
}

SemigroupSampler regularize_subtract_identity(const SemigroupSampler& s) {
  SemigroupSampler out;
  auto diff = [f = s.evaluator](double t) {
    CMatrix v = f(t);
    v -= std::exp(-t) * CMatrix::Identity(v.rows(), v.cols());
    return v;
  };
  out.evaluator = diff;
  if (s.identity_at_zero) {
    // F(t) - e^{-t} I loses every digit as t -> 0, so below t_sw the difference
    // is the cubic through the origin matching it at t_sw, t_sw/2, t_sw/4,
    // with t_sw * |D(t)/t| held near 3e-4 (model error ~1e-11 relative).
    double t_sw = 1e-3;
    for (int it = 0; it < 8; ++it) {
      const double slope = diff(t_sw).norm() / t_sw;
      if (!(slope > 0.0) || t_sw * slope <= 3e-4) break;
      t_sw = 3e-4 / slope;
    }
    Eigen::Matrix3d vander;
    for (int i = 0; i < 3; ++i) {
      const double u = std::ldexp(1.0, -i);
      vander.row(i) << u, u * u, u * u * u;
    }
    const Eigen::Matrix3d inv = vander.inverse();
    std::array<CMatrix, 3> samples = {diff(t_sw), diff(0.5 * t_sw), diff(0.25 * t_sw)};
    std::array<CMatrix, 3> coef;
    for (int k = 0; k < 3; ++k) coef[k] = inv(k, 0) * samples[0] + inv(k, 1) * samples[1] + inv(k, 2) * samples[2];
    out.evaluator = [diff, t_sw, coef](double t) -> CMatrix {
      if (t >= 0.25 * t_sw) return diff(t);
      const double u = t / t_sw;
      return u * (coef[0] + u * (coef[1] + u * coef[2]));
    };
  }
  if (s.decay_rate) out.decay_rate = std::min(*s.decay_rate, 1.0);
  out.near_infinity = s.near_infinity;
  if (s.near_zero) {
    if (s.identity_at_zero && !s.near_zero->exponential && s.near_zero->power == 0.0)
      out.near_zero = Asymptote::power_law(1.0);
    else if (s.near_zero->exponential)
      out.near_zero = Asymptote::power_law(0.0);
    else
      out.near_zero = Asymptote::power_law(std::min(s.near_zero->power, 0.0));
  }
  return out;
}

ContinuationModel gamma_power_model(double u, double a) {
  ContinuationModel m;
  std::ostringstream name;
  name << "C*Gamma(" << u << "-alpha)*" << a << "^(alpha-" << u << ")";
  m.name = name.str();
  m.basis.push_back([u, a](Complex alpha) { return gamma(u - alpha) * std::pow(Complex(a), alpha - u); });
  return m;
}

ContinuationResult continue_in_alpha(std::span<const std::pair<Complex, Complex>> samples,
                                     Complex target_alpha, const ContinuationModel& model,
                                     double max_condition) {
  const auto n_basis = static_cast<Eigen::Index>(model.basis.size());
  if (n_basis == 0) throw InputError("continue_in_alpha: model has no basis functions");
  if (samples.size() < 3) throw InputError("continue_in_alpha: need at least three in-strip samples");
  if (static_cast<Eigen::Index>(samples.size()) < n_basis)
    throw InputError("continue_in_alpha: fewer samples than free constants");

  const auto m = static_cast<Eigen::Index>(samples.size());
  CMatrix design(m, n_basis);
  CVector rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n_basis; ++j) design(i, j) = model.basis[j](samples[i].first);
    rhs(i) = samples[i].second;
  }
  if (!design.allFinite() || !rhs.allFinite())
    throw NumericalError("continue_in_alpha: model is singular at a sample point");

  // column scaling so the condition number reflects the model, not units
  Eigen::VectorXd scale(n_basis);
  for (Eigen::Index j = 0; j < n_basis; ++j) {
    scale(j) = design.col(j).norm();
    if (scale(j) == 0.0) throw NumericalError("continue_in_alpha: basis function vanishes on all samples");
    design.col(j) /= scale(j);
  }
  Eigen::JacobiSVD<CMatrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  ContinuationResult res;
  res.condition = sv(0) / sv(n_basis - 1);
  if (!(res.condition <= max_condition)) {
    std::ostringstream msg;
    msg << "continue_in_alpha: ill-conditioned fit (condition number " << res.condition << " > "
        << max_condition << ")";
    throw NumericalError(msg.str());
  }
  CVector coef = svd.solve(rhs);
  res.residual = (design * coef - rhs).norm();
  res.value = 0.0;
  for (Eigen::Index j = 0; j < n_basis; ++j) {
    coef(j) /= scale(j);
    res.coefficients.push_back(coef(j));
    res.value += coef(j) * model.basis[j](target_alpha);
  }
  return res;
}

}  // namespace mellinop
