#include "mellinop/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mellinop/errors.hpp"
#include "mellinop/parallel.hpp"

namespace mellinop {
namespace {

constexpr double kMaxParam = 4.0;  // 1 - tanh(pi/2 sinh 4) ~ 1e-37

struct Node {
  double t;
  double w;
};

// Node at sinh-parameter u mapped onto [a, b]; the distance to the nearer
// endpoint is computed directly to avoid cancellation in 1 - tanh.
Node node_at(double u, double a, double b) {
  const double c = 0.5 * (a + b);
  const double d = 0.5 * (b - a);
  const double s = 0.5 * std::numbers::pi * std::sinh(std::abs(u));
  const double gap = 2.0 / (std::exp(2.0 * s) + 1.0);
  const double ch = std::cosh(s);
  const double w = 0.5 * std::numbers::pi * std::cosh(u) / (ch * ch);
  double t = c;
  if (u > 0) t = b - d * gap;
  if (u < 0) t = a + d * gap;
  return {t, w};
}

}  // namespace

QuadratureResult tanh_sinh(const std::function<CMatrix(double)>& f, double a, double b,
                           const TanhSinhOptions& opts) {
  if (!(a < b)) throw InputError("tanh_sinh: interval must satisfy a < b");
  return tanh_sinh_panels(f, {a, b}, opts);
}

QuadratureResult tanh_sinh_panels(const std::function<CMatrix(double)>& f, const std::vector<double>& breaks,
                                  const TanhSinhOptions& opts) {
  if (breaks.size() < 2) throw InputError("tanh_sinh: need at least two breakpoints");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (!(breaks[i - 1] < breaks[i])) throw InputError("tanh_sinh: breakpoints must increase");
  constexpr double eps = std::numeric_limits<double>::epsilon();

  QuadratureResult res;
  CMatrix acc;
  double abs_acc = 0.0;
  CMatrix prev;

  // every panel is refined at the same step; weights carry the panel half-width
  auto accumulate = [&](const std::vector<double>& params) {
    std::vector<Node> nodes;
    nodes.reserve(params.size() * (breaks.size() - 1));
    for (std::size_t p = 1; p < breaks.size(); ++p) {
      const double d = 0.5 * (breaks[p] - breaks[p - 1]);
      for (double u : params) {
        Node nd = node_at(u, breaks[p - 1], breaks[p]);
        nd.w *= d;
        nodes.push_back(nd);
      }
    }
    std::vector<CMatrix> vals(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) { vals[i] = f(nodes[i].t); });
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!vals[i].allFinite()) throw NumericalError("tanh_sinh: non-finite integrand value");
      if (acc.size() == 0) acc = CMatrix::Zero(vals[i].rows(), vals[i].cols());
      acc += nodes[i].w * vals[i];
      abs_acc += nodes[i].w * vals[i].norm();
    }
    res.evaluations += nodes.size();
  };

  // level 0: integer parameters
  {
    std::vector<double> params;
    const int k_max = static_cast<int>(kMaxParam);
    for (int k = -k_max; k <= k_max; ++k) params.push_back(static_cast<double>(k));
    accumulate(params);
    prev = acc;
  }

  for (int level = 1; level <= opts.max_level; ++level) {
    const double h = std::ldexp(1.0, -level);
    std::vector<double> params;
    for (double u = h; u <= kMaxParam; u += 2 * h) {
      params.push_back(u);
      params.push_back(-u);
    }
    accumulate(params);
    CMatrix current = h * acc;
    const double diff = (current - prev).norm();
    const double floor = 8.0 * eps * h * abs_acc;
    const double est = std::max(diff, floor);
    res.level_errors.push_back(est);
    res.levels = level;
    res.value = current;
    res.error_estimate = est;
    const double scale = current.norm();
    if (level >= opts.min_level && est <= std::max(opts.abs_tol, opts.rel_tol * scale)) {
      res.converged = true;
      return res;
    }
    prev = std::move(current);
  }
  return res;
}

namespace {

// L_n(x) and L_{n-1}(x), both divided by e^{log_scale} to stay in range.
struct LaguerrePair {
  double ln;
  double lm1;
  double log_scale;
};

// Extended precision keeps the weights accurate for rules with ~1000 nodes.
LaguerrePair laguerre_pair(int n, double x) {
  using Wide = long double;
  const Wide xw = x;
  Wide prev = 1.0L, cur = 1.0L - xw;
  double log_scale = 0.0;
  if (n == 1) return {static_cast<double>(cur), static_cast<double>(prev), 0.0};
  for (int k = 1; k < n; ++k) {
    const Wide next = ((2.0L * k + 1.0L - xw) * cur - k * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
    const Wide m = std::abs(cur);
    if (m > 1e100L) {
      cur /= m;
      prev /= m;
      log_scale += static_cast<double>(std::log(m));
    }
  }
  return {static_cast<double>(cur), static_cast<double>(prev), log_scale};
}

}  // namespace

GaussRule gauss_laguerre(int n) {
  if (n < 1) throw InputError("gauss_laguerre: need at least one node");
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    diag(k) = 2.0 * k + 1.0;
    if (k + 1 < n) sub(k) = k + 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.log_weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double x = es.eigenvalues()(k);
    LaguerrePair lp{};
    for (int it = 0; it < 3; ++it) {
      lp = laguerre_pair(n, x);
      // L_n' = n (L_n - L_{n-1}) / x; the common scale cancels in the ratio
      const double step = x * lp.ln / (n * (lp.ln - lp.lm1));
      if (!std::isfinite(step)) break;
      x -= step;
    }
    lp = laguerre_pair(n, x);
    rule.nodes[k] = x;
    rule.log_weights[k] = std::log(x) - 2.0 * std::log(static_cast<double>(n)) -
                          2.0 * (std::log(std::abs(lp.lm1)) + lp.log_scale);
    rule.weights[k] = std::exp(rule.log_weights[k]);
  }
  return rule;
}

}  // namespace mellinop
