#include "mellinop/magnus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mellinop/errors.hpp"

namespace mellinop {
namespace {

const Complex kI{0.0, 1.0};

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

TimeDependentGenerator TimeDependentGenerator::constant(const CMatrix& h) {
  if (h.rows() == 0 || h.rows() != h.cols()) throw InputError("constant generator: matrix must be square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff()))
    throw InputError("constant generator: matrix must be Hermitian");
  return {[h](double) { return h; }, h.rows(), true};
}

TimeDependentGenerator TimeDependentGenerator::rotating_field(double amplitude, double frequency) {
  return {[amplitude, frequency](double t) {
            CMatrix h = CMatrix::Zero(2, 2);
            h(0, 1) = amplitude * std::exp(kI * (frequency * t));
            h(1, 0) = std::conj(h(0, 1));
            return h;
          },
          2, true};
}

TimeDependentGenerator TimeDependentGenerator::polynomial(std::vector<CMatrix> coefficients) {
  if (coefficients.empty()) throw InputError("polynomial generator: need at least one coefficient");
  const Eigen::Index d = coefficients.front().rows();
  for (const auto& c : coefficients) {
    if (c.rows() != d || c.cols() != d) throw InputError("polynomial generator: coefficient dimensions differ");
    if ((c - c.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, c.cwiseAbs().maxCoeff()))
      throw InputError("polynomial generator: coefficients must be Hermitian");
  }
  return {[cs = std::move(coefficients)](double t) {
            // Horner
            CMatrix acc = cs.back();
            for (auto it = cs.rbegin() + 1; it != cs.rend(); ++it) acc = (acc * t + *it).eval();
            return acc;
          },
          d, true};
}

std::vector<double> bernoulli_numbers(int k) {
  if (k < 0) throw InputError("bernoulli_numbers: k must be non-negative");
  std::vector<double> b(k + 1, 0.0);
  b[0] = 1.0;
  for (int m = 1; m <= k; ++m) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * b[j];
    b[m] = -s / (m + 1);
    if (m > 1 && m % 2 == 1) b[m] = 0.0;  // exact zero instead of recurrence roundoff
  }
  return b;
}

CMatrix ad_power(const CMatrix& a, const CMatrix& b, int n) {
  if (n < 0) throw InputError("ad_power: n must be non-negative");
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw InputError("ad_power: matrices must be square of equal size");
  CMatrix out = b;
  for (int k = 0; k < n; ++k) out = (a * out - out * a).eval();
  return out;
}

CMatrix magnus_step(const TimeDependentGenerator& gen, double t0, double h, int order) {
  if (!(h > 0.0)) throw InputError("magnus_step: step must be positive");
  if (order == 2) return -kI * h * gen(t0 + 0.5 * h);
  if (order != 4) throw InputError("magnus_step: order must be 2 or 4");
  const double c = std::sqrt(3.0) / 6.0;
  const CMatrix a1 = -kI * gen(t0 + (0.5 - c) * h);
  const CMatrix a2 = -kI * gen(t0 + (0.5 + c) * h);
  return 0.5 * h * (a1 + a2) + (std::sqrt(3.0) * h * h / 12.0) * (a2 * a1 - a1 * a2);
}

CMatrix exp_anti_hermitian(const CMatrix& omega) {
  const CMatrix k = kI * omega;  // Hermitian
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (k + k.adjoint()));
  CVector phases = (-kI * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

EvolutionResult evolve(const TimeDependentGenerator& gen, double final_time, int steps, int order) {
  if (steps < 1) throw InputError("evolve: need at least one step");
  if (order != 2 && order != 4) throw InputError("evolve: order must be 2 or 4");
  if (!(final_time > 0.0)) throw InputError("evolve: final time must be positive");
  EvolutionResult ev;
  ev.order = order;
  ev.step = final_time / steps;
  ev.times.reserve(steps + 1);
  ev.unitaries.reserve(steps + 1);
  ev.times.push_back(0.0);
  ev.unitaries.push_back(CMatrix::Identity(gen.dim, gen.dim));
  for (int k = 0; k < steps; ++k) {
    const double t0 = k * ev.step;
    CMatrix omega = magnus_step(gen, t0, ev.step, order);
    ev.unitaries.push_back(exp_anti_hermitian(omega) * ev.unitaries.back());
    ev.omegas.push_back(std::move(omega));
    ev.times.push_back((k + 1) * ev.step);
  }
  return ev;
}

std::vector<CMatrix> heisenberg_evolve(const CMatrix& f0, const EvolutionResult& ev) {
  if (ev.unitaries.empty()) throw InputError("heisenberg_evolve: empty evolution");
  if (f0.rows() != ev.unitaries.front().rows() || f0.cols() != f0.rows())
    throw InputError("heisenberg_evolve: observable dimension does not match the evolution");
  std::vector<CMatrix> out;
  out.reserve(ev.unitaries.size());
  for (const auto& u : ev.unitaries) out.push_back(u * f0 * u.adjoint());
  return out;
}

std::vector<CMatrix> effective_hamiltonians(const EvolutionResult& ev) {
  const std::size_t n = ev.unitaries.size();
  if (n < 3) throw InputError("effective_hamiltonians: need at least 3 grid points");
  std::vector<CMatrix> out(n);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const CMatrix du = (ev.unitaries[k + 1] - ev.unitaries[k - 1]) / (2.0 * ev.step);
    out[k] = kI * du * ev.unitaries[k].adjoint();
  }
  return out;
}

double heisenberg_residual(const std::vector<CMatrix>& f, const std::vector<CMatrix>& h_eff, double step) {
  if (f.size() < 3) throw InputError("heisenberg_residual: grid too coarse, need at least 3 points");
  if (h_eff.size() != f.size()) throw InputError("heisenberg_residual: generator and observable grids differ");
  if (!(step > 0.0)) throw InputError("heisenberg_residual: step must be positive");
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < f.size(); ++k) {
    const CMatrix df = (f[k + 1] - f[k - 1]) / (2.0 * step);
    const CMatrix comm = h_eff[k] * f[k] - f[k] * h_eff[k];
    worst = std::max(worst, (df + kI * comm).norm());
  }
  return worst;
}

double heisenberg_residual(const std::vector<CMatrix>& f, const EvolutionResult& ev) {
  if (f.size() != ev.unitaries.size()) throw InputError("heisenberg_residual: observable grid differs from evolution");
  return heisenberg_residual(f, effective_hamiltonians(ev), ev.step);
}

}  // namespace mellinop
