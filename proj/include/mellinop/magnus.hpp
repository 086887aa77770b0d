#pragma once

#include <functional>
#include <vector>

#include "mellinop/types.hpp"

namespace mellinop {

/// t -> H(t), Hermitian of fixed dimension.
struct TimeDependentGenerator {
  std::function<CMatrix(double)> evaluator;
  Eigen::Index dim = 0;
  bool smooth = true;

  CMatrix operator()(double t) const { return evaluator(t); }

  static TimeDependentGenerator constant(const CMatrix& h);
  /// amplitude * [[0, e^{i w t}], [e^{-i w t}, 0]]
  static TimeDependentGenerator rotating_field(double amplitude = 1.0, double frequency = 1.0);
  /// sum_k t^k C_k
  static TimeDependentGenerator polynomial(std::vector<CMatrix> coefficients);
};

struct EvolutionResult {
  std::vector<double> times;
  std::vector<CMatrix> unitaries;  // U(t_k), U(0) = I
  std::vector<CMatrix> omegas;     // Magnus exponent of step k -> k+1
  int order = 4;
  double step = 0.0;
};

/// B_0..B_k with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0.
std::vector<double> bernoulli_numbers(int k);

/// ad_A^n(B): ad^0 = B, ad^n = [A, ad^{n-1}].
CMatrix ad_power(const CMatrix& a, const CMatrix& b, int n);

/// Magnus exponent for one step of U' = -i H(t) U over [t0, t0 + h].
/// Order 2: midpoint rule. Order 4: two Gauss-Legendre nodes with the
/// leading commutator correction.
CMatrix magnus_step(const TimeDependentGenerator& gen, double t0, double h, int order);

/// exp of an anti-Hermitian matrix, computed through the Hermitian i*omega.
CMatrix exp_anti_hermitian(const CMatrix& omega);

/// U(t_k) on the uniform grid t_k = k T / steps by composing exp(Omega_k).
EvolutionResult evolve(const TimeDependentGenerator& gen, double final_time, int steps, int order);

/// F(t_k) = U(t_k) F0 U(t_k)^dagger.
std::vector<CMatrix> heisenberg_evolve(const CMatrix& f0, const EvolutionResult& ev);

/// H~(t_k) = i (dU/dt) U^dagger by central differences at interior grid
/// points k = 1..N-1 (entry 0 and N are left empty).
std::vector<CMatrix> effective_hamiltonians(const EvolutionResult& ev);

/// max over interior points of || dF/dt + i [H~, F] || with central
/// differences on a uniform grid of spacing step.
double heisenberg_residual(const std::vector<CMatrix>& f, const std::vector<CMatrix>& h_eff, double step);

/// heisenberg_residual with H~ extracted from ev.
double heisenberg_residual(const std::vector<CMatrix>& f, const EvolutionResult& ev);

}  // namespace mellinop
