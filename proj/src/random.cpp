#include "mellinop/random.hpp"

namespace mellinop {

CMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = u(rng);
      m(i, j) = Complex(re, u(rng));
    }
  return m;
}

CMatrix random_hermitian(Rng& rng, Eigen::Index n) {
  const CMatrix a = random_matrix(rng, n, n);
  return 0.5 * (a + a.adjoint());
}

CMatrix random_unitary(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = g(rng);
      a(i, j) = Complex(re, g(rng));
    }
  Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  // fix column phases against R's diagonal
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

CMatrix random_pd_hermitian(Rng& rng, Eigen::Index n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd lambda(n);
  for (Eigen::Index i = 0; i < n; ++i) lambda(i) = u(rng);
  const CMatrix q = random_unitary(rng, n);
  CMatrix h = q * lambda.cast<Complex>().asDiagonal() * q.adjoint();
  return 0.5 * (h + h.adjoint());
}

GroupFunction<Complex> random_group_function(Rng& rng, const GroupPtr& g, Eigen::Index dim) {
  std::vector<CMatrix> vals;
  for (int i = 0; i < g->order(); ++i) vals.push_back(random_matrix(rng, dim, dim));
  return GroupFunction<Complex>(g, std::move(vals));
}

}  // namespace mellinop
