#include "mellinop/weights.hpp"

#include <algorithm>
#include <cmath>

#include "mellinop/errors.hpp"

namespace mellinop {

WeightDecomposition weight_decompose(const std::vector<CMatrix>& cartan, double cluster_tol) {
  if (cartan.empty()) throw InputError("weight_decompose: no Cartan generators");
  const Eigen::Index n = cartan.front().rows();
  double scale = 1.0;
  for (const auto& h : cartan) {
    if (h.rows() != n || h.cols() != n || !h.allFinite())
      throw InputError("weight_decompose: generators must be finite square matrices of one size");
    scale = std::max(scale, spectral_norm(h));
  }
  for (const auto& h : cartan)
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
      throw InputError("weight_decompose: generator is not Hermitian");
  for (std::size_t a = 0; a < cartan.size(); ++a)
    for (std::size_t b = a + 1; b < cartan.size(); ++b)
      if (spectral_norm(cartan[a] * cartan[b] - cartan[b] * cartan[a]) > 1e-10 * scale * scale)
        throw InputError("weight_decompose: generators do not commute");

  std::vector<WeightSpace> spaces{{{}, CMatrix::Identity(n, n)}};
  for (const auto& h : cartan) {
    std::vector<WeightSpace> next;
    for (const auto& ws : spaces) {
      const CMatrix restricted = ws.basis.adjoint() * h * ws.basis;
      Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (restricted + restricted.adjoint()));
      const auto& ev = es.eigenvalues();
      Eigen::Index start = 0;
      for (Eigen::Index k = 1; k <= ev.size(); ++k) {
        if (k < ev.size() && ev(k) - ev(k - 1) <= cluster_tol * std::max(1.0, std::abs(ev(k)))) continue;
        WeightSpace out;
        out.weight = ws.weight;
        out.weight.push_back(ev.segment(start, k - start).mean());
        out.basis = ws.basis * es.eigenvectors().middleCols(start, k - start);
        next.push_back(std::move(out));
        start = k;
      }
    }
    spaces = std::move(next);
  }
  std::sort(spaces.begin(), spaces.end(), [](const WeightSpace& a, const WeightSpace& b) { return a.weight < b.weight; });
  return {cartan, std::move(spaces)};
}

std::vector<HighestWeightVector> highest_weight_vectors(const WeightDecomposition& wd,
                                                        const std::vector<CMatrix>& raising,
                                                        double annihilation_tol) {
  const Eigen::Index n = wd.module_dim();
  for (const auto& e : raising)
    if (e.rows() != n || e.cols() != n) throw InputError("highest_weight_vectors: raising operator has wrong size");

  std::vector<HighestWeightVector> out;
  for (const auto& ws : wd.spaces) {
    const Eigen::Index k = ws.basis.cols();
    CMatrix kernel;
    if (raising.empty()) {
      kernel = ws.basis;
    } else {
      CMatrix stacked(n * static_cast<Eigen::Index>(raising.size()), k);
      double scale = 1.0;
      for (std::size_t r = 0; r < raising.size(); ++r) {
        stacked.middleRows(static_cast<Eigen::Index>(r) * n, n) = raising[r] * ws.basis;
        scale = std::max(scale, spectral_norm(raising[r]));
      }
      Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      Eigen::Index rank = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-10 * scale) ++rank;
      if (rank == k) continue;
      kernel = ws.basis * svd.matrixV().rightCols(k - rank);
    }
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
      CVector v = kernel.col(c).normalized();
      bool ok = true;
      for (const auto& e : raising) ok = ok && (e * v).norm() <= annihilation_tol;
      if (ok) out.push_back({std::move(v), ws.weight, false});
    }
  }
  if (!out.empty()) {
    auto best = std::max_element(out.begin(), out.end(),
                                 [](const auto& a, const auto& b) { return a.weight < b.weight; });
    for (auto& h : out) h.maximal = (h.weight == best->weight);
  }
  return out;
}

SpinMatrices spin_matrices(double j) {
  const double twice = 2.0 * j;
  if (twice < 0 || std::abs(twice - std::round(twice)) > 1e-12) throw InputError("spin_matrices: j must be a nonnegative half-integer");
  const auto n = static_cast<Eigen::Index>(std::round(twice)) + 1;
  SpinMatrices s;
  s.jz = CMatrix::Zero(n, n);
  s.jplus = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = j - static_cast<double>(i);
    s.jz(i, i) = m;
    // J+ |j, m> = sqrt(j(j+1) - m(m+1)) |j, m+1>
    if (i > 0) s.jplus(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  s.jminus = s.jplus.adjoint();
  s.jx = 0.5 * (s.jplus + s.jminus);
  s.jy = Complex(0.0, -0.5) * (s.jplus - s.jminus);
  return s;
}

}  // namespace mellinop
