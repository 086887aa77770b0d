#pragma once

#include <vector>

#include "mellinop/types.hpp"

namespace mellinop {

struct WeightSpace {
  std::vector<double> weight;  // one eigenvalue per Cartan generator
  CMatrix basis;               // orthonormal columns
};

struct WeightDecomposition {
  std::vector<CMatrix> cartan;
  std::vector<WeightSpace> spaces;  // weights ascending (lexicographic)

  Eigen::Index module_dim() const { return cartan.empty() ? 0 : cartan.front().rows(); }
};

/// Simultaneous eigenspaces of commuting Hermitian matrices, by refining the
/// eigenspaces of each generator in turn. Eigenvalues within cluster_tol
/// (scaled by max(1, |lambda|)) are one weight.
WeightDecomposition weight_decompose(const std::vector<CMatrix>& cartan, double cluster_tol = 1e-10);

struct HighestWeightVector {
  CVector vector;
  std::vector<double> weight;
  bool maximal = false;  // lexicographically largest weight among the results
};

/// Orthonormal bases of the common kernel of the raising operators inside
/// each weight space. Empty when there is none.
std::vector<HighestWeightVector> highest_weight_vectors(const WeightDecomposition& wd,
                                                        const std::vector<CMatrix>& raising,
                                                        double annihilation_tol = 1e-12);

/// Spin-j matrices J_x, J_y, J_z, J_+ , J_- in the |j, m> basis, m = j..-j.
struct SpinMatrices {
  CMatrix jx, jy, jz, jplus, jminus;
};
SpinMatrices spin_matrices(double j);

}  // namespace mellinop
