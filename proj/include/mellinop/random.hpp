#pragma once

#include <cstdint>
#include <random>

#include "mellinop/group_algebra.hpp"
#include "mellinop/types.hpp"

namespace mellinop {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t default_seed = 0xC0FFEE;

/// Entries with real and imaginary parts uniform in [-1, 1].
CMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
CMatrix random_hermitian(Rng& rng, Eigen::Index n);
/// Haar-ish unitary from the QR factor of a Gaussian matrix.
CMatrix random_unitary(Rng& rng, Eigen::Index n);
/// U diag(lambda) U^dagger, lambda uniform in [lo, hi].
CMatrix random_pd_hermitian(Rng& rng, Eigen::Index n, double lo, double hi);
GroupFunction<Complex> random_group_function(Rng& rng, const GroupPtr& g, Eigen::Index dim);

}  // namespace mellinop
