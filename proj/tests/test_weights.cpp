#include <doctest.h>

#include "mellinop/errors.hpp"
#include "mellinop/random.hpp"
#include "mellinop/weights.hpp"

using namespace mellinop;

namespace {

CMatrix diag(std::initializer_list<double> v) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) d(i++) = x;
  return d.asDiagonal();
}

void check_orthonormal_cover(const WeightDecomposition& wd) {
  const Eigen::Index n = wd.module_dim();
  CMatrix all(n, 0);
  for (const auto& s : wd.spaces) {
    CMatrix next(n, all.cols() + s.basis.cols());
    next << all, s.basis;
    all = next;
  }
  CHECK(all.cols() == n);
  CHECK((all.adjoint() * all - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
}

}  // namespace

TEST_CASE("single diagonal generator") {
  const auto wd = weight_decompose({diag({1, 0, -1})});
  REQUIRE(wd.spaces.size() == 3);
  CHECK(wd.spaces[0].weight[0] == doctest::Approx(-1));
  CHECK(wd.spaces[1].weight[0] == doctest::Approx(0));
  CHECK(wd.spaces[2].weight[0] == doctest::Approx(1));
  for (const auto& s : wd.spaces) CHECK(s.basis.cols() == 1);
  check_orthonormal_cover(wd);
}

TEST_CASE("identity gives one weight") {
  const auto wd = weight_decompose({CMatrix::Identity(4, 4)});
  REQUIRE(wd.spaces.size() == 1);
  CHECK(wd.spaces[0].basis.cols() == 4);
  CHECK(wd.spaces[0].weight[0] == doctest::Approx(1));
}

TEST_CASE("spin matrices and the spin-1 module") {
  const auto s = spin_matrices(1.0);
  const Complex i(0, 1);
  CHECK((s.jx * s.jy - s.jy * s.jx - i * s.jz).cwiseAbs().maxCoeff() < 1e-14);
  const CMatrix casimir = s.jx * s.jx + s.jy * s.jy + s.jz * s.jz;
  CHECK((casimir - 2.0 * CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-14);

  const auto wd = weight_decompose({s.jz});
  REQUIRE(wd.spaces.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(wd.spaces[k].weight[0] == doctest::Approx(k - 1.0));

  const auto hv = highest_weight_vectors(wd, {s.jplus});
  REQUIRE(hv.size() == 1);
  CHECK(hv[0].maximal);
  CHECK(hv[0].weight[0] == doctest::Approx(1.0));
  CHECK((s.jplus * hv[0].vector).norm() <= 1e-12);
  CHECK(std::abs(std::abs(hv[0].vector(0)) - 1.0) < 1e-14);
}

TEST_CASE("rotated Cartan generator") {
  Rng rng(21);
  const auto s = spin_matrices(1.5);
  const CMatrix u = random_unitary(rng, 4);
  const CMatrix jz = u * s.jz * u.adjoint(), jp = u * s.jplus * u.adjoint();
  const auto wd = weight_decompose({jz});
  CHECK(wd.spaces.size() == 4);
  check_orthonormal_cover(wd);
  const auto hv = highest_weight_vectors(wd, {jp});
  REQUIRE(hv.size() == 1);
  CHECK(hv[0].weight[0] == doctest::Approx(1.5));
  CHECK((jp * hv[0].vector).norm() <= 1e-12);
}

TEST_CASE("adjoint module of su(2)") {
  // ad_{J_z} and ad_{J_+} on the basis (J_+, J_z, J_-) of sl(2)
  CMatrix adz = CMatrix::Zero(3, 3), adp = CMatrix::Zero(3, 3);
  adz(0, 0) = 1;
  adz(2, 2) = -1;
  adp(0, 1) = -1;  // [J+, Jz] = -J+
  adp(1, 2) = 2;   // [J+, J-] = 2 Jz
  const auto hv = highest_weight_vectors(weight_decompose({adz}), {adp});
  REQUIRE(hv.size() == 1);
  CHECK(hv[0].weight[0] == doctest::Approx(1.0));
}

TEST_CASE("two commuting generators") {
  const CMatrix h1 = diag({1, 1, -1, -1}), h2 = diag({1, -1, 1, 1});
  const auto wd = weight_decompose({h1, h2});
  REQUIRE(wd.spaces.size() == 3);
  CHECK(wd.spaces[0].weight == std::vector<double>{-1, 1});
  CHECK(wd.spaces[0].basis.cols() == 2);
  check_orthonormal_cover(wd);
}

TEST_CASE("trivial module without raising operators") {
  const auto hv = highest_weight_vectors(weight_decompose({CMatrix::Zero(1, 1)}), {});
  REQUIRE(hv.size() == 1);
  CHECK(hv[0].maximal);
}

TEST_CASE("no highest-weight vector is a valid empty result") {
  // a raising operator that kills nothing
  const CMatrix shift = CMatrix::Identity(2, 2);
  CHECK(highest_weight_vectors(weight_decompose({diag({1, -1})}), {shift}).empty());
}

TEST_CASE("errors") {
  const auto s = spin_matrices(1.0);
  CHECK_THROWS_AS(weight_decompose({s.jx, s.jz}), InputError);
  CHECK_THROWS_AS(weight_decompose({s.jplus}), InputError);
  CHECK_THROWS_AS(weight_decompose({}), InputError);
  CHECK_THROWS_AS(spin_matrices(0.3), InputError);
}
