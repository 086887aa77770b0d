#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mellinop/errors.hpp"
#include "mellinop/opcalc.hpp"
#include "mellinop/random.hpp"

using namespace mellinop;

namespace {

// Oracle straight from Eigen's Hermitian eigensolver.
template <class Fn>
CMatrix spectral(const CMatrix& h, Fn fn) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  CMatrix d = CMatrix::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < h.rows(); ++i) d(i, i) = fn(es.eigenvalues()(i));
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

CMatrix diag(std::initializer_list<double> v) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) d(i++) = x;
  return d.asDiagonal();
}

double err(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("eig_oracle") {
  const auto d = eig_oracle(diag({1, 2}));
  CHECK(d.eigenvalues(0) == doctest::Approx(1));
  CHECK(d.eigenvalues(1) == doctest::Approx(2));
  CHECK(err(d.eigenvectors.cwiseAbs().cast<Complex>(), CMatrix::Identity(2, 2)) < 1e-15);
  CMatrix px(2, 2);
  px << 0, 1, 1, 0;
  CHECK(eig_oracle(px).eigenvalues(0) == doctest::Approx(-1));
  Rng rng(1);
  const CMatrix h = random_hermitian(rng, 6);
  const auto s = eig_oracle(h);
  CHECK(err(s.reconstruct(), h) < 1e-10);
  CHECK(err(s.eigenvectors.adjoint() * s.eigenvectors, CMatrix::Identity(6, 6)) < 1e-12);
  CMatrix bad = h;
  bad(0, 1) += 1e-6;
  CHECK_THROWS_AS(eig_oracle(bad), InputError);
}

TEST_CASE("semigroup") {
  const HermitianOperator one(diag({1}));
  CHECK(std::abs(semigroup(one, 1.0)(0, 0) - std::exp(-1.0)) < 1e-16);
  Rng rng(2);
  const HermitianOperator h(random_hermitian(rng, 4));
  CHECK(err(semigroup(h, 1e-300), CMatrix::Identity(4, 4)) < 1e-14);
  CHECK(err(semigroup(h, 0.3) * semigroup(h, 0.9), semigroup(h, 1.2)) < 1e-12);
  CHECK_THROWS_AS(semigroup(h, -1.0), InputError);
}

TEST_CASE("functional_power examples") {
  const HermitianOperator id(CMatrix::Identity(3, 3));
  CHECK(err(functional_power(id, Complex(0.7, 0.4)).value, CMatrix::Identity(3, 3)) < 1e-12);
  CHECK(err(functional_power(HermitianOperator(diag({1, 4})), 0.5).value, diag({1, 0.5})) < 1e-12);
  const Complex want = Complex(std::cos(std::log(2.0)), -std::sin(std::log(2.0))) / 2.0;
  CHECK(std::abs(functional_power(HermitianOperator(diag({2})), Complex(1, 1)).value(0, 0) - want) < 1e-12);
}

TEST_CASE("functional_power domain errors") {
  CHECK_THROWS_AS(functional_power(HermitianOperator(diag({-1, 2})), 0.5), InputError);
  CHECK_THROWS_AS(functional_power(HermitianOperator(diag({1, 2})), -0.5), InputError);
  // regularized power reaches into -1 < Re(alpha) <= 0
  const auto r = regularized_power(HermitianOperator(diag({2, 5})), -0.5);
  CHECK(err(r.value, diag({std::sqrt(2.0), std::sqrt(5.0)})) < 1e-10);
}

TEST_CASE("property: powers match the spectral oracle on random PD matrices") {
  Rng rng(0xC0FFEE);
  for (int k = 0; k < 20; ++k) {
    const CMatrix m = random_pd_hermitian(rng, 1 + k % 6, 0.05, 30.0);
    const HermitianOperator h(m);
    for (Complex a : {Complex(0.3, 0), Complex(1.2, -0.8), Complex(2.5, 0)}) {
      const CMatrix want = spectral(m, [a](double l) { return std::exp(-a * std::log(l)); });
      CHECK((functional_power(h, a).value - want).norm() < 1e-10 * want.norm());
    }
    // H^{-a} H^{-b} = H^{-(a+b)}
    const CMatrix ab = functional_power(h, 0.4).value * functional_power(h, 0.9).value;
    CHECK((ab - functional_power(h, 1.3).value).norm() < 1e-10 * ab.norm());
  }
}

TEST_CASE("resolvent examples") {
  CHECK(std::abs(resolvent_power(HermitianOperator(diag({2})), Complex(0, 1), 1.0).value(0, 0) - Complex(-2, -1) / 5.0) <
        1e-12);
  CHECK(err(resolvent_power(HermitianOperator(diag({1, 3})), 5.0, 2.0).value, diag({1.0 / 16, 0.25})) < 1e-12);
  Rng rng(3);
  const HermitianOperator h(random_hermitian(rng, 5));
  for (Complex z : {Complex(0.3, 0.7), Complex(-4, 0), Complex(1, -2)}) {
    const CMatrix r = resolvent_power(h, z, 1.0).value;
    CHECK(err((z * CMatrix::Identity(5, 5) - h.matrix()) * r, CMatrix::Identity(5, 5)) < 1e-10);
  }
}

TEST_CASE("resolvent fractional exponent uses the principal branch") {
  Rng rng(4);
  const CMatrix m = random_pd_hermitian(rng, 4, 0.5, 3.0);
  const HermitianOperator h(m);
  for (Complex z : {Complex(0, 2), Complex(-1, 1), Complex(6, -0.5), Complex(-3, 0)}) {
    const Complex a(0.6, 0.3);
    const CMatrix want = spectral(m, [&](double l) { return std::exp(-a * std::log(z - l)); });
    CHECK(err(resolvent_power(h, z, a).value, want) < 1e-10);
  }
}

TEST_CASE("resolvent rejects z on or inside the spectrum") {
  const HermitianOperator h(diag({1, 3}));
  CHECK_THROWS_AS(resolvent_power(h, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(resolvent_power(h, 2.0, 1.0), InputError);
  CHECK_THROWS_AS(resolvent_power(h, Complex(1, 1e-12), 1.0), InputError);
}

TEST_CASE("traces") {
  CHECK(std::abs(functional_trace(HermitianOperator(diag({1, 2, 3})), 2.0).value - 49.0 / 36.0) < 1e-12);
  CHECK(std::abs(functional_trace(HermitianOperator(CMatrix::Identity(4, 4)), Complex(0.3, 2)).value - 4.0) < 1e-12);
  CHECK(std::abs(functional_trace(HermitianOperator(diag({1, 4})), 0.5).value - 1.5) < 1e-12);
  // zeta continued to Re(s) > -1
  CHECK(std::abs(spectral_zeta(HermitianOperator(diag({2, 3})), -0.5).value - (std::sqrt(2.0) + std::sqrt(3.0))) <
        1e-10);
}

TEST_CASE("Mellin determinant") {
  CHECK(std::abs(functional_determinant_mellin(HermitianOperator(diag({0.25, 0.75})), Complex(0.8, 0.3)).value - 1.0) <
        1e-12);
  CHECK(std::abs(functional_determinant_mellin(HermitianOperator(diag({1, 2})), 1.0).value - 1.0 / 9.0) < 1e-12);
  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    const HermitianOperator h(random_hermitian(rng, 4));
    const double t = 0.7;
    const Complex det = semigroup(h, t).determinant();
    CHECK(std::abs(det - std::exp(-t * h.matrix().trace())) < 1e-12 * std::abs(det));
  }
  CHECK_THROWS_AS(functional_determinant_mellin(HermitianOperator(diag({-2, 1})), 1.0), InputError);
}

TEST_CASE("zeta determinant") {
  CHECK(zeta_determinant(HermitianOperator(diag({2, 3}))).value == doctest::Approx(6.0).epsilon(1e-8));
  CHECK(zeta_determinant(HermitianOperator(CMatrix::Identity(3, 3))).value == doctest::Approx(1.0).epsilon(1e-10));
  Rng rng(6);
  const CMatrix m = random_pd_hermitian(rng, 5, 0.1, 9.0);
  const double prod = Eigen::SelfAdjointEigenSolver<CMatrix>(m).eigenvalues().prod();
  CHECK(std::abs(zeta_determinant(HermitianOperator(m)).value - prod) < 1e-6 * prod);
}

TEST_CASE("functional log") {
  CHECK(functional_log(HermitianOperator(CMatrix::Identity(3, 3))).value.norm() < 1e-9);
  CHECK(std::abs(functional_log(HermitianOperator(diag({std::numbers::e}))).value(0, 0) + 1.0) < 1e-8);
  Rng rng(7);
  for (int k = 0; k < 5; ++k) {
    const CMatrix m = random_pd_hermitian(rng, 3 + k, 0.05, 20.0);
    const CMatrix want = spectral(m, [](double l) { return Complex(-std::log(l), 0); });
    CHECK(err(functional_log(HermitianOperator(m)).value, want) < 1e-6);
  }
}

TEST_CASE("enveloping exponential") {
  Rng rng(8);
  const HermitianOperator h(random_hermitian(rng, 4));
  CHECK(err(enveloping_exponential(h, 0.0), CMatrix::Identity(4, 4)) < 1e-14);
  CMatrix px(2, 2);
  px << 0, 1, 1, 0;
  CHECK(err(enveloping_exponential(HermitianOperator(px), std::numbers::pi), -CMatrix::Identity(2, 2)) < 1e-14);
  const CMatrix u = enveloping_exponential(h, 2.7);
  CHECK(err(u.adjoint() * u, CMatrix::Identity(4, 4)) < 1e-12);
}
