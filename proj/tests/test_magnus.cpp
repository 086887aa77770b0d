#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mellinop/errors.hpp"
#include "mellinop/magnus.hpp"
#include "mellinop/random.hpp"

using namespace mellinop;

namespace {

const Complex I(0.0, 1.0);

CMatrix pauli(char which) {
  CMatrix m(2, 2);
  if (which == 'x') m << 0, 1, 1, 0;
  if (which == 'y') m << 0, -I, I, 0;
  if (which == 'z') m << 1, 0, 0, -1;
  return m;
}

double dist(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// exp(-i t H) for Hermitian H via Eigen's eigensolver.
CMatrix exp_mi(const CMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  Eigen::VectorXcd d(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) d(i) = std::exp(-I * t * es.eigenvalues()(i));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

// Closed form for H(t) = [[0, e^{it}], [e^{-it}, 0]] = cos t sx - sin t sy:
// in the frame rotating with e^{-i t sz / 2} the generator is constant.
CMatrix rotating_exact(double t) {
  const CMatrix frame = exp_mi(-0.5 * pauli('z'), t);
  return frame * exp_mi(pauli('x') + 0.5 * pauli('z'), t);
}

double slope(const std::vector<double>& h, const std::vector<double>& e) {
  return std::log(e.front() / e.back()) / std::log(h.front() / h.back());
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  const auto b = bernoulli_numbers(8);
  CHECK(b[0] == 1.0);
  CHECK(b[1] == doctest::Approx(-0.5));
  CHECK(b[2] == doctest::Approx(1.0 / 6));
  CHECK(std::abs(b[3]) < 1e-15);
  CHECK(b[4] == doctest::Approx(-1.0 / 30));
  CHECK(std::abs(b[7]) < 1e-15);
  CHECK(b[8] == doctest::Approx(-1.0 / 30));
}

TEST_CASE("adjoint powers") {
  Rng rng(1);
  const CMatrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
  CHECK(ad_power(a, b, 0) == b);
  CHECK(dist(ad_power(a, a * a, 3), CMatrix::Zero(3, 3)) < 1e-13);
  CHECK(dist(ad_power(pauli('x'), pauli('z'), 1), -2.0 * I * pauli('y')) < 1e-15);
  CHECK(dist(ad_power(a, b, 2), a * (a * b - b * a) - (a * b - b * a) * a) < 1e-13);
}

TEST_CASE("constant generators are integrated exactly") {
  Rng rng(2);
  const CMatrix h = random_hermitian(rng, 4);
  const auto gen = TimeDependentGenerator::constant(h);
  for (int order : {2, 4}) {
    CHECK(dist(magnus_step(gen, 0.3, 0.05, order), -I * 0.05 * h) < 1e-15);
    const auto ev = evolve(gen, 2.0, 9, order);
    CHECK(dist(ev.unitaries.front(), CMatrix::Identity(4, 4)) == 0.0);
    for (std::size_t k = 0; k < ev.times.size(); ++k) CHECK(dist(ev.unitaries[k], exp_mi(h, ev.times[k])) < 1e-12);
  }
}

TEST_CASE("Magnus exponent is anti-Hermitian") {
  Rng rng(3);
  const auto gen = TimeDependentGenerator::polynomial({random_hermitian(rng, 3), random_hermitian(rng, 3), random_hermitian(rng, 3)});
  for (int order : {2, 4}) {
    const CMatrix om = magnus_step(gen, 0.4, 0.3, order);
    CHECK(dist(om, -om.adjoint()) < 1e-12);
  }
}

TEST_CASE("order-4 local error scales as h^5") {
  const auto gen = TimeDependentGenerator::polynomial({pauli('x'), pauli('z')});
  auto fine = [&](double h) { return evolve(gen, h, 400, 4).unitaries.back(); };
  // evolve always starts at t = 0, so one step of size h is compared with a 400-step reference
  std::vector<double> hs, errs;
  for (double h : {0.2, 0.1, 0.05}) {
    hs.push_back(h);
    errs.push_back(dist(exp_anti_hermitian(magnus_step(gen, 0.0, h, 4)), fine(h)));
  }
  CHECK(slope(hs, errs) == doctest::Approx(5.0).epsilon(0.06));
}

TEST_CASE("rotating field: closed form and convergence orders") {
  const auto gen = TimeDependentGenerator::rotating_field(1.0, 1.0);
  CHECK(dist(gen(0.7), std::cos(0.7) * pauli('x') - std::sin(0.7) * pauli('y')) < 1e-15);
  const double T = 3.0;
  const CMatrix exact = rotating_exact(T);
  for (int order : {2, 4}) {
    std::vector<double> hs, errs;
    for (int n : {20, 40, 80}) {
      const auto ev = evolve(gen, T, n, order);
      hs.push_back(T / n);
      errs.push_back((ev.unitaries.back() - exact).norm());
      double defect = 0.0;
      for (const auto& u : ev.unitaries) defect = std::max(defect, dist(u.adjoint() * u, CMatrix::Identity(2, 2)));
      CHECK(defect < 1e-10);
    }
    CHECK(std::abs(slope(hs, errs) - order) < 0.3);
  }
}

TEST_CASE("Heisenberg picture") {
  const auto gen = TimeDependentGenerator::rotating_field(0.8, 1.3);
  const auto ev = evolve(gen, 2.0, 50, 4);
  for (const auto& f : heisenberg_evolve(CMatrix::Identity(2, 2), ev)) CHECK(dist(f, CMatrix::Identity(2, 2)) < 1e-13);

  Rng rng(4);
  const CMatrix f0 = random_hermitian(rng, 2);
  const auto fs = heisenberg_evolve(f0, ev);
  Eigen::SelfAdjointEigenSolver<CMatrix> e0(f0);
  for (const auto& f : fs) {
    CHECK(dist(f, f.adjoint()) < 1e-12);
    CHECK(std::abs(f.trace() - f0.trace()) < 1e-12);
    Eigen::SelfAdjointEigenSolver<CMatrix> e(0.5 * (f + f.adjoint()));
    CHECK((e.eigenvalues() - e0.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("Heisenberg residual") {
  Rng rng(5);
  const CMatrix h = random_hermitian(rng, 3);
  const CMatrix f0 = random_hermitian(rng, 3);
  const auto gen = TimeDependentGenerator::constant(h);
  std::vector<double> hs, res;
  for (int n : {20, 40, 80, 160}) {
    const auto ev = evolve(gen, 1.0, n, 4);
    hs.push_back(ev.step);
    res.push_back(heisenberg_residual(heisenberg_evolve(f0, ev), ev));
  }
  CHECK(std::abs(slope(hs, res) - 2.0) < 0.3);

  // F0 commuting with H stays put
  const CMatrix commuting = h * h;
  const auto ev = evolve(gen, 1.0, 40, 4);
  CHECK(heisenberg_residual(heisenberg_evolve(commuting, ev), ev) < 1e-10);

  // effective Hamiltonians recover H for a constant generator up to O(h^2)
  const auto heff = effective_hamiltonians(ev);
  CHECK(heff.front().size() == 0);
  CHECK(dist(heff[20], h) < 1e-2);
}

TEST_CASE("input validation") {
  CMatrix nonherm(2, 2);
  nonherm << 0, 1, 0, 0;
  CHECK_THROWS_AS(TimeDependentGenerator::constant(nonherm), InputError);
  const auto gen = TimeDependentGenerator::constant(pauli('x'));
  CHECK_THROWS_AS(evolve(gen, 1.0, 0, 4), InputError);
  CHECK_THROWS_AS(evolve(gen, 1.0, 10, 3), InputError);
  CHECK_THROWS_AS(TimeDependentGenerator::polynomial({}), InputError);
}
