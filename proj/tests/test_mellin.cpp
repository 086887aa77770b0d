#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mellinop/errors.hpp"
#include "mellinop/mellin.hpp"
#include "mellinop/random.hpp"

using namespace mellinop;

namespace {

SemigroupSampler exp_sampler(double lambda) {
  auto s = SemigroupSampler::scalar([lambda](double t) { return Complex(std::exp(-lambda * t), 0.0); });
  s.decay_rate = lambda;
  s.near_zero = Asymptote::power_law(0.0);
  s.near_infinity = Asymptote::exp_decay();
  s.identity_at_zero = true;
  return s;
}

SemigroupSampler kernel_like(int n) {
  const double a = std::numbers::pi;
  auto s = SemigroupSampler::scalar([a, n](double t) { return Complex(std::exp(-a / t) * std::pow(t, -0.5 * n), 0.0); });
  s.near_zero = Asymptote::exp_decay();
  s.near_infinity = Asymptote::power_law(-0.5 * n);
  return s;
}

}  // namespace

TEST_CASE("scalar exponential: Gamma identities") {
  MellinParams p;
  p.alpha = 1.0;
  p.gamma_normalizer = 1.0;
  p.strip = fundamental_strip(exp_sampler(1.0));
  CHECK(std::abs(mellin_transform(exp_sampler(1.0), p).value(0, 0) - 1.0) < 1e-13);

  p.alpha = 2.5;
  p.gamma_normalizer.reset();
  CHECK(std::abs(mellin_transform(exp_sampler(1.0), p).value(0, 0) - 1.3293403881791355) < 1e-12);
}

TEST_CASE("matrix semigroup diag(1,4) at alpha 1/2") {
  SemigroupSampler s;
  s.evaluator = [](double t) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = std::exp(-t);
    m(1, 1) = std::exp(-4 * t);
    return m;
  };
  s.decay_rate = 1.0;
  s.near_zero = Asymptote::power_law(0.0);
  s.near_infinity = Asymptote::exp_decay();
  MellinParams p;
  p.alpha = 0.5;
  p.gamma_normalizer = 0.5;
  p.strip = fundamental_strip(s);
  const CMatrix v = mellin_transform(s, p).value;
  CHECK(std::abs(v(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(v(1, 1) - 0.5) < 1e-12);
  CHECK(std::abs(v(0, 1)) < 1e-15);
}

TEST_CASE("property: normalized transform of e^{-lambda t} is lambda^{-alpha}") {
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_real_distribution<double> lam(0.05, 20.0), re(0.1, 3.0), im(-2.0, 2.0);
  for (auto kind : {QuadratureScheme::Kind::TanhSinhLogAxis, QuadratureScheme::Kind::GaussLaguerreSplit}) {
    for (int k = 0; k < 40; ++k) {
      const double l = lam(rng);
      Complex alpha(re(rng), im(rng));
      // the Laguerre split is documented for |Im alpha| <= 4 Re(alpha)
      while (kind == QuadratureScheme::Kind::GaussLaguerreSplit && std::abs(alpha.imag()) > 4.0 * alpha.real())
        alpha = Complex(re(rng), im(rng));
      MellinParams p;
      p.alpha = alpha;
      p.gamma_normalizer = alpha;
      p.quadrature.kind = kind;
      p.strip = fundamental_strip(exp_sampler(l));
      const auto r = mellin_transform(exp_sampler(l), p);
      const Complex want = std::exp(-alpha * std::log(l));
      CHECK(std::abs(r.value(0, 0) - want) < 1e-11 * std::abs(want));
    }
  }
}

TEST_CASE("error estimate bounds the true error on the Gamma family") {
  for (double a : {0.3, 1.0, 2.5, 4.0}) {
    MellinParams p;
    p.alpha = a;
    p.strip = fundamental_strip(exp_sampler(1.0));
    const auto r = mellin_transform(exp_sampler(1.0), p);
    CHECK(std::abs(r.value(0, 0) - std::tgamma(a)) <= r.error_estimate + 4e-16 * std::tgamma(a));
    for (std::size_t i = 2; i < r.level_errors.size(); ++i)
      if (r.level_errors[i - 1] > 1e-13) CHECK(r.level_errors[i] <= r.level_errors[i - 1]);
  }
}

TEST_CASE("property: transform commutes with unitary conjugation") {
  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    const CMatrix u = random_unitary(rng, 3);
    Eigen::Vector3d lam(0.5 + k * 0.1, 1.3, 2.9);
    SemigroupSampler s, su;
    s.evaluator = [lam](double t) { return CMatrix((-t * lam).array().exp().matrix().cast<Complex>().asDiagonal()); };
    su.evaluator = [s, u](double t) { return CMatrix(u * s(t) * u.adjoint()); };
    for (auto* x : {&s, &su}) {
      x->decay_rate = lam.minCoeff();
      x->near_zero = Asymptote::power_law(0.0);
      x->near_infinity = Asymptote::exp_decay();
    }
    MellinParams p;
    p.alpha = 0.7;
    p.gamma_normalizer = 0.7;
    p.strip = fundamental_strip(s);
    const CMatrix a = mellin_transform(s, p).value, b = mellin_transform(su, p).value;
    CHECK((u * a * u.adjoint() - b).norm() < 1e-12);
  }
}

TEST_CASE("alpha outside the strip is an input error") {
  MellinParams p;
  p.alpha = -0.5;
  p.strip = fundamental_strip(exp_sampler(1.0));
  CHECK_THROWS_AS(mellin_transform(exp_sampler(1.0), p), InputError);
}

TEST_CASE("fundamental strips") {
  const Strip heat = fundamental_strip(exp_sampler(2.0));
  CHECK(heat.lower == 0.0);
  CHECK(std::isinf(heat.upper));

  auto both = SemigroupSampler::scalar([](double t) { return Complex(std::exp(-t - 1.0 / t), 0.0); });
  both.near_zero = Asymptote::exp_decay();
  both.near_infinity = Asymptote::exp_decay();
  CHECK(fundamental_strip(both).unbounded());

  CHECK(fundamental_strip(kernel_like(3)).upper == doctest::Approx(1.5));
  const Strip s2 = fundamental_strip(kernel_like(2));
  CHECK(s2.upper == doctest::Approx(1.0));
  CHECK_FALSE(s2.contains(1.0));

  SemigroupSampler bare = SemigroupSampler::scalar([](double t) { return Complex(t, 0); });
  CHECK_THROWS_AS(fundamental_strip(bare), InputError);
  bare.near_zero = Asymptote::exp_decay();
  CHECK(fundamental_strip(bare, -1.0).upper == doctest::Approx(1.0));
}

TEST_CASE("identity subtraction") {
  const auto z = regularize_subtract_identity(exp_sampler(1.0));
  for (double t : {1e-3, 0.5, 1.0, 7.0}) CHECK(std::abs(z(t)(0, 0)) == 0.0);
  const auto k = regularize_subtract_identity(SemigroupSampler::scalar(
      [](double t) { return Complex(std::exp(-std::numbers::pi / t), 0.0); }));
  CHECK(std::abs(k(1.0)(0, 0) - (std::exp(-std::numbers::pi) - std::exp(-1.0))) < 1e-16);

  // extends the strip of a semigroup by one to the left: zeta-type value at alpha = -0.5
  const auto reg = regularize_subtract_identity(exp_sampler(3.0));
  const Strip s = fundamental_strip(reg);
  CHECK(s.lower == doctest::Approx(-1.0));
  MellinParams p;
  p.alpha = -0.5;
  p.gamma_normalizer = -0.5;
  p.strip = s;
  // M[e^{-3t} - e^{-t}](a)/Gamma(a) = 3^{-a} - 1
  CHECK(std::abs(mellin_transform(reg, p).value(0, 0) - (std::sqrt(3.0) - 1.0)) < 1e-11);
}

TEST_CASE("continuation in alpha") {
  const double r = 1.0, a = std::numbers::pi * r * r;
  const auto model = gamma_power_model(0.5, a);
  auto exact = [&](double al) { return std::tgamma(0.5 - al) * std::pow(a, al - 0.5); };
  std::vector<std::pair<Complex, Complex>> samples;
  for (double al : {0.1, 0.2, 0.3}) samples.emplace_back(al, exact(al));
  const auto res = continue_in_alpha(samples, 1.0, model);
  CHECK(std::abs(res.value + 2 * std::numbers::pi) < 1e-10);
  CHECK(std::abs(res.coefficients[0] - 1.0) < 1e-10);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> noise(-1e-9, 1e-9);
  for (auto& s : samples) s.second += noise(rng);
  CHECK(std::abs(continue_in_alpha(samples, 1.0, model).value + 2 * std::numbers::pi) < 1e-6);

  samples.resize(2);
  CHECK_THROWS_AS(continue_in_alpha(samples, 1.0, model), InputError);
}

TEST_CASE("ill-conditioned continuation fit is a numerical failure") {
  ContinuationModel twin{"twin", {[](Complex al) { return al; }, [](Complex al) { return al * (1.0 + 1e-15); }}};
  std::vector<std::pair<Complex, Complex>> samples{{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}};
  CHECK_THROWS_AS(continue_in_alpha(samples, 1.0, twin), NumericalError);
}

TEST_CASE("hard cutoff integrates exactly the window") {
  auto one = SemigroupSampler::scalar([](double) { return Complex(1.0, 0.0); });
  MellinParams p;
  p.alpha = 0.0;
  p.hard_cutoff = true;
  p.quadrature.t_min = 1e-4;
  p.quadrature.t_max = 1e4;
  CHECK(std::abs(mellin_transform(one, p).value(0, 0) - 8 * std::log(10.0)) < 1e-12);
}

TEST_CASE("scheme validation") {
  QuadratureScheme q;
  q.t_min = 2.0;
  q.t_max = 1.0;
  CHECK_THROWS_AS(q.validate(), InputError);
  QuadratureScheme q2;
  q2.rel_tol = -1;
  CHECK_THROWS_AS(q2.validate(), InputError);
}
