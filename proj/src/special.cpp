#include "mellinop/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace mellinop {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

// log Gamma for Re z >= 0.5
Complex lanczos_lgamma(Complex z) {
  z -= 1.0;
  Complex x = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) x += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Complex lgamma(Complex z) {
  if (is_nonpositive_integer(z)) return {std::numeric_limits<double>::infinity(), 0.0};
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) - lanczos_lgamma(1.0 - z);
  }
  return lanczos_lgamma(z);
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) return {std::numeric_limits<double>::infinity(), 0.0};
  if (z.imag() == 0.0) return {std::tgamma(z.real()), 0.0};
  if (z.real() < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma(1.0 - z));
  return std::exp(lanczos_lgamma(z));
}

Complex rgamma(Complex z) {
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  if (z.imag() == 0.0) return {1.0 / std::tgamma(z.real()), 0.0};
  if (z.real() < 0.5) return std::sin(std::numbers::pi * z) * gamma(1.0 - z) / std::numbers::pi;
  return std::exp(-lanczos_lgamma(z));
}

}  // namespace mellinop
