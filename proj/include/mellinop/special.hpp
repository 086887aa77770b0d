#pragma once

#include "mellinop/types.hpp"

namespace mellinop {

/// Gamma function on the complex plane (Lanczos, g = 7, with reflection).
/// Returns infinity at the poles 0, -1, -2, ...
Complex gamma(Complex z);

/// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

/// Principal log-gamma.
Complex lgamma(Complex z);

}  // namespace mellinop
