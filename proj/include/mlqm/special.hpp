#pragma once

#include "mlqm/quadrature.hpp"

namespace mlqm::sf {

/// Error function.  Power series below |x| = 3, scaled-complement continued
/// fraction beyond; relative error stays below 1e-14 for |x| <= 6.
double erf(double x);

/// Complementary error function 1 - erf(x), computed without cancellation.
double erfc(double x);

/// Scaled complement exp(x^2) erfc(x); finite for all x >= 0.
double erfcx(double x);

/// Dawson integral D(x) = exp(-x^2) * int_0^x exp(t^2) dt.
double dawson(double x);

/// Imaginary error function (2/sqrt(pi)) int_0^x exp(t^2) dt.  Grows like
/// exp(x^2); arguments beyond erfi_overflow_threshold() raise OverflowError.
double erfi(double x);

/// exp(-x^2) erfi(x), bounded for all real x.
double erfi_scaled(double x);

/// Largest |x| accepted by erfi: sqrt(log(DBL_MAX) - 10).
double erfi_overflow_threshold();

/// Whittaker function W_{-3/4,-3/4}(z) for z > 0, via the real integral
/// representation
///   W(z) = (2 exp(-z/2) z^{-1/4} / sqrt(pi)) int_0^inf exp(-z v^2) / (1+v^2)^2 dv
/// (the t = z v^2 substitution of the standard Gamma(1/2) form).
/// Small-z behaviour: W(z) ~ sqrt(pi/4) z^{-1/4}.
double whittaker_w34(double z);

} // namespace mlqm::sf
