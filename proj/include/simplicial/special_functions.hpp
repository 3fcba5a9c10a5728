#pragma once

namespace simplicial {

/// Complementary error function, 2/sqrt(pi) * integral_x^inf exp(-t^2) dt.
/// Absolute error below 1e-14 on |x| <= 10.
double erfc(double x);

/// Scaled complementary error function exp(x^2) * erfc(x). Finite for all
/// x >= 0; use it wherever erfc would underflow against a growing exponential.
double erfcx(double x);

}  // namespace simplicial
