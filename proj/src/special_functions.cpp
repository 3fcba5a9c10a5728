#include "simplicial/special_functions.hpp"

#include <cmath>
#include <numbers>

namespace simplicial {

namespace {

constexpr double kSeriesLimit = 2.5;

// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n (2x^2)^n x / (1*3*...*(2n+1)); every
// term is positive, so there is no cancellation.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= 2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x2) * sum;
}

// exp(x^2) erfc(x) for x >= kSeriesLimit via the Laplace continued fraction
// x + (1/2)/(x + 1/(x + (3/2)/(x + ...))), evaluated with modified Lentz.
double erfcx_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 1000; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / (std::sqrt(std::numbers::pi) * f);
}

double erfc_nonnegative(double x) {
  if (x < kSeriesLimit) return 1.0 - erf_series(x);
  if (x > 27.3) return 0.0;
  return erfcx_continued_fraction(x) * std::exp(-x * x);
}

double erfcx_nonnegative(double x) {
  if (x < kSeriesLimit) return std::exp(x * x) * (1.0 - erf_series(x));
  return erfcx_continued_fraction(x);
}

}  // namespace

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - erfc_nonnegative(-x);
  return erfc_nonnegative(x);
}

double erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) {
    if (x < -26.6) return HUGE_VAL;
    return 2.0 * std::exp(x * x) - erfcx_nonnegative(-x);
  }
  return erfcx_nonnegative(x);
}

}  // namespace simplicial
