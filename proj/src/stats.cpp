#include "simplicial/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "simplicial/error.hpp"

namespace simplicial {

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma needs x > 0");
  static constexpr std::array<double, 9> kCoefficients = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
    return std::log(std::numbers::pi / std::abs(std::sin(std::numbers::pi * x))) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double sum = kCoefficients[0];
  for (std::size_t i = 1; i < kCoefficients.size(); ++i) sum += kCoefficients[i] / (z + static_cast<double>(i));
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

namespace {

// Continued fraction for I_x(a, b), valid for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < eps) break;
  }
  return h;
}

// I_x(a, b) with y = 1 - x supplied separately so callers can pass a
// complement that was computed without cancellation.
double incomplete_beta_with_complement(double a, double b, double x, double y) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) return 1.0;
  const double log_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) + a * std::log(x) + b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, y) / b;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("incomplete_beta needs a, b > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete_beta needs x in [0, 1]");
  return incomplete_beta_with_complement(a, b, x, 1.0 - x);
}

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) throw DomainError("student_t_cdf needs df > 0");
  if (std::isnan(t)) return t;
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  if (t == 0.0) return 0.5;
  const double t2 = t * t;
  const double tail = 0.5 * incomplete_beta_with_complement(0.5 * df, 0.5, df / (df + t2), t2 / (df + t2));
  return t > 0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, double df) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("student_t_quantile needs p in (0, 1)");
  if (p == 0.5) return 0.0;
  double lo = -1.0;
  double hi = 1.0;
  while (student_t_cdf(lo, df) > p) lo *= 2.0;
  while (student_t_cdf(hi, df) < p) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (student_t_cdf(mid, df) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double student_t_critical(double alpha, double df) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  return student_t_quantile(1.0 - 0.5 * alpha, df);
}

TTestResult one_sample_t_test(std::span<const double> samples, double hypothesized_mean) {
  if (samples.size() < 2) throw DomainError("t-test needs at least two samples");
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= n;
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);

  // identical samples: mean and sd are exact, not merely roundoff-small
  const bool constant = std::all_of(samples.begin(), samples.end(), [&](double s) { return s == samples[0]; });
  if (constant) {
    mean = samples[0];
    ss = 0.0;
  }

  TTestResult r;
  r.df = samples.size() - 1;
  r.sample_mean = mean;
  r.sample_sd = std::sqrt(ss / (n - 1.0));
  if (constant) {
    if (mean == hypothesized_mean) {
      r.t_stat = 0.0;
      r.p_value = 1.0;
    } else {
      r.t_stat = mean > hypothesized_mean ? std::numeric_limits<double>::infinity()
                                          : -std::numeric_limits<double>::infinity();
      r.p_value = 0.0;
    }
  } else {
    r.t_stat = (mean - hypothesized_mean) / (r.sample_sd / std::sqrt(n));
    r.p_value = 2.0 * student_t_cdf(-std::abs(r.t_stat), static_cast<double>(r.df));
    r.p_value = std::min(1.0, r.p_value);
  }
  r.significant_at_99 = r.p_value < 0.01;
  return r;
}

}  // namespace simplicial
