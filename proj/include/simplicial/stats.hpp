#pragma once

#include <cstddef>
#include <span>

namespace simplicial {

/// ln Gamma(x) for x > 0 (Lanczos, g = 7).
double log_gamma(double x);

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
double incomplete_beta(double a, double b, double x);

/// Student's t CDF with df degrees of freedom, via the incomplete beta.
double student_t_cdf(double t, double df);

/// Inverse of student_t_cdf for p in (0, 1).
double student_t_quantile(double p, double df);

/// |t| beyond which a two-tailed test at level alpha rejects.
double student_t_critical(double alpha, double df);

struct TTestResult {
  double t_stat = 0.0;
  std::size_t df = 0;
  double p_value = 1.0;
  bool significant_at_99 = false;  ///< p_value < 0.01
  double sample_mean = 0.0;
  double sample_sd = 0.0;
};

/// Two-tailed one-sample t-test of `samples` against `hypothesized_mean`.
/// A zero-variance sample is significant (p = 0, t = +-inf) unless its mean
/// equals the hypothesis (t = 0, p = 1). Throws DomainError with fewer than
/// two samples.
TTestResult one_sample_t_test(std::span<const double> samples, double hypothesized_mean);

}  // namespace simplicial
