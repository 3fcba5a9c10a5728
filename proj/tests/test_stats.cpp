#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "simplicial/error.hpp"
#include "simplicial/stats.hpp"

using namespace simplicial;

TEST_CASE("log gamma") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  for (double x = 0.1; x < 200.0; x *= 1.7) CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
}

TEST_CASE("incomplete beta against Boost") {
  for (double a : {0.5, 1.0, 2.5, 10.0, 250.0}) {
    for (double b : {0.5, 1.0, 3.0, 40.0}) {
      for (double x = 0.0; x <= 1.0; x += 0.05) {
        CHECK(std::abs(incomplete_beta(a, b, x) - boost::math::ibeta(a, b, x)) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(incomplete_beta(0.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(incomplete_beta(1.0, 1.0, 1.5), DomainError);
}

TEST_CASE("Student t CDF") {
  CHECK(student_t_cdf(0.0, 7) == 0.5);
  CHECK(student_t_cdf(1.0, 1) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(std::abs(student_t_cdf(3.2498, 9) - 0.995) < 1e-4);
  for (double df : {1.0, 2.0, 5.0, 9.0, 30.0, 200.0, 1000.0}) {
    boost::math::students_t dist(df);
    double previous = 0.0;
    for (double t = -40.0; t <= 40.0; t += 0.173) {
      const double got = student_t_cdf(t, df);
      CHECK(std::abs(got - boost::math::cdf(dist, t)) < 1e-10);
      CHECK(std::abs(student_t_cdf(-t, df) - (1.0 - got)) < 1e-14);
      CHECK(got >= previous);
      previous = got;
    }
  }
}

TEST_CASE("Student t approaches the normal for large df") {
  boost::math::normal z;
  for (double t = -4.0; t <= 4.0; t += 0.25) CHECK(std::abs(student_t_cdf(t, 200) - boost::math::cdf(z, t)) < 1e-3);
}

TEST_CASE("critical values") {
  CHECK(std::abs(student_t_critical(0.01, 9) - 3.2498) < 5e-4);
  CHECK(student_t_critical(0.01, 9) == doctest::Approx(3.2498355415921254).epsilon(1e-10));
  CHECK(student_t_critical(0.05, 1) == doctest::Approx(12.706204736174707).epsilon(1e-10));
  CHECK(student_t_quantile(0.5, 4) == 0.0);
}

TEST_CASE("one-sample t-test examples") {
  const std::vector<double> same(10, 4.2);
  const auto flat = one_sample_t_test(same, 4.2);
  CHECK(flat.t_stat == 0.0);
  CHECK(flat.p_value == 1.0);
  CHECK_FALSE(flat.significant_at_99);

  std::vector<double> ten;
  for (int i = 1; i <= 10; ++i) ten.push_back(i);
  const auto r = one_sample_t_test(ten, 0.0);
  CHECK(r.df == 9);
  CHECK(r.sample_mean == 5.5);
  CHECK(r.sample_sd == doctest::Approx(3.0276503540974917).epsilon(1e-14));
  CHECK(std::abs(r.t_stat - 5.745) < 1e-3);
  CHECK(r.p_value < 0.001);
  CHECK(r.p_value == doctest::Approx(0.00027819601104818546).epsilon(1e-8));
  CHECK(r.significant_at_99);

  const auto zero_var = one_sample_t_test(same, 0.0);
  CHECK(zero_var.p_value == 0.0);
  CHECK(std::isinf(zero_var.t_stat));
  CHECK(zero_var.significant_at_99);

  CHECK_THROWS_AS(one_sample_t_test(std::vector<double>{1.0}, 0.0), DomainError);
}

TEST_CASE("t-test shift and reflection properties") {
  const std::vector<double> xs{0.3, 0.9, 1.4, 0.2, 0.8, 1.1, 0.5};
  const auto base = one_sample_t_test(xs, 0.4);
  std::vector<double> shifted;
  std::vector<double> reflected;
  for (double x : xs) {
    shifted.push_back(x + 17.0);
    reflected.push_back(-x);
  }
  const auto s = one_sample_t_test(shifted, 17.4);
  CHECK(s.p_value == doctest::Approx(base.p_value).epsilon(1e-9));
  const auto r = one_sample_t_test(reflected, -0.4);
  CHECK(r.t_stat == doctest::Approx(-base.t_stat).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(base.p_value).epsilon(1e-12));
}
