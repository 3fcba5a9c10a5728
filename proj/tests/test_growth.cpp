#include <cmath>
#include <sstream>

#include "doctest.h"
#include "growth_helpers.hpp"
#include "simplicial/error.hpp"
#include "simplicial/growth.hpp"
#include "simplicial/random.hpp"

using namespace simplicial;
using testing_support::earlier_neighbors;

TEST_CASE("no incoming nodes leaves the seed ring") {
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto g = generate_pa_tf({5, 5, m, 0.5, 99});
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == 5);
    for (NodeId v = 0; v < 5; ++v) {
      CHECK(g.degree(v) == 2);
      CHECK(g.has_edge(v, (v + 1) % 5));
    }
  }
}

TEST_CASE("every incoming node adds exactly m distinct edges") {
  for (std::size_t m : {1u, 2u, 3u, 5u}) {
    for (double pt : {0.0, 0.5, 1.0}) {
      const std::size_t n0 = std::max<std::size_t>(m, 3);
      const GrowthConfig cfg{800, n0, m, pt, 17 + m};
      const auto g = generate_pa_tf(cfg);
      CHECK(g.node_count() == 800);
      CHECK(g.edge_count() == seed_edge_count(n0) + m * (800 - n0));
      for (auto v = static_cast<NodeId>(n0); v < 800; ++v) CHECK(earlier_neighbors(g, v) == m);
    }
  }
}

TEST_CASE("small seeds") {
  CHECK(generate_pa_tf({50, 1, 1, 0.0, 1}).edge_count() == 49);
  CHECK(generate_pa_tf({50, 2, 2, 0.3, 1}).edge_count() == 1 + 2 * 48);
}

TEST_CASE("generation is deterministic in the seed") {
  const GrowthConfig cfg{3000, 3, 2, 0.4, 123456789};
  const auto a = generate_pa_tf(cfg);
  const auto b = generate_pa_tf(cfg);
  std::ostringstream ea;
  std::ostringstream eb;
  write_edge_list(ea, a);
  write_edge_list(eb, b);
  CHECK(ea.str() == eb.str());
  GrowthConfig other = cfg;
  other.seed = 987654321;
  std::ostringstream ec;
  write_edge_list(ec, generate_pa_tf(other));
  CHECK(ec.str() != ea.str());
}

TEST_CASE("preferential attachment draws proportionally to degree") {
  // Ring 0-1-2, node 3 picks one ring node, node 4 then sees degrees
  // 3 (node 3's target), 2, 2 and 1 (node 3): probabilities 3/8, 2/8, 2/8, 1/8.
  const int trials = 40000;
  int to_hub = 0;
  int to_newcomer = 0;
  for (int s = 0; s < trials; ++s) {
    const auto g = generate_pa_tf({5, 3, 1, 0.0, split_seed(2024, s)});
    const NodeId hub = g.neighbors(3).front();  // its ring target sorts first
    const NodeId target4 = g.neighbors(4).front();
    if (target4 == 3) ++to_newcomer;
    if (target4 == hub) ++to_hub;
  }
  const double p_new = static_cast<double>(to_newcomer) / trials;
  const double p_hub = static_cast<double>(to_hub) / trials;
  // 5 standard errors
  CHECK(std::abs(p_new - 0.125) < 5.0 * std::sqrt(0.125 * 0.875 / trials));
  CHECK(std::abs(p_hub - 0.375) < 5.0 * std::sqrt(0.375 * 0.625 / trials));
}

TEST_CASE("triad formation closes a triangle on every second edge at p_t = 1") {
  const auto g = generate_pa_tf({2000, 3, 2, 1.0, 5});
  for (NodeId v = 3; v < 2000; ++v) {
    const auto nb = g.neighbors(v);
    REQUIRE(earlier_neighbors(g, v) == 2);
    CHECK(g.has_edge(nb[0], nb[1]));
  }
}

TEST_CASE("clustering without and with triad formation") {
  int higher = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const double cc0 = average_clustering_coefficient(generate_pa_tf({2000, 3, 2, 0.0, split_seed(77, s)}));
    const double cc9 = average_clustering_coefficient(generate_pa_tf({2000, 3, 2, 0.9, split_seed(77, s)}));
    CHECK(cc0 < 0.05);
    if (cc9 > cc0) ++higher;
  }
  CHECK(higher == 10);
}

TEST_CASE("average clustering is non-decreasing in p_t on paired seeds") {
  double previous = -1.0;
  for (double pt : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
    double sum = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      sum += average_clustering_coefficient(generate_pa_tf({1500, 3, 2, pt, split_seed(5, s)}));
    }
    const double mean = sum / 10.0;
    CHECK(mean >= previous);
    previous = mean;
  }
}

TEST_CASE("invalid growth configurations") {
  CHECK_THROWS_AS(generate_pa_tf({10, 2, 3, 0.0, 0}), ConfigError);
  CHECK_THROWS_AS(generate_pa_tf({10, 3, 0, 0.0, 0}), ConfigError);
  CHECK_THROWS_AS(generate_pa_tf({2, 3, 1, 0.0, 0}), ConfigError);
  CHECK_THROWS_AS(generate_pa_tf({10, 3, 1, 1.5, 0}), ConfigError);
  CHECK_THROWS_AS(generate_pa_tf({10, 3, 1, -0.1, 0}), ConfigError);
}

TEST_CASE("derive_growth_config") {
  const auto dnc = derive_growth_config({1866, 4384, 0.21});
  CHECK(dnc.n == 1866);
  CHECK(dnc.m == 2);
  CHECK(dnc.n0 == 3);
  const auto enron = derive_growth_config({36265, 111179, 0.16});
  CHECK(enron.n == 36265);
  CHECK(enron.m == 3);
  CHECK(derive_growth_config({10, 4, 0.0}).m == 1);
  CHECK(derive_growth_config({100, 600, 0.0}).n0 == 6);
}

TEST_CASE("calibration endpoints and errors") {
  CalibrationOptions opts;
  opts.seed = 31;
  double cc0 = 0.0;
  for (std::size_t i = 0; i < opts.pilots; ++i) {
    cc0 += average_clustering_coefficient(generate_pa_tf({1000, 3, 2, 0.0, split_seed(opts.seed, i)}));
  }
  cc0 /= static_cast<double>(opts.pilots);
  const auto low = calibrate_pt(1000, 2, cc0, 0.005, opts);
  CHECK(low.p_t == 0.0);
  CHECK(low.achieved_cc == doctest::Approx(cc0).epsilon(1e-12));
  CHECK(low.iterations == 0);

  try {
    calibrate_pt(1000, 2, 0.99, 0.01, opts);
    FAIL("expected calibration to fail");
  } catch (const CalibrationError& e) {
    CHECK(e.max_achievable_cc() < 0.99);
    CHECK(e.max_achievable_cc() > 0.1);
  }
  CHECK_THROWS_AS(calibrate_pt(1000, 2, 0.2, 0.0, opts), ConfigError);
}

TEST_CASE("calibration hits an Email-DNC-sized target") {
  CalibrationOptions opts;
  opts.seed = 8;
  const auto r = calibrate_pt(1866, 2, 0.21, 0.02, opts);
  CHECK(r.achieved_cc >= 0.19);
  CHECK(r.achieved_cc <= 0.23);
  CHECK(r.iterations <= 20);
  CHECK(r.pilot_networks == 5);
  CHECK(calibration_json(r).find("\"pilot_networks\": 5") != std::string::npos);
}

TEST_CASE("degree distribution has a heavy tail at p_t = 0") {
  const std::size_t n = 10000;
  const auto g = generate_pa_tf({n, 3, 2, 0.0, 4242});
  const double slope = testing_support::ccdf_slope(g, 2, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
  CHECK(slope >= -3.5);
  CHECK(slope <= -1.5);
}
