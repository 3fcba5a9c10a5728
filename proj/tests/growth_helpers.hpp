#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "simplicial/graph.hpp"

namespace testing_support {

/// Least-squares slope of log10 P(K >= k) against log10 k for integer k in
/// [k_min, k_max].
inline double ccdf_slope(const simplicial::Graph& g, std::size_t k_min, std::size_t k_max) {
  const auto degrees = g.degree_sequence();
  const double n = static_cast<double>(degrees.size());
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    const auto at_least = std::count_if(degrees.begin(), degrees.end(), [k](std::size_t d) { return d >= k; });
    if (at_least == 0) break;
    xs.push_back(std::log10(static_cast<double>(k)));
    ys.push_back(std::log10(static_cast<double>(at_least) / n));
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

/// Neighbors of v with smaller id, i.e. the edges v created on arrival.
inline std::size_t earlier_neighbors(const simplicial::Graph& g, simplicial::NodeId v) {
  const auto nb = g.neighbors(v);
  return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
}

}  // namespace testing_support
