#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "simplicial/graph.hpp"

namespace simplicial {

/// Parameters of scale-free growth with triad formation.
struct GrowthConfig {
  std::size_t n = 0;   ///< final node count
  std::size_t n0 = 3;  ///< seed ring size
  std::size_t m = 1;   ///< edges per incoming node
  double p_t = 0.0;    ///< triad-formation probability
  std::uint64_t seed = 0;

  /// Throws ConfigError unless n0 >= m >= 1, n >= n0 and p_t in [0, 1].
  void validate() const;
};

/// Edges in the seed topology: a cycle on n0 nodes (one edge for n0 = 2,
/// none for n0 = 1).
std::size_t seed_edge_count(std::size_t n0);

/// Grows a network node by node. Each incoming node v receives exactly m
/// distinct edges. The first is a preferential-attachment (PA) edge to a node
/// drawn with probability proportional to degree among nodes not yet linked to
/// v. Before every further edge a coin with probability p_t decides whether it
/// is a triad-formation (TF) edge: v links to a uniformly chosen neighbor of
/// the most recent PA target that v is not yet adjacent to. When no such
/// neighbor exists, or the coin fails, the edge is a PA edge instead.
///
/// Deterministic in cfg.seed.
Graph generate_pa_tf(const GrowthConfig& cfg);

struct RealNetworkStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double avg_cc = 0.0;
};

/// n = nodes, m = max(1, round(edges / nodes)), n0 = max(m, 3). p_t is left
/// at zero for calibrate_pt to fill in.
GrowthConfig derive_growth_config(const RealNetworkStats& real);

struct CalibrationOptions {
  std::size_t n0 = 0;  ///< 0 selects max(m, 3)
  std::size_t pilots = 5;
  unsigned max_iterations = 20;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct CalibrationResult {
  double p_t = 0.0;
  double achieved_cc = 0.0;
  unsigned iterations = 0;  ///< bisection midpoints probed
  std::size_t pilot_networks = 0;
};

/// Bisection on p_t over [0, 1] until the mean average clustering coefficient
/// of `pilots` networks (same pilot seeds at every probe) lies within
/// `tolerance` of `target_cc`. Throws CalibrationError when the target lies
/// outside the achievable range or bisection runs out of iterations.
CalibrationResult calibrate_pt(std::size_t n, std::size_t m, double target_cc, double tolerance,
                               const CalibrationOptions& options = {});

std::string calibration_json(const CalibrationResult& result);

}  // namespace simplicial
