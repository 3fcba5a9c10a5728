#include "simplicial/growth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <vector>

#include "json.hpp"
#include "simplicial/error.hpp"
#include "simplicial/random.hpp"

namespace simplicial {

namespace {

// Fenwick tree over integer weights; supports point assignment and
// inverse-prefix search.
class WeightTree {
public:
  explicit WeightTree(std::size_t size) : tree_(size + 1, 0), weight_(size, 0) {}

  void set(std::size_t i, std::uint64_t w) {
    const auto old = weight_[i];
    weight_[i] = w;
    if (w >= old) {
      add(i, w - old);
    } else {
      sub(i, old - w);
    }
  }
  std::uint64_t get(std::size_t i) const { return weight_[i]; }
  std::uint64_t total() const { return total_; }

  /// Smallest index whose inclusive prefix sum exceeds r (r < total()).
  std::size_t find(std::uint64_t r) const {
    std::size_t pos = 0;
    std::size_t step = std::bit_floor(tree_.size() - 1);
    for (; step > 0; step >>= 1) {
      if (pos + step < tree_.size() && tree_[pos + step] <= r) {
        pos += step;
        r -= tree_[pos];
      }
    }
    return pos;
  }

private:
  void add(std::size_t i, std::uint64_t d) {
    total_ += d;
    for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) tree_[k] += d;
  }
  void sub(std::size_t i, std::uint64_t d) {
    total_ -= d;
    for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) tree_[k] -= d;
  }

  std::vector<std::uint64_t> tree_;
  std::vector<std::uint64_t> weight_;
  std::uint64_t total_ = 0;
};

bool contains(const std::vector<NodeId>& list, NodeId x) {
  return std::find(list.begin(), list.end(), x) != list.end();
}

double mean_pilot_cc(std::size_t n, std::size_t n0, std::size_t m, double p_t,
                     const CalibrationOptions& options) {
  std::vector<double> cc(options.pilots, 0.0);
  auto run = [&](std::size_t i) {
    GrowthConfig cfg{n, n0, m, p_t, split_seed(options.seed, i)};
    cc[i] = average_clustering_coefficient(generate_pa_tf(cfg));
  };
  if (options.workers > 1) {
    std::vector<std::future<void>> jobs;
    for (std::size_t i = 0; i < options.pilots; ++i) jobs.push_back(std::async(std::launch::async, run, i));
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t i = 0; i < options.pilots; ++i) run(i);
  }
  double sum = 0.0;
  for (double c : cc) sum += c;  // fixed order keeps the mean bit-stable
  return sum / static_cast<double>(options.pilots);
}

}  // namespace

void GrowthConfig::validate() const {
  if (m < 1) throw ConfigError("m must be at least 1");
  if (n0 < m) throw ConfigError("seed size n0 (" + std::to_string(n0) + ") must be >= m (" + std::to_string(m) + ")");
  if (n < n0) throw ConfigError("n must be >= n0");
  if (!(p_t >= 0.0 && p_t <= 1.0)) throw ConfigError("p_t must lie in [0, 1]");
  if (n > static_cast<std::size_t>(UINT32_MAX)) throw ConfigError("n exceeds node id range");
}

std::size_t seed_edge_count(std::size_t n0) {
  if (n0 >= 3) return n0;
  return n0 == 2 ? 1 : 0;
}

Graph generate_pa_tf(const GrowthConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  std::vector<std::vector<NodeId>> adj(cfg.n);
  std::vector<Edge> edges;
  edges.reserve(seed_edge_count(cfg.n0) + cfg.m * (cfg.n - cfg.n0));

  auto link = [&](NodeId a, NodeId b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.push_back({a, b});
  };

  if (cfg.n0 == 2) {
    link(0, 1);
  } else if (cfg.n0 >= 3) {
    for (NodeId i = 0; i < cfg.n0; ++i) link(i, static_cast<NodeId>((i + 1) % cfg.n0));
  }

  WeightTree weights(cfg.n);
  for (NodeId i = 0; i < cfg.n0; ++i) weights.set(i, adj[i].size());

  // Nodes linked to v during its step are zeroed in the tree so PA draws only
  // eligible targets; their weights are restored with updated degrees after.
  std::vector<NodeId> linked;
  std::vector<NodeId> candidates;
  for (auto v = static_cast<NodeId>(cfg.n0); v < cfg.n; ++v) {
    linked.clear();
    bool have_pa_target = false;
    NodeId pa_target = 0;

    auto draw_pa = [&]() -> NodeId {
      if (weights.total() > 0) return static_cast<NodeId>(weights.find(rng.below(weights.total())));
      // only zero-degree nodes remain eligible (degenerate seeds): uniform
      for (;;) {
        const auto w = static_cast<NodeId>(rng.below(v));
        if (!contains(linked, w)) return w;
      }
    };

    for (std::size_t k = 0; k < cfg.m; ++k) {
      bool triad = false;
      NodeId target = 0;
      if (k > 0) {
        const bool coin = rng.uniform() < cfg.p_t;
        if (coin && have_pa_target) {
          candidates.clear();
          for (NodeId x : adj[pa_target]) {
            if (x != v && !contains(linked, x)) candidates.push_back(x);
          }
          if (!candidates.empty()) {
            target = candidates[rng.below(candidates.size())];
            triad = true;
          }
        }
      }
      if (!triad) {
        target = draw_pa();
        pa_target = target;
        have_pa_target = true;
      }
      link(v, target);
      linked.push_back(target);
      weights.set(target, 0);
    }
    for (NodeId x : linked) weights.set(x, adj[x].size());
    weights.set(v, adj[v].size());
  }
  return Graph::from_edges(cfg.n, edges);
}

GrowthConfig derive_growth_config(const RealNetworkStats& real) {
  GrowthConfig cfg;
  cfg.n = real.nodes;
  const double ratio = real.nodes == 0 ? 0.0 : static_cast<double>(real.edges) / static_cast<double>(real.nodes);
  cfg.m = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(ratio)));
  cfg.n0 = std::max<std::size_t>(cfg.m, 3);
  cfg.p_t = 0.0;
  return cfg;
}

CalibrationResult calibrate_pt(std::size_t n, std::size_t m, double target_cc, double tolerance,
                               const CalibrationOptions& options) {
  if (!(tolerance > 0.0)) throw ConfigError("calibration tolerance must be positive");
  if (options.pilots == 0) throw ConfigError("calibration needs at least one pilot network");
  if (!(target_cc >= 0.0 && target_cc <= 1.0)) throw ConfigError("target clustering coefficient must lie in [0, 1]");
  const std::size_t n0 = options.n0 == 0 ? std::max<std::size_t>(m, 3) : options.n0;
  GrowthConfig{n, n0, m, 0.0, 0}.validate();

  CalibrationResult result;
  result.pilot_networks = options.pilots;
  auto probe = [&](double p) { return mean_pilot_cc(n, n0, m, p, options); };
  auto accept = [&](double p, double cc) {
    result.p_t = p;
    result.achieved_cc = cc;
    return result;
  };

  const double cc_low = probe(0.0);
  if (std::abs(cc_low - target_cc) <= tolerance) return accept(0.0, cc_low);
  if (target_cc < cc_low) {
    throw CalibrationError("target clustering coefficient " + std::to_string(target_cc) +
                               " is below the p_t = 0 value " + std::to_string(cc_low),
                           cc_low);
  }
  const double cc_high = probe(1.0);
  if (std::abs(cc_high - target_cc) <= tolerance) return accept(1.0, cc_high);
  if (target_cc > cc_high) {
    throw CalibrationError("target clustering coefficient " + std::to_string(target_cc) +
                               " is unreachable; maximum achievable is " + std::to_string(cc_high),
                           cc_high);
  }

  double lo = 0.0;
  double hi = 1.0;
  for (unsigned it = 1; it <= options.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double cc = probe(mid);
    result.iterations = it;
    if (std::abs(cc - target_cc) <= tolerance) return accept(mid, cc);
    (cc < target_cc ? lo : hi) = mid;
  }
  throw CalibrationError("calibration did not reach tolerance within " + std::to_string(options.max_iterations) +
                             " iterations",
                         cc_high);
}

std::string calibration_json(const CalibrationResult& result) {
  nlohmann::ordered_json j;
  j["p_t"] = result.p_t;
  j["achieved_cc"] = result.achieved_cc;
  j["iterations"] = result.iterations;
  j["pilot_networks"] = result.pilot_networks;
  return j.dump(2);
}

}  // namespace simplicial
