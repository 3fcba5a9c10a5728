#pragma once

// Brute-force and quadrature references used only by the tests. Nothing here
// calls into the routines it is used to check.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "simplicial/census.hpp"
#include "simplicial/graph.hpp"

namespace oracle {

using simplicial::Edge;
using simplicial::Graph;
using simplicial::NodeId;

inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph from_pairs(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) edges.push_back({u, static_cast<NodeId>((u + 1) % n)});
  return Graph::from_edges(n, edges);
}

/// Dense adjacency matrix built by scanning edge lists linearly.
struct Matrix {
  std::size_t n;
  std::vector<char> bits;
  explicit Matrix(const Graph& g) : n(g.node_count()), bits(n * n, 0) {
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v : g.neighbors(u)) bits[u * n + v] = 1;
    }
  }
  bool operator()(std::size_t u, std::size_t v) const { return bits[u * n + v] != 0; }
};

inline std::vector<simplicial::Triangle> all_triangles(const Graph& g) {
  Matrix adj(g);
  std::vector<simplicial::Triangle> out;
  for (NodeId a = 0; a < adj.n; ++a) {
    for (NodeId b = a + 1; b < adj.n; ++b) {
      for (NodeId c = b + 1; c < adj.n; ++c) {
        if (adj(a, b) && adj(a, c) && adj(b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

inline std::uint32_t s_factor(const Graph& g, NodeId u, NodeId v) {
  Matrix adj(g);
  std::uint32_t n = 0;
  for (NodeId w = 0; w < adj.n; ++w) n += (w != u && w != v && adj(u, w) && adj(v, w)) ? 1 : 0;
  return n;
}

/// Every outside node checked against the two-of-three rule.
inline std::uint32_t t_factor(const Graph& g, const simplicial::Triangle& t) {
  Matrix adj(g);
  std::uint32_t n = 0;
  for (NodeId w = 0; w < adj.n; ++w) {
    if (w == t.a || w == t.b || w == t.c) continue;
    const int touches = adj(w, t.a) + adj(w, t.b) + adj(w, t.c);
    if (touches == 2) ++n;
  }
  return n;
}

inline double local_cc(const Graph& g, NodeId v) {
  Matrix adj(g);
  std::vector<NodeId> nb;
  for (NodeId w = 0; w < adj.n; ++w) {
    if (adj(v, w)) nb.push_back(w);
  }
  if (nb.size() < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) links += adj(nb[i], nb[j]) ? 1 : 0;
  }
  return static_cast<double>(links) / (nb.size() * (nb.size() - 1) / 2.0);
}

/// Composite Simpson rule in long double.
template <class F>
long double simpson(F&& f, long double lo, long double hi, std::size_t intervals) {
  if (intervals % 2) ++intervals;
  const long double h = (hi - lo) / static_cast<long double>(intervals);
  long double sum = f(lo) + f(hi);
  for (std::size_t i = 1; i < intervals; ++i) sum += f(lo + h * static_cast<long double>(i)) * ((i % 2) ? 4.0L : 2.0L);
  return sum * h / 3.0L;
}

/// erfc by direct quadrature of its defining integral.
inline double erfc_quadrature(double x) {
  const long double lo = x;
  const long double hi = std::max<long double>(lo, 0.0L) + 12.0L;
  const long double integral = simpson([](long double t) { return std::exp(-t * t); }, lo, hi, 400000);
  return static_cast<double>(2.0L / std::sqrt(std::numbers::pi_v<long double>) * integral);
}

/// EMG as the convolution of an exponential with a Gaussian, by quadrature.
inline double emg_convolution(double x, double lambda, double mu, double sigma) {
  const long double upper = 40.0L / lambda;
  auto integrand = [&](long double y) {
    const long double z = (x - mu - y) / sigma;
    return lambda * std::exp(-lambda * y) * std::exp(-0.5L * z * z) /
           (sigma * std::sqrt(2.0L * std::numbers::pi_v<long double>));
  };
  return static_cast<double>(simpson(integrand, 0.0L, upper, 200000));
}

}  // namespace oracle
