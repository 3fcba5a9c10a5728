#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "simplicial/graph.hpp"

namespace simplicial {

/// Calls visit(a, b, c) once per triangle, with a < b < c, using the
/// degree-ordered forward algorithm (O(m^{3/2})). Visit order is
/// deterministic but not sorted.
template <class Visitor>
void for_each_triangle(const Graph& g, Visitor&& visit) {
  const std::size_t n = g.node_count();
  // rank by (degree, id); edges are oriented from lower to higher rank
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
    const auto dx = g.degree(x);
    const auto dy = g.degree(y);
    return dx != dy ? dx < dy : x < y;
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<std::vector<NodeId>> forward(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId w : g.neighbors(u)) {
      if (rank[u] < rank[w]) forward[u].push_back(w);
    }
    // neighbors() is id-sorted, so forward lists are too
  }

  for (NodeId u = 0; u < n; ++u) {
    const auto& fu = forward[u];
    for (NodeId v : fu) {
      const auto& fv = forward[v];
      auto i = fu.begin();
      auto j = fv.begin();
      while (i != fu.end() && j != fv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          NodeId t[3] = {u, v, *i};
          std::sort(t, t + 3);
          visit(t[0], t[1], t[2]);
          ++i;
          ++j;
        }
      }
    }
  }
}

}  // namespace simplicial
