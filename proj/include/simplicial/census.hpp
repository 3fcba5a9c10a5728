#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "simplicial/graph.hpp"

namespace simplicial {

/// Canonical triangle, a < b < c.
struct Triangle {
  NodeId a;
  NodeId b;
  NodeId c;
  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

enum class ComplexKind { S, T };

std::string_view to_string(ComplexKind kind);

/// Per-unit adjacency factors. For kind S the units are the graph's edges,
/// for kind T its triangles; `factors[i]` belongs to `edges[i]` or
/// `triangles[i]`. Units are sorted ascending.
struct AdjacencyCensus {
  ComplexKind kind = ComplexKind::S;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  std::vector<std::uint32_t> factors;

  std::size_t size() const noexcept { return factors.size(); }
  bool empty() const noexcept { return factors.empty(); }
};

/// Frequency distribution of adjacency factors. Zero-factor units count
/// toward the total, so freq sums to one over the full support.
struct DistributionSeries {
  std::vector<std::uint32_t> support;
  std::vector<std::uint64_t> counts;
  std::vector<double> freq;

  std::size_t size() const noexcept { return support.size(); }
  std::uint64_t total() const noexcept;
};

/// All triangles, each once, sorted.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// Number of triangles flanking edge (u, v): |N(u) ∩ N(v)|.
/// Throws DomainError if (u, v) is not an edge.
std::uint32_t s_adjacency_factor(const Graph& g, Edge e);

/// Number of outside nodes adjacent to exactly two corners of t. A node
/// adjacent to all three corners would close a quad with the central
/// triangle and does not count. Throws DomainError if t is not a triangle.
std::uint32_t t_adjacency_factor(const Graph& g, const Triangle& t);

/// Factor for every edge (S) or every triangle (T). `workers` = 0 picks the
/// hardware concurrency; output is identical for every worker count.
AdjacencyCensus census(const Graph& g, ComplexKind kind, unsigned workers = 1);

/// Throws DomainError on an empty census.
DistributionSeries to_distribution(const AdjacencyCensus& c);

/// "factor,count,freq" rows ascending by factor.
void write_distribution_csv(std::ostream& out, const DistributionSeries& series);
void write_distribution_csv_file(const std::filesystem::path& path, const DistributionSeries& series);
/// Accepts the format written above. The freq column is recomputed from
/// counts when present so the series invariants hold.
DistributionSeries read_distribution_csv(std::istream& in);
DistributionSeries read_distribution_csv_file(const std::filesystem::path& path);

/// "u,v,factor" (S) or "a,b,c,factor" (T).
void write_unit_factors_csv(std::ostream& out, const AdjacencyCensus& c);

}  // namespace simplicial
