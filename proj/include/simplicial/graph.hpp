#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace simplicial {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph over contiguous ids 0..n-1.
///
/// Immutable after construction: adjacency lists are strictly ascending,
/// symmetric, and free of self-loops. Safe for concurrent reads.
class Graph {
public:
  Graph() = default;

  /// Builds from an arbitrary edge list over ids < node_count. Self-loops and
  /// duplicates (in either orientation) are discarded silently; callers that
  /// need the tallies go through parse_edge_list.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  bool has_edge(NodeId u, NodeId v) const;

  /// Edges with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

enum class SeparatorPolicy {
  Whitespace,       ///< spaces and tabs only
  WhitespaceOrComma ///< also accepts CSV-style rows
};

struct IngestOptions {
  std::vector<std::string> comment_prefixes{"#", "%"};
  SeparatorPolicy separator = SeparatorPolicy::WhitespaceOrComma;
};

struct IngestReport {
  std::size_t lines_read = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

struct IngestResult {
  Graph graph;
  IngestReport report;
  /// original_labels[i] is the input label that became node i.
  std::vector<std::uint64_t> original_labels;
};

/// Reads a whitespace-separated edge list. The first two columns must be
/// nonnegative integers; further columns (timestamps, weights) are ignored.
/// Labels are remapped to 0..n-1 in ascending label order, so the result does
/// not depend on line order. A MatrixMarket banner ("%%MatrixMarket") causes
/// the first data line (the size header) to be skipped.
///
/// Throws ParseError carrying the 1-based line number on a malformed token.
IngestResult parse_edge_list(std::istream& in, const IngestOptions& options = {});
IngestResult read_edge_list_file(const std::filesystem::path& path,
                                 const IngestOptions& options = {});

/// Canonical form: one "u v" line per edge, u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

std::string ingest_report_json(const IngestReport& report);

/// gamma_v = |E(neighborhood)| / (k_v (k_v - 1) / 2); 0 when k_v < 2.
double local_clustering_coefficient(const Graph& g, NodeId v);

/// Mean of gamma_v over all nodes. Throws DomainError on an empty graph.
double average_clustering_coefficient(const Graph& g);

/// Number of triangles through each node.
std::vector<std::uint64_t> triangles_per_node(const Graph& g);

}  // namespace simplicial
