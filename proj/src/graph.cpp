#include "simplicial/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "json.hpp"
#include "simplicial/error.hpp"
#include "simplicial/triangle_scan.hpp"

namespace simplicial {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(node_count);
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw DomainError("edge endpoint out of range");
    }
    if (e.u == e.v) continue;
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  std::size_t total = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.shrink_to_fit();
    total += list.size();
  }
  g.edge_count_ = total / 2;
  return g;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  if (v >= adjacency_.size()) throw DomainError("invalid node id " + std::to_string(v));
  return adjacency_[v];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nu = neighbors(u);
  auto nv = neighbors(v);
  // search the shorter list
  if (nv.size() < nu.size()) return std::binary_search(nv.begin(), nv.end(), u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d;
  d.reserve(adjacency_.size());
  for (const auto& list : adjacency_) d.push_back(list.size());
  return d;
}

namespace {

bool is_separator(char c, SeparatorPolicy policy) {
  if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') return true;
  return policy == SeparatorPolicy::WhitespaceOrComma && (c == ',' || c == ';');
}

// Splits off up to two leading tokens; returns how many were found.
int leading_tokens(std::string_view line, SeparatorPolicy policy, std::string_view out[2]) {
  int found = 0;
  std::size_t i = 0;
  while (found < 2) {
    while (i < line.size() && is_separator(line[i], policy)) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_separator(line[j], policy)) ++j;
    out[found++] = line.substr(i, j - i);
    i = j;
  }
  return found;
}

std::uint64_t parse_label(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a nonnegative integer node label, got '" +
                                  std::string(token) + "'");
  }
  return value;
}

std::string_view trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

}  // namespace

IngestResult parse_edge_list(std::istream& in, const IngestOptions& options) {
  IngestResult result;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::vector<std::uint64_t> labels;

  std::string line;
  std::size_t line_no = 0;
  bool matrix_market = false;
  bool skipped_size_line = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim_left(line);
    if (line_no == 1 && view.starts_with("%%MatrixMarket")) matrix_market = true;
    if (view.empty() || view == "\r") continue;
    bool comment = false;
    for (const auto& prefix : options.comment_prefixes) {
      if (!prefix.empty() && view.starts_with(prefix)) {
        comment = true;
        break;
      }
    }
    if (comment) continue;
    if (matrix_market && !skipped_size_line) {
      skipped_size_line = true;
      continue;
    }
    ++result.report.lines_read;

    std::string_view tokens[2];
    if (leading_tokens(view, options.separator, tokens) < 2) {
      throw ParseError(line_no, "expected at least two columns");
    }
    const auto a = parse_label(tokens[0], line_no);
    const auto b = parse_label(tokens[1], line_no);
    labels.push_back(a);
    labels.push_back(b);
    if (a == b) {
      ++result.report.self_loops_dropped;
      continue;
    }
    raw.emplace_back(std::min(a, b), std::max(a, b));
  }

  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::unordered_map<std::uint64_t, NodeId> dense;
  dense.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) dense.emplace(labels[i], static_cast<NodeId>(i));

  std::sort(raw.begin(), raw.end());
  const auto unique_end = std::unique(raw.begin(), raw.end());
  result.report.duplicates_dropped = static_cast<std::size_t>(raw.end() - unique_end);
  raw.erase(unique_end, raw.end());

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) edges.push_back({dense.at(a), dense.at(b)});

  result.graph = Graph::from_edges(labels.size(), edges);
  result.original_labels = std::move(labels);
  result.report.nodes = result.graph.node_count();
  result.report.edges = result.graph.edge_count();
  return result;
}

IngestResult read_edge_list_file(const std::filesystem::path& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edge list '" + path.string() + "'");
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_edge_list(out, g);
}

std::string ingest_report_json(const IngestReport& report) {
  nlohmann::ordered_json j;
  j["lines_read"] = report.lines_read;
  j["self_loops_dropped"] = report.self_loops_dropped;
  j["duplicates_dropped"] = report.duplicates_dropped;
  j["nodes"] = report.nodes;
  j["edges"] = report.edges;
  return j.dump(2);
}

double local_clustering_coefficient(const Graph& g, NodeId v) {
  const auto nv = g.neighbors(v);
  const std::size_t k = nv.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto ni = g.neighbors(nv[i]);
    // count neighbors of nv[i] that are also neighbors of v and come after it
    auto a = std::upper_bound(ni.begin(), ni.end(), nv[i]);
    auto b = nv.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    while (a != ni.end() && b != nv.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++links;
        ++a;
        ++b;
      }
    }
  }
  return static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
}

std::vector<std::uint64_t> triangles_per_node(const Graph& g) {
  std::vector<std::uint64_t> count(g.node_count(), 0);
  for_each_triangle(g, [&](NodeId a, NodeId b, NodeId c) {
    ++count[a];
    ++count[b];
    ++count[c];
  });
  return count;
}

double average_clustering_coefficient(const Graph& g) {
  if (g.empty()) throw DomainError("average clustering coefficient of an empty graph");
  const auto tri = triangles_per_node(g);
  double sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double k = static_cast<double>(g.degree(v));
    if (k >= 2) sum += static_cast<double>(tri[v]) / (k * (k - 1) / 2.0);
  }
  return sum / static_cast<double>(g.node_count());
}

}  // namespace simplicial
