#include "simplicial/census.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "simplicial/error.hpp"
#include "simplicial/text_format.hpp"
#include "simplicial/triangle_scan.hpp"

namespace simplicial {

std::string_view to_string(ComplexKind kind) { return kind == ComplexKind::S ? "S" : "T"; }

std::uint64_t DistributionSeries::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for_each_triangle(g, [&](NodeId a, NodeId b, NodeId c) { out.push_back({a, b, c}); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Fn>
void for_each_common(std::span<const NodeId> x, std::span<const NodeId> y, Fn&& fn) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      fn(*i);
      ++i;
      ++j;
    }
  }
}

std::uint32_t common_count(const Graph& g, NodeId u, NodeId v) {
  std::uint32_t n = 0;
  for_each_common(g.neighbors(u), g.neighbors(v), [&](NodeId) { ++n; });
  return n;
}

// Outside nodes adjacent to x and y but not to z.
std::uint32_t flank_count(const Graph& g, NodeId x, NodeId y, NodeId z) {
  std::uint32_t n = 0;
  const auto nz = g.neighbors(z);
  for_each_common(g.neighbors(x), g.neighbors(y), [&](NodeId w) {
    if (w != z && !std::binary_search(nz.begin(), nz.end(), w)) ++n;
  });
  return n;
}

std::uint32_t t_factor_unchecked(const Graph& g, const Triangle& t) {
  return flank_count(g, t.a, t.b, t.c) + flank_count(g, t.a, t.c, t.b) + flank_count(g, t.b, t.c, t.a);
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || count < 1024) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

}  // namespace

std::uint32_t s_adjacency_factor(const Graph& g, Edge e) {
  if (e.u == e.v || !g.has_edge(e.u, e.v)) {
    throw DomainError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  return common_count(g, e.u, e.v);
}

std::uint32_t t_adjacency_factor(const Graph& g, const Triangle& t) {
  NodeId v[3] = {t.a, t.b, t.c};
  std::sort(v, v + 3);
  const Triangle canon{v[0], v[1], v[2]};
  if (canon.a == canon.b || canon.b == canon.c || !g.has_edge(canon.a, canon.b) ||
      !g.has_edge(canon.a, canon.c) || !g.has_edge(canon.b, canon.c)) {
    throw DomainError("not a triangle of the graph");
  }
  return t_factor_unchecked(g, canon);
}

AdjacencyCensus census(const Graph& g, ComplexKind kind, unsigned workers) {
  AdjacencyCensus c;
  c.kind = kind;
  if (kind == ComplexKind::S) {
    c.edges = g.edges();
    c.factors.resize(c.edges.size());
    parallel_for(c.edges.size(), workers,
                 [&](std::size_t i) { c.factors[i] = common_count(g, c.edges[i].u, c.edges[i].v); });
  } else {
    c.triangles = enumerate_triangles(g);
    c.factors.resize(c.triangles.size());
    parallel_for(c.triangles.size(), workers,
                 [&](std::size_t i) { c.factors[i] = t_factor_unchecked(g, c.triangles[i]); });
  }
  return c;
}

DistributionSeries to_distribution(const AdjacencyCensus& c) {
  if (c.empty()) throw DomainError("empty census has no distribution");
  std::map<std::uint32_t, std::uint64_t> histogram;
  for (auto f : c.factors) ++histogram[f];
  DistributionSeries s;
  const double total = static_cast<double>(c.size());
  for (const auto& [factor, count] : histogram) {
    s.support.push_back(factor);
    s.counts.push_back(count);
    s.freq.push_back(static_cast<double>(count) / total);
  }
  return s;
}

void write_distribution_csv(std::ostream& out, const DistributionSeries& series) {
  out << "factor,count,freq\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << series.support[i] << ',' << series.counts[i] << ',' << format_real(series.freq[i]) << '\n';
  }
}

void write_distribution_csv_file(const std::filesystem::path& path, const DistributionSeries& series) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_distribution_csv(out, series);
}

DistributionSeries read_distribution_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::map<std::uint32_t, std::uint64_t> histogram;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with('#')) continue;
    if (line_no == 1 && line.starts_with("factor")) continue;
    std::istringstream row(line);
    std::string factor_tok;
    std::string count_tok;
    if (!std::getline(row, factor_tok, ',') || !std::getline(row, count_tok, ',')) {
      throw ParseError(line_no, "expected factor,count,freq");
    }
    try {
      std::size_t used = 0;
      const auto factor = std::stoul(factor_tok, &used);
      if (used != factor_tok.size()) throw std::invalid_argument(factor_tok);
      const auto count = std::stoull(count_tok, &used);
      if (used != count_tok.size()) throw std::invalid_argument(count_tok);
      if (factor_tok.starts_with('-') || count_tok.starts_with('-')) throw std::invalid_argument("negative");
      if (count == 0) continue;
      histogram[static_cast<std::uint32_t>(factor)] += count;
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "malformed distribution row '" + line + "'");
    }
  }
  if (histogram.empty()) throw DataError("distribution file has no rows");
  DistributionSeries s;
  std::uint64_t total = 0;
  for (const auto& [f, n] : histogram) total += n;
  for (const auto& [f, n] : histogram) {
    s.support.push_back(f);
    s.counts.push_back(n);
    s.freq.push_back(static_cast<double>(n) / static_cast<double>(total));
  }
  return s;
}

DistributionSeries read_distribution_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_distribution_csv(in);
}

void write_unit_factors_csv(std::ostream& out, const AdjacencyCensus& c) {
  if (c.kind == ComplexKind::S) {
    out << "u,v,factor\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
      out << c.edges[i].u << ',' << c.edges[i].v << ',' << c.factors[i] << '\n';
    }
  } else {
    out << "a,b,c,factor\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& t = c.triangles[i];
      out << t.a << ',' << t.b << ',' << t.c << ',' << c.factors[i] << '\n';
    }
  }
}

}  // namespace simplicial
