#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "simplicial/census.hpp"
#include "simplicial/error.hpp"
#include "simplicial/graph.hpp"

using namespace simplicial;

namespace {

IngestResult parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

}  // namespace

TEST_CASE("parse_edge_list collapses reversed duplicates") {
  const auto r = parse("1 2\n2 3\n2 1\n");
  CHECK(r.graph.node_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.report.duplicates_dropped == 1);
  CHECK(r.report.self_loops_dropped == 0);
  CHECK(r.report.lines_read == 3);
}

TEST_CASE("parse_edge_list drops self-loops and skips comments") {
  const auto r = parse("# c\n5 5\n5 6\n");
  CHECK(r.graph.node_count() == 2);
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.report.self_loops_dropped == 1);
  CHECK(r.report.nodes == 2);
  CHECK(r.report.edges == 1);
}

TEST_CASE("parse_edge_list ignores extra columns and accepts commas") {
  const auto r = parse("% header\n10 20 1234567 0.5\n20,30,9\n\n");
  CHECK(r.graph.node_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.original_labels == std::vector<std::uint64_t>{10, 20, 30});
}

TEST_CASE("parse_edge_list skips the MatrixMarket size line") {
  const auto r = parse("%%MatrixMarket matrix coordinate pattern symmetric\n% x\n3 3 2\n1 2\n2 3\n");
  CHECK(r.graph.node_count() == 3);
  CHECK(r.graph.edge_count() == 2);
}

TEST_CASE("parse_edge_list reports the offending line") {
  try {
    parse("1 2\n3 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse("1 2\n7\n"), ParseError);
  CHECK_THROWS_AS(parse("-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("1.5 2\n"), ParseError);
}

TEST_CASE("empty input gives an empty graph") {
  const auto r = parse("");
  CHECK(r.graph.empty());
  CHECK(r.graph.edge_count() == 0);
  CHECK_THROWS_AS(average_clustering_coefficient(r.graph), DomainError);
}

TEST_CASE("graph invariants hold on random inputs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::erdos_renyi(25, 0.3, seed);
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const auto nb = g.neighbors(v);
      degree_sum += nb.size();
      CHECK(std::adjacent_find(nb.begin(), nb.end(), std::greater_equal<>()) == nb.end());
      for (NodeId w : nb) {
        CHECK(w != v);
        CHECK(g.has_edge(w, v));
      }
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("line order does not change the parsed graph or its census") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::erdos_renyi(30, 0.25, 100 + trial);
    std::vector<std::string> lines;
    for (const auto& e : g.edges()) {
      // relabel so labels are sparse, and flip orientation at random
      const auto u = 1000 + 7 * e.u;
      const auto v = 1000 + 7 * e.v;
      lines.push_back(rng() % 2 ? std::to_string(u) + " " + std::to_string(v) : std::to_string(v) + " " + std::to_string(u));
    }
    std::string a;
    for (const auto& l : lines) a += l + "\n";
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string b;
    for (const auto& l : lines) b += l + "\n";
    const auto ga = parse(a).graph;
    const auto gb = parse(b).graph;
    CHECK(ga.edges() == gb.edges());
    CHECK(ga.degree_sequence() == gb.degree_sequence());
    CHECK(census(ga, ComplexKind::T).factors == census(gb, ComplexKind::T).factors);
  }
}

TEST_CASE("canonical writer round-trips counts and degrees") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = oracle::erdos_renyi(40, 0.1, seed);
    std::ostringstream out;
    write_edge_list(out, g);
    const auto back = parse(out.str()).graph;
    CHECK(back.edge_count() == g.edge_count());
    // isolated nodes are not representable in an edge list
    std::vector<std::size_t> d1;
    for (auto d : g.degree_sequence()) if (d > 0) d1.push_back(d);
    CHECK(back.degree_sequence() == d1);
  }
}

TEST_CASE("ingest report serializes every field") {
  const auto r = parse("1 2\n2 1\n3 3\n");
  const std::string json = ingest_report_json(r.report);
  CHECK(json.find("\"duplicates_dropped\": 1") != std::string::npos);
  CHECK(json.find("\"self_loops_dropped\": 1") != std::string::npos);
  CHECK(json.find("\"nodes\": 3") != std::string::npos);
}

TEST_CASE("local clustering coefficient on small graphs") {
  const auto k3 = oracle::complete(3);
  for (NodeId v = 0; v < 3; ++v) CHECK(local_clustering_coefficient(k3, v) == 1.0);
  const auto path = oracle::from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(local_clustering_coefficient(path, 1) == 0.0);
  CHECK(local_clustering_coefficient(path, 0) == 0.0);  // degree 1
  // hub 0 with neighbors {1,2,3} and a single edge 1-2
  const auto hub = oracle::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  CHECK(local_clustering_coefficient(hub, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(local_clustering_coefficient(hub, 4), DomainError);
}

TEST_CASE("average clustering coefficient") {
  CHECK(average_clustering_coefficient(oracle::complete(3)) == 1.0);
  CHECK(average_clustering_coefficient(oracle::from_pairs(3, {{0, 1}, {1, 2}})) == 0.0);
}

TEST_CASE("two clustering routes agree with the matrix oracle") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = oracle::erdos_renyi(25, 0.05 + 0.05 * static_cast<double>(seed % 10), seed);
    double sum = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const double expected = oracle::local_cc(g, v);
      const double got = local_clustering_coefficient(g, v);
      CHECK(got == doctest::Approx(expected).epsilon(1e-14));
      CHECK(got >= 0.0);
      CHECK(got <= 1.0);
      sum += expected;
    }
    CHECK(average_clustering_coefficient(g) == doctest::Approx(sum / g.node_count()).epsilon(1e-13));
  }
}
