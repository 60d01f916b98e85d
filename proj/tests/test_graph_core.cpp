#include <doctest.h>

#include <map>
#include <set>

#include "graphbench/csr.hpp"
#include "graphbench/datagen.hpp"

using namespace graphbench;

namespace {

// brute-force adjacency-map oracle over raw tuples
std::map<VertexId, std::set<VertexId>> adjacency_oracle(const EdgeList& e,
                                                        bool drop_loops) {
  std::map<VertexId, std::set<VertexId>> adj;
  for (auto [u, v] : e.edges) {
    if (drop_loops && u == v) continue;
    adj[u].insert(v);
    if (!e.directed) adj[v].insert(u);
  }
  return adj;
}

}  // namespace

TEST_CASE("path graph CSR layout") {
  EdgeList e;
  e.num_vertices = 3;
  e.edges = {{0, 1}, {1, 2}};
  CsrGraph g = build_csr(e);
  CHECK(g.offsets() == std::vector<std::uint64_t>{0, 1, 3, 4});
  CHECK(g.neighbor_array() == std::vector<VertexId>{1, 0, 2, 1});
  CHECK(g.degree(1) == 2);
}

TEST_CASE("empty edge list") {
  EdgeList e;
  e.num_vertices = 4;
  CsrGraph g = build_csr(e);
  CHECK(g.offsets() == std::vector<std::uint64_t>{0, 0, 0, 0, 0});
  CHECK(g.num_edges() == 0);
  CHECK(g.degree(3) == 0);
}

TEST_CASE("out-of-range endpoint rejected") {
  EdgeList e;
  e.num_vertices = 2;
  e.edges = {{0, 2}};
  CHECK_THROWS_AS(build_csr(e), std::invalid_argument);
}

TEST_CASE("degree bounds checked") {
  EdgeList e;
  e.num_vertices = 2;
  e.edges = {{0, 1}};
  CsrGraph g = build_csr(e);
  CHECK_THROWS_AS(g.degree(2), std::out_of_range);
}

TEST_CASE("dedupe keeps minimum weight") {
  EdgeList e;
  e.num_vertices = 2;
  e.directed = true;
  e.edges = {{0, 1}, {0, 1}, {0, 1}};
  e.weights = {0.7, 0.2, 0.9};
  CsrGraph g = build_csr(e, /*dedupe=*/true);
  REQUIRE(g.num_edges() == 1);
  CHECK(g.edge_weights(0)[0] == doctest::Approx(0.2));
}

TEST_CASE("self loops dropped or kept by flag") {
  EdgeList e;
  e.num_vertices = 2;
  e.edges = {{0, 0}, {0, 1}};
  CHECK(build_csr(e, true, true).num_edges() == 2);   // just 0-1 both ways
  CHECK(build_csr(e, true, false).num_edges() == 3);  // loop stored once
}

TEST_CASE("kronecker degree histogram matches adjacency oracle") {
  KroneckerSpec spec;
  spec.scale = 10;
  spec.seed = 7;
  EdgeList e = generate_kronecker(spec);
  CsrGraph g = build_csr(e, /*dedupe=*/true, /*drop_self_loops=*/true);
  auto adj = adjacency_oracle(e, true);
  std::map<std::uint64_t, std::uint64_t> hist_csr, hist_oracle;
  for (VertexId v = 0; v < g.num_vertices(); ++v) hist_csr[g.degree(v)]++;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto it = adj.find(v);
    hist_oracle[it == adj.end() ? 0 : it->second.size()]++;
  }
  CHECK(hist_csr == hist_oracle);
}

TEST_CASE("CSR invariants on generated graphs") {
  KroneckerSpec spec;
  spec.scale = 8;
  spec.seed = 3;
  EdgeList e = generate_kronecker(spec);
  CsrGraph g = build_csr(e);

  // offsets monotone, neighbors sorted, symmetric arcs
  std::uint64_t degree_sum = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto ns = g.neighbors(v);
    CHECK(std::is_sorted(ns.begin(), ns.end()));
    degree_sum += ns.size();
    for (VertexId u : ns) {
      auto back = g.neighbors(u);
      CHECK(std::binary_search(back.begin(), back.end(), v));
    }
  }
  CHECK(degree_sum == g.num_edges());
}

TEST_CASE("round trip: CSR arcs equal input multiset when clean") {
  EdgeList e;
  e.num_vertices = 5;
  e.directed = true;
  e.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {1, 4}};
  CsrGraph g = build_csr(e, false, false);
  std::multiset<std::pair<VertexId, VertexId>> in(e.edges.begin(),
                                                  e.edges.end());
  std::multiset<std::pair<VertexId, VertexId>> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId u : g.neighbors(v)) out.insert({v, u});
  CHECK(in == out);
}

TEST_CASE("construction is deterministic") {
  KroneckerSpec spec;
  spec.scale = 7;
  spec.seed = 11;
  EdgeList e = generate_kronecker(spec);
  CsrGraph a = build_csr(e);
  CsrGraph b = build_csr(e);
  CHECK(a.offsets() == b.offsets());
  CHECK(a.neighbor_array() == b.neighbor_array());
}

TEST_CASE("in-CSR mirrors arcs for directed graphs") {
  EdgeList e;
  e.num_vertices = 4;
  e.directed = true;
  e.edges = {{0, 1}, {2, 1}, {1, 3}};
  CsrGraph g = build_csr(e);
  CHECK_THROWS_AS(g.in(), std::logic_error);
  g.build_in_csr();
  auto in1 = g.in().neighbors(1);
  CHECK(std::vector<VertexId>(in1.begin(), in1.end()) ==
        std::vector<VertexId>{0, 2});
  CHECK(g.in().degree(3) == 1);
  CHECK(g.in().degree(0) == 0);
}
