#include <doctest.h>

#include <random>

#include "graphbench/bfs.hpp"
#include "graphbench/datagen.hpp"
#include "graphbench/sssp.hpp"

using namespace graphbench;

namespace {

CsrGraph path3() {
  EdgeList e;
  e.num_vertices = 4;  // vertex 3 disconnected
  e.edges = {{0, 1}, {1, 2}};
  return build_csr(e);
}

CsrGraph kron_graph(int scale, std::uint64_t seed, bool weighted) {
  KroneckerSpec spec;
  spec.scale = scale;
  spec.seed = seed;
  EdgeList e = generate_kronecker(spec);
  if (weighted) assign_weights(e, seed + 1);
  return build_csr(e);
}

}  // namespace

TEST_CASE("bfs on path graph") {
  CsrGraph g = path3();
  for (auto mode : {BfsMode::kTopDown, BfsMode::kDirectionOptimizing}) {
    BfsParams p;
    p.mode = mode;
    ParentArray t = bfs(g, 0, p, 2);
    auto levels = levels_from_parents(t);
    CHECK(levels[0] == 0);
    CHECK(levels[1] == 1);
    CHECK(levels[2] == 2);
    CHECK(t.parent[3] == kUnreached);
    CHECK(validate_bfs_tree(g, 0, t).ok);
  }
}

TEST_CASE("bfs rejects bad roots") {
  CsrGraph g = path3();
  CHECK_THROWS_AS(bfs(g, 9, {}, 1), std::out_of_range);
  CHECK_THROWS_AS(bfs(g, 3, {}, 1), std::invalid_argument);  // degree 0
}

TEST_CASE("both modes match the serial oracle on kronecker graphs") {
  CsrGraph g = kron_graph(10, 21, false);
  RootSet rs = select_roots(g, 32, 5);
  for (VertexId root : rs.roots) {
    auto oracle = bfs_levels_oracle(g, root);
    BfsParams td, dob;
    td.mode = BfsMode::kTopDown;
    dob.mode = BfsMode::kDirectionOptimizing;
    auto lt = levels_from_parents(bfs(g, root, td, 3));
    auto lb = levels_from_parents(bfs(g, root, dob, 3));
    CHECK(lt == oracle);
    CHECK(lb == oracle);
  }
}

TEST_CASE("levels independent of worker count") {
  CsrGraph g = kron_graph(9, 2, false);
  RootSet rs = select_roots(g, 4, 5);
  for (VertexId root : rs.roots) {
    auto base = levels_from_parents(bfs(g, root, {}, 1));
    for (unsigned w : {2u, 4u, 8u})
      CHECK(levels_from_parents(bfs(g, root, {}, w)) == base);
  }
}

TEST_CASE("validator rejects a false second root") {
  CsrGraph g = path3();
  ParentArray t = bfs(g, 0, {}, 1);
  t.parent[2] = 2;
  auto v = validate_bfs_tree(g, 0, t);
  CHECK_FALSE(v.ok);
  CHECK(v.reason == "multiple roots");
}

TEST_CASE("validator catches random tree perturbations") {
  CsrGraph g = kron_graph(8, 13, false);
  RootSet rs = select_roots(g, 1, 3);
  VertexId root = rs.roots[0];
  ParentArray good = bfs(g, root, {}, 1);
  REQUIRE(validate_bfs_tree(g, root, good).ok);
  auto oracle = bfs_levels_oracle(g, root);

  std::mt19937_64 rng(55);
  int broken_caught = 0, perturbations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    ParentArray bad = good;
    VertexId v = static_cast<VertexId>(rng() % g.num_vertices());
    VertexId p = static_cast<VertexId>(rng() % g.num_vertices());
    if (v == root || bad.parent[v] == p) continue;
    bad.parent[v] = p;
    ++perturbations;
    // perturbation is harmless only if p is a neighbor one level up
    auto ns = g.in().neighbors(v);
    bool still_valid = bad.parent[v] != kUnreached &&
                       std::binary_search(ns.begin(), ns.end(), p) &&
                       oracle[p] + 1 == oracle[v];
    auto res = validate_bfs_tree(g, root, bad);
    if (!still_valid) {
      CHECK_FALSE(res.ok);
      ++broken_caught;
    }
  }
  CHECK(perturbations > 0);
  CHECK(broken_caught > 0);
}

TEST_CASE("sssp on weighted path") {
  EdgeList e;
  e.num_vertices = 4;
  e.edges = {{0, 1}, {1, 2}};
  e.weights = {0.5, 0.25};
  CsrGraph g = build_csr(e);
  DistArray d = sssp(g, 0, {}, 2);
  CHECK(d.dist[0] == 0.0);
  CHECK(d.dist[1] == doctest::Approx(0.5));
  CHECK(d.dist[2] == doctest::Approx(0.75));
  CHECK(d.dist[3] == kInfDist);
}

TEST_CASE("sssp input checks") {
  CsrGraph unweighted = path3();
  CHECK_THROWS_AS(sssp(unweighted, 0, {}, 1), std::logic_error);

  EdgeList e;
  e.num_vertices = 2;
  e.edges = {{0, 1}};
  e.weights = {0.5};
  CsrGraph g = build_csr(e);
  CHECK_THROWS_AS(sssp(g, 0, {.delta = 0.0}, 1), std::invalid_argument);
}

TEST_CASE("delta-stepping equals dijkstra for several deltas") {
  CsrGraph g = kron_graph(10, 44, true);
  RootSet rs = select_roots(g, 8, 6);
  for (VertexId root : rs.roots) {
    DistArray oracle = sssp_oracle_dijkstra(g, root);
    for (double delta : {0.1, 1.0, 10.0}) {
      DistArray d = sssp(g, root, {.delta = delta}, 3);
      REQUIRE(d.dist.size() == oracle.dist.size());
      for (std::size_t v = 0; v < d.dist.size(); ++v) {
        if (std::isinf(oracle.dist[v])) {
          CHECK(std::isinf(d.dist[v]));
        } else {
          CHECK(d.dist[v] ==
                doctest::Approx(oracle.dist[v]).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("dijkstra agrees with bellman-ford on small graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    EdgeList e;
    e.num_vertices = 64;
    e.directed = true;
    std::uniform_int_distribution<VertexId> v(0, 63);
    std::uniform_real_distribution<double> w(0.0, 1.0);
    for (int i = 0; i < 256; ++i) {
      e.edges.emplace_back(v(rng), v(rng));
      e.weights.push_back(w(rng));
    }
    CsrGraph g = build_csr(e);
    DistArray a = sssp_oracle_dijkstra(g, 0);
    DistArray b = sssp_oracle_bellman_ford(g, 0);
    for (std::size_t k = 0; k < a.dist.size(); ++k)
      CHECK(a.dist[k] == b.dist[k]);
  }
}
