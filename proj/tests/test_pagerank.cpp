#include <doctest.h>

#include <cmath>
#include <vector>

#include "graphbench/csr.hpp"
#include "graphbench/datagen.hpp"
#include "graphbench/pagerank.hpp"

using namespace graphbench;

namespace {

// dense power iteration with the same update and stopping rule
struct DenseResult {
  std::vector<double> p;
  std::uint64_t iterations;
};

DenseResult dense_oracle(const CsrGraph& g, const PageRankParams& params) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (VertexId u = 0; u < n; ++u) {
    auto ns = g.neighbors(u);
    for (VertexId v : ns) m[v][u] += 1.0 / static_cast<double>(ns.size());
  }
  std::vector<double> p(n, 1.0 / n), next(n);
  std::uint64_t iters = 0;
  for (;;) {
    ++iters;
    double dangling = 0.0;
    for (VertexId u = 0; u < n; ++u)
      if (g.degree(u) == 0) dangling += p[u];
    for (std::size_t k = 0; k < n; ++k) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum += m[k][j] * p[j];
      next[k] = (1.0 - params.damping) / n +
                params.damping * (sum + dangling / n);
    }
    double l1 = 0.0;
    for (std::size_t k = 0; k < n; ++k) l1 += std::abs(next[k] - p[k]);
    p.swap(next);
    if (l1 < params.epsilon || iters >= params.max_iters) break;
  }
  return {p, iters};
}

}  // namespace

TEST_CASE("3-cycle is uniform after the first check") {
  EdgeList e;
  e.num_vertices = 3;
  e.directed = true;
  e.edges = {{0, 1}, {1, 2}, {2, 0}};
  CsrGraph g = build_csr(e);
  g.build_in_csr();
  RankVector r = pagerank(g, {}, 2);
  CHECK(r.converged);
  CHECK(r.iterations == 1);
  for (double p : r.p) CHECK(p == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("mutual pair splits evenly") {
  EdgeList e;
  e.num_vertices = 2;
  e.directed = true;
  e.edges = {{0, 1}, {1, 0}};
  CsrGraph g = build_csr(e);
  g.build_in_csr();
  RankVector r = pagerank(g, {}, 1);
  CHECK(r.converged);
  CHECK(r.p[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.p[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("star with dangling center matches dense oracle") {
  EdgeList e;
  e.num_vertices = 4;
  e.directed = true;
  e.edges = {{1, 0}, {2, 0}, {3, 0}};  // leaves point to a dangling center
  CsrGraph g = build_csr(e);
  g.build_in_csr();
  PageRankParams params;
  RankVector r = pagerank(g, params, 2);
  DenseResult o = dense_oracle(g, params);
  CHECK(r.converged);
  CHECK(r.iterations == o.iterations);
  for (std::size_t k = 0; k < r.p.size(); ++k)
    CHECK(r.p[k] == doctest::Approx(o.p[k]).epsilon(1e-10));
}

TEST_CASE("rank sum stays 1 and iterations are worker-invariant") {
  KroneckerSpec spec;
  spec.scale = 9;
  spec.seed = 61;
  CsrGraph g = build_csr(generate_kronecker(spec));
  PageRankParams params;
  params.epsilon = 1e-7;
  RankVector base = pagerank(g, params, 1);
  double sum = 0.0;
  for (double p : base.p) {
    CHECK(p >= 0.0);
    sum += p;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(base.converged);
  CHECK(base.final_l1_delta < params.epsilon);
  for (unsigned w : {2u, 4u, 7u}) {
    RankVector r = pagerank(g, params, w);
    CHECK(r.iterations == base.iterations);
    CHECK(r.converged);
  }
}

TEST_CASE("non-convergence is flagged, not fatal") {
  KroneckerSpec spec;
  spec.scale = 8;
  spec.seed = 9;
  CsrGraph g = build_csr(generate_kronecker(spec));
  PageRankParams params;
  params.max_iters = 2;
  RankVector r = pagerank(g, params, 2);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 2);
}

TEST_CASE("parameter validation") {
  EdgeList e;
  e.num_vertices = 1;
  CsrGraph g = build_csr(e);
  CHECK_THROWS_AS(pagerank(g, {.epsilon = 0.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(pagerank(g, {.damping = 1.0}, 1), std::invalid_argument);
}
