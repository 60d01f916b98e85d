#include "graphbench/pagerank.hpp"

#include <cmath>
#include <stdexcept>

namespace graphbench {

namespace {

constexpr std::uint64_t kBlock = 4096;  // reduction granule, worker-invariant

}  // namespace

RankVector pagerank(const CsrGraph& g, const PageRankParams& params,
                    unsigned workers) {
  const std::uint64_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (!(params.epsilon > 0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(params.damping > 0 && params.damping < 1))
    throw std::invalid_argument("damping must be in (0,1)");
  const double d = params.damping;
  const CsrGraph& gin = g.in();
  const int nt = static_cast<int>(std::max(1u, workers));
  const std::uint64_t nblocks = (n + kBlock - 1) / kBlock;

  std::vector<double> rank(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  std::vector<double> contrib(n);
  std::vector<double> block_acc(nblocks);

  // per-block partials summed in block order keep reductions deterministic
  auto block_reduce = [&](auto&& per_vertex) {
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(nblocks);
         ++blk) {
      std::uint64_t lo = static_cast<std::uint64_t>(blk) * kBlock;
      std::uint64_t hi = std::min(lo + kBlock, n);
      double acc = 0.0;
      for (std::uint64_t v = lo; v < hi; ++v) acc += per_vertex(v);
      block_acc[blk] = acc;
    }
    double total = 0.0;
    for (std::uint64_t blk = 0; blk < nblocks; ++blk) total += block_acc[blk];
    return total;
  };

  RankVector out;
  for (std::uint64_t iter = 1; iter <= params.max_iters; ++iter) {
    double dangling = block_reduce(
        [&](std::uint64_t v) { return g.degree(static_cast<VertexId>(v)) == 0
                                          ? rank[v]
                                          : 0.0; });

#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
      std::uint64_t deg = g.degree(static_cast<VertexId>(v));
      contrib[v] = deg > 0 ? rank[v] / static_cast<double>(deg) : 0.0;
    }

    const double base = (1.0 - d) / static_cast<double>(n) +
                        d * dangling / static_cast<double>(n);
#pragma omp parallel for schedule(dynamic, 256) num_threads(nt)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
      double sum = 0.0;
      for (VertexId u : gin.neighbors(static_cast<VertexId>(v)))
        sum += contrib[u];
      next[v] = base + d * sum;
    }

    double l1 = block_reduce(
        [&](std::uint64_t v) { return std::abs(next[v] - rank[v]); });
    rank.swap(next);
    out.iterations = iter;
    out.final_l1_delta = l1;
    if (l1 < params.epsilon) {
      out.converged = true;
      break;
    }
  }
  out.p = std::move(rank);
  return out;
}

}  // namespace graphbench
