#include "graphbench/sssp.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace graphbench {

namespace {

void check_weighted_nonneg(const CsrGraph& g) {
  if (!g.weighted()) throw std::logic_error("graph is unweighted");
  for (double w : g.weight_array())
    if (!(w >= 0.0)) throw std::invalid_argument("negative edge weight");
}

// atomic min on a double; returns true if this call lowered the value
bool atomic_min(std::atomic<double>& target, double value) {
  double cur = target.load(std::memory_order_relaxed);
  while (value < cur) {
    if (target.compare_exchange_weak(cur, value, std::memory_order_relaxed))
      return true;
  }
  return false;
}

}  // namespace

DistArray sssp(const CsrGraph& g, VertexId root, const SsspParams& params,
               unsigned workers) {
  check_weighted_nonneg(g);
  if (root >= g.num_vertices()) throw std::out_of_range("root out of range");
  if (!(params.delta > 0)) throw std::invalid_argument("delta must be > 0");
  const double delta = params.delta;
  const std::uint64_t n = g.num_vertices();
  const int nt = static_cast<int>(std::max(1u, workers));

  std::vector<std::atomic<double>> dist(n);
  for (auto& d : dist) d.store(kInfDist, std::memory_order_relaxed);
  dist[root].store(0.0, std::memory_order_relaxed);

  std::vector<std::vector<VertexId>> buckets(1);
  buckets[0].push_back(root);

  auto bucket_of = [&](double d) {
    return static_cast<std::size_t>(d / delta);
  };
  auto push = [&](std::vector<std::vector<VertexId>>& bs, std::size_t i,
                  VertexId v) {
    if (i >= bs.size()) bs.resize(i + 1);
    bs[i].push_back(v);
  };

  std::size_t cur = 0;
  while (cur < buckets.size()) {
    if (buckets[cur].empty()) {
      ++cur;
      continue;
    }
    std::vector<VertexId> settled;
    while (!buckets[cur].empty()) {
      std::vector<VertexId> frontier;
      frontier.swap(buckets[cur]);
      std::vector<std::vector<std::pair<std::size_t, VertexId>>> pending(nt);
#pragma omp parallel num_threads(nt)
      {
        int tid = omp_get_thread_num();
        auto& mine = pending[tid];
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(frontier.size());
             ++i) {
          VertexId u = frontier[i];
          double du = dist[u].load(std::memory_order_relaxed);
          if (bucket_of(du) != cur) continue;  // stale entry
          auto ns = g.neighbors(u);
          auto ws = g.edge_weights(u);
          for (std::size_t k = 0; k < ns.size(); ++k) {
            if (ws[k] >= delta) continue;  // light edges only
            double nd = du + ws[k];
            if (atomic_min(dist[ns[k]], nd))
              mine.emplace_back(bucket_of(nd), ns[k]);
          }
        }
      }
      for (VertexId u : frontier)
        if (bucket_of(dist[u].load(std::memory_order_relaxed)) == cur)
          settled.push_back(u);
      for (auto& mine : pending)
        for (auto [b, v] : mine)
          if (bucket_of(dist[v].load(std::memory_order_relaxed)) == b)
            push(buckets, b, v);
    }
    // heavy edges from everything settled in this bucket
    std::vector<std::vector<std::pair<std::size_t, VertexId>>> pending(nt);
#pragma omp parallel num_threads(nt)
    {
      int tid = omp_get_thread_num();
      auto& mine = pending[tid];
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(settled.size());
           ++i) {
        VertexId u = settled[i];
        double du = dist[u].load(std::memory_order_relaxed);
        auto ns = g.neighbors(u);
        auto ws = g.edge_weights(u);
        for (std::size_t k = 0; k < ns.size(); ++k) {
          if (ws[k] < delta) continue;
          double nd = du + ws[k];
          if (atomic_min(dist[ns[k]], nd))
            mine.emplace_back(bucket_of(nd), ns[k]);
        }
      }
    }
    for (auto& mine : pending)
      for (auto [b, v] : mine)
        if (bucket_of(dist[v].load(std::memory_order_relaxed)) == b)
          push(buckets, b, v);
    ++cur;
  }

  DistArray out;
  out.root = root;
  out.dist.resize(n);
  for (std::uint64_t v = 0; v < n; ++v)
    out.dist[v] = dist[v].load(std::memory_order_relaxed);
  return out;
}

DistArray sssp_oracle_dijkstra(const CsrGraph& g, VertexId root) {
  check_weighted_nonneg(g);
  if (root >= g.num_vertices()) throw std::out_of_range("root out of range");
  DistArray out;
  out.root = root;
  out.dist.assign(g.num_vertices(), kInfDist);
  out.dist[root] = 0.0;
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.emplace(0.0, root);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > out.dist[u]) continue;
    auto ns = g.neighbors(u);
    auto ws = g.edge_weights(u);
    for (std::size_t k = 0; k < ns.size(); ++k) {
      double nd = d + ws[k];
      if (nd < out.dist[ns[k]]) {
        out.dist[ns[k]] = nd;
        pq.emplace(nd, ns[k]);
      }
    }
  }
  return out;
}

DistArray sssp_oracle_bellman_ford(const CsrGraph& g, VertexId root) {
  check_weighted_nonneg(g);
  DistArray out;
  out.root = root;
  out.dist.assign(g.num_vertices(), kInfDist);
  out.dist[root] = 0.0;
  const std::uint64_t n = g.num_vertices();
  for (std::uint64_t round = 0; round + 1 < n || round == 0; ++round) {
    bool changed = false;
    for (VertexId u = 0; u < n; ++u) {
      if (out.dist[u] == kInfDist) continue;
      auto ns = g.neighbors(u);
      auto ws = g.edge_weights(u);
      for (std::size_t k = 0; k < ns.size(); ++k) {
        double nd = out.dist[u] + ws[k];
        if (nd < out.dist[ns[k]]) {
          out.dist[ns[k]] = nd;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return out;
}

}  // namespace graphbench
