#include "graphbench/bfs.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <deque>

namespace graphbench {

namespace {

bool cas_parent(std::atomic<VertexId>* parents, VertexId v, VertexId expected,
                VertexId desired) {
  return parents[v].compare_exchange_strong(expected, desired,
                                            std::memory_order_relaxed);
}

}  // namespace

ParentArray bfs(const CsrGraph& g, VertexId root, const BfsParams& params,
                unsigned workers) {
  const std::uint64_t n = g.num_vertices();
  if (root >= n) throw std::out_of_range("root out of range");
  if (g.degree(root) == 0) throw std::invalid_argument("root has degree 0");
  if (params.alpha <= 0 || params.beta <= 0)
    throw std::invalid_argument("alpha and beta must be positive");
  const bool dobfs = params.mode == BfsMode::kDirectionOptimizing;
  const CsrGraph& gin = dobfs ? g.in() : g;

  std::vector<std::atomic<VertexId>> parent(n);
  for (auto& p : parent) p.store(kUnreached, std::memory_order_relaxed);
  parent[root].store(root, std::memory_order_relaxed);

  std::vector<VertexId> frontier{root};
  std::vector<std::uint8_t> front_bitmap, next_bitmap;
  bool bottom_up = false;
  // edges not yet claimed by the tree, drained as vertices are discovered
  std::uint64_t edges_to_check = g.num_edges() - g.degree(root);
  std::uint64_t frontier_edges = g.degree(root);

  const int nt = static_cast<int>(std::max(1u, workers));
  while (!frontier.empty()) {
    if (dobfs) {
      if (!bottom_up &&
          frontier_edges > edges_to_check / params.alpha) {
        bottom_up = true;
        front_bitmap.assign(n, 0);
        for (VertexId v : frontier) front_bitmap[v] = 1;
      } else if (bottom_up &&
                 frontier.size() < n / params.beta) {
        bottom_up = false;
      }
    }

    std::vector<VertexId> next;
    std::uint64_t next_edges = 0;
    if (bottom_up) {
      next_bitmap.assign(n, 0);
      std::uint64_t local_edges = 0;
#pragma omp parallel num_threads(nt) reduction(+ : local_edges)
      {
        std::vector<VertexId> mine;
#pragma omp for schedule(static)
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
          if (parent[v].load(std::memory_order_relaxed) != kUnreached)
            continue;
          for (VertexId u : gin.neighbors(static_cast<VertexId>(v))) {
            if (front_bitmap[u]) {
              parent[v].store(u, std::memory_order_relaxed);
              next_bitmap[v] = 1;
              mine.push_back(static_cast<VertexId>(v));
              local_edges += g.degree(static_cast<VertexId>(v));
              break;
            }
          }
        }
#pragma omp critical
        next.insert(next.end(), mine.begin(), mine.end());
      }
      next_edges = local_edges;
      front_bitmap.swap(next_bitmap);
    } else {
      std::uint64_t local_edges = 0;
#pragma omp parallel num_threads(nt) reduction(+ : local_edges)
      {
        std::vector<VertexId> mine;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(frontier.size());
             ++i) {
          VertexId u = frontier[i];
          for (VertexId v : g.neighbors(u)) {
            if (parent[v].load(std::memory_order_relaxed) == kUnreached &&
                cas_parent(parent.data(), v, kUnreached, u)) {
              mine.push_back(v);
              local_edges += g.degree(v);
            }
          }
        }
#pragma omp critical
        next.insert(next.end(), mine.begin(), mine.end());
      }
      next_edges = local_edges;
    }

    edges_to_check -= std::min(edges_to_check, next_edges);
    frontier_edges = next_edges;
    frontier.swap(next);
    // after a bottom-up step front_bitmap already holds the new frontier
    if (dobfs && !bottom_up) {
      front_bitmap.assign(n, 0);
      for (VertexId v : frontier) front_bitmap[v] = 1;
    }
  }

  ParentArray out;
  out.root = root;
  out.parent.resize(n);
  for (std::uint64_t v = 0; v < n; ++v)
    out.parent[v] = parent[v].load(std::memory_order_relaxed);
  return out;
}

std::vector<std::uint32_t> bfs_levels_oracle(const CsrGraph& g, VertexId root) {
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> level(g.num_vertices(), kInf);
  std::deque<VertexId> q{root};
  level[root] = 0;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    for (VertexId v : g.neighbors(u)) {
      if (level[v] == kInf) {
        level[v] = level[u] + 1;
        q.push_back(v);
      }
    }
  }
  return level;
}

std::vector<std::uint32_t> levels_from_parents(const ParentArray& parents) {
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = parents.parent.size();
  std::vector<std::uint32_t> level(n, kInf);
  level[parents.root] = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (parents.parent[v] == kUnreached || level[v] != kInf) continue;
    // walk to a resolved ancestor, then unwind
    std::vector<VertexId> chain;
    VertexId cur = static_cast<VertexId>(v);
    while (level[cur] == kInf && chain.size() <= n) {  // bounded: cycles stop
      chain.push_back(cur);
      VertexId p = parents.parent[cur];
      if (p == kUnreached || p == cur) break;  // broken or false root
      cur = p;
    }
    if (level[cur] == kInf) continue;  // unresolvable chain, caught by validate
    std::uint32_t base = level[cur];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      level[*it] = ++base;
  }
  return level;
}

BfsValidation validate_bfs_tree(const CsrGraph& g, VertexId root,
                                const ParentArray& parents) {
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  if (parents.parent.size() != g.num_vertices())
    return {false, "parent array size mismatch"};
  if (parents.root != root || parents.parent[root] != root)
    return {false, "root not its own parent"};

  for (std::uint64_t v = 0; v < g.num_vertices(); ++v) {
    VertexId p = parents.parent[v];
    if (p == kUnreached) continue;
    if (p == v && v != root) return {false, "multiple roots"};
    if (v != root) {
      auto ns = g.in().neighbors(static_cast<VertexId>(v));
      if (!std::binary_search(ns.begin(), ns.end(), p))
        return {false, "tree arc " + std::to_string(p) + "->" +
                           std::to_string(v) + " not in graph"};
    }
  }

  auto level = levels_from_parents(parents);
  auto oracle = bfs_levels_oracle(g, root);
  for (std::uint64_t v = 0; v < g.num_vertices(); ++v) {
    bool reached = parents.parent[v] != kUnreached;
    bool reachable = oracle[v] != kInf;
    if (reached != reachable)
      return {false, "reached set differs from reachable set at vertex " +
                         std::to_string(v)};
    if (reached && v != root) {
      VertexId p = parents.parent[v];
      if (level[p] == kInf || level[v] != level[p] + 1)
        return {false, "tree arc levels differ by != 1 at vertex " +
                           std::to_string(v)};
    }
  }

  // every graph arc u->v between reached vertices obeys level[v] <=
  // level[u] + 1; with the tree constraints this pins levels to true hop
  // distances
  for (std::uint64_t u = 0; u < g.num_vertices(); ++u) {
    if (level[u] == kInf) continue;
    for (VertexId v : g.neighbors(static_cast<VertexId>(u))) {
      if (level[v] == kInf) continue;
      if (level[v] > level[u] + 1)
        return {false, "arc " + std::to_string(u) + "->" + std::to_string(v) +
                           " spans more than one level"};
    }
  }
  return {true, ""};
}

}  // namespace graphbench
