#pragma once

#include <limits>
#include <vector>

#include "graphbench/csr.hpp"

namespace graphbench {

inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

struct SsspParams {
  double delta = 1.0;  // bucket width
};

struct DistArray {
  std::vector<double> dist;  // +inf for unreachable
  VertexId root = 0;
};

/// Parallel delta-stepping; exact for non-negative weights, any delta > 0.
DistArray sssp(const CsrGraph& g, VertexId root, const SsspParams& params,
               unsigned workers);

/// Serial binary-heap Dijkstra, the verification reference for sssp.
DistArray sssp_oracle_dijkstra(const CsrGraph& g, VertexId root);

/// Serial Bellman-Ford, used to cross-check the Dijkstra oracle itself on
/// small graphs.
DistArray sssp_oracle_bellman_ford(const CsrGraph& g, VertexId root);

}  // namespace graphbench
