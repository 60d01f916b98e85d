#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphbench {

using VertexId = std::uint32_t;

/// Raw edge tuples held in RAM. May contain duplicates and self-loops;
/// normalization happens in build_csr.
struct EdgeList {
  std::uint64_t num_vertices = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<double> weights;  // empty = unweighted; else one per edge
  bool directed = false;

  bool weighted() const { return !weights.empty(); }
  std::uint64_t num_edges() const { return edges.size(); }

  void validate() const {
    for (const auto& [u, v] : edges) {
      if (u >= num_vertices || v >= num_vertices)
        throw std::invalid_argument("edge endpoint exceeds vertex count");
    }
    if (!weights.empty()) {
      if (weights.size() != edges.size())
        throw std::invalid_argument("weight count does not match edge count");
      for (double w : weights)
        if (!(w >= 0.0))
          throw std::invalid_argument("negative or NaN edge weight");
    }
  }
};

}  // namespace graphbench
