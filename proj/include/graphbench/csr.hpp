#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "graphbench/edge_list.hpp"

namespace graphbench {

/// Immutable compressed-sparse-row graph. Neighbor lists are sorted
/// ascending; all arrays are frozen after construction and safe to share
/// across threads. For directed graphs an incoming-arc mirror can be
/// attached once (before the graph is shared) via build_in_csr().
class CsrGraph {
 public:
  std::uint64_t num_vertices() const { return offsets_.size() - 1; }
  std::uint64_t num_edges() const { return neighbors_.size(); }
  bool directed() const { return directed_; }
  bool weighted() const { return !weights_.empty(); }

  std::uint64_t degree(VertexId v) const {
    if (v >= num_vertices())
      throw std::out_of_range("vertex id out of range");
    return offsets_[v + 1] - offsets_[v];
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  std::span<const double> edge_weights(VertexId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }

  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  const std::vector<VertexId>& neighbor_array() const { return neighbors_; }
  const std::vector<double>& weight_array() const { return weights_; }

  /// Incoming-arc CSR. For undirected graphs this is the graph itself.
  /// Directed graphs must call build_in_csr() first.
  const CsrGraph& in() const {
    if (!directed_) return *this;
    if (!in_csr_) throw std::logic_error("in-CSR not built for directed graph");
    return *in_csr_;
  }
  bool has_in_csr() const { return !directed_ || in_csr_ != nullptr; }

  /// Builds the incoming-arc mirror. Call before sharing the graph; the
  /// harness includes this in construction time.
  void build_in_csr();

  friend CsrGraph build_csr(const EdgeList& edges, bool dedupe,
                            bool drop_self_loops);

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<double> weights_;
  bool directed_ = false;
  std::shared_ptr<CsrGraph> in_csr_;
};

/// Builds the canonical CSR from raw edge tuples. Undirected inputs store
/// both arc directions (self-loops once). dedupe collapses parallel arcs,
/// keeping the minimum weight; drop_self_loops removes u->u arcs.
CsrGraph build_csr(const EdgeList& edges, bool dedupe = true,
                   bool drop_self_loops = true);

}  // namespace graphbench
