#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "graphbench/csr.hpp"

namespace graphbench {

inline constexpr VertexId kUnreached = std::numeric_limits<VertexId>::max();

enum class BfsMode { kTopDown, kDirectionOptimizing };

struct BfsParams {
  double alpha = 15.0;  // top-down -> bottom-up switch threshold
  double beta = 18.0;   // bottom-up -> top-down switch threshold
  BfsMode mode = BfsMode::kTopDown;
};

struct ParentArray {
  std::vector<VertexId> parent;  // kUnreached for unvisited vertices
  VertexId root = 0;
};

/// Level-synchronous BFS. Direction-optimizing mode switches to bottom-up
/// when the frontier's edge count exceeds (unexplored edges)/alpha and back
/// when the frontier shrinks below num_vertices/beta. Levels are
/// deterministic across modes and worker counts; parents need not be.
ParentArray bfs(const CsrGraph& g, VertexId root, const BfsParams& params,
                unsigned workers);

/// Serial FIFO-queue reference BFS.
std::vector<std::uint32_t> bfs_levels_oracle(const CsrGraph& g, VertexId root);

/// Hop distance per vertex implied by a parent array (chain walk).
std::vector<std::uint32_t> levels_from_parents(const ParentArray& parents);

struct BfsValidation {
  bool ok = true;
  std::string reason;
};

/// Graph500-style tree checks: every tree arc exists, tree-arc levels
/// differ by exactly one, and the reached set equals the oracle's.
BfsValidation validate_bfs_tree(const CsrGraph& g, VertexId root,
                                const ParentArray& parents);

}  // namespace graphbench
