#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graphbench/csr.hpp"
#include "graphbench/edge_list.hpp"

namespace graphbench {

/// Kronecker (RMAT-generalization) generator parameters.
struct KroneckerSpec {
  int scale = 10;                 // 2^scale vertices
  std::uint64_t edge_factor = 16; // edge tuples per vertex
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
  std::uint64_t seed = 0;
  bool permute_labels = true;     // Graph500-style label scrambling

  void validate() const;
  std::uint64_t num_vertices() const { return std::uint64_t{1} << scale; }
  std::uint64_t num_tuples() const { return edge_factor << scale; }
};

/// The per-tuple quadrant recursion: returns the scale quadrant choices
/// (0..3) for edge tuple `index`, drawn from the (seed, index) stream.
std::vector<int> kronecker_quadrants(const KroneckerSpec& spec,
                                     std::uint64_t index);

/// Generates exactly edge_factor * 2^scale undirected edge tuples,
/// deterministic for a fixed spec. Duplicates and self-loops are kept;
/// build_csr normalizes.
EdgeList generate_kronecker(const KroneckerSpec& spec);

/// Seeded random permutation of [0, n) used for label scrambling.
std::vector<VertexId> label_permutation(std::uint64_t n, std::uint64_t seed);

/// Assigns each edge an independent uniform weight in [0, 1), keyed by
/// (seed, edge index). Input must be unweighted.
void assign_weights(EdgeList& edges, std::uint64_t seed);

struct RootSet {
  std::vector<VertexId> roots;
  std::uint64_t seed = 0;
};

/// Rejection-samples `count` distinct vertices with degree > 1, uniformly
/// over vertex ids. Throws if fewer than `count` vertices are eligible.
RootSet select_roots(const CsrGraph& g, std::size_t count, std::uint64_t seed);

}  // namespace graphbench
