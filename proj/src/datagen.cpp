#include "graphbench/datagen.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "graphbench/rng.hpp"

namespace graphbench {

void KroneckerSpec::validate() const {
  if (scale < 1 || scale > 40)
    throw std::invalid_argument("scale must be in [1, 40]");
  if (edge_factor == 0) throw std::invalid_argument("edge_factor must be > 0");
  for (double p : {a, b, c, d})
    if (p < 0.0 || p > 1.0)
      throw std::invalid_argument("initiator probabilities must be in [0,1]");
  if (std::abs(a + b + c + d - 1.0) > 1e-12)
    throw std::invalid_argument("initiator probabilities must sum to 1");
  if (scale >= 40 || edge_factor > (std::uint64_t{1} << (62 - scale)))
    throw std::overflow_error("edge count overflows index arithmetic");
}

std::vector<int> kronecker_quadrants(const KroneckerSpec& spec,
                                     std::uint64_t index) {
  SplitMix64 rng(stream_key(spec.seed, index));
  std::vector<int> quads(spec.scale);
  const double ab = spec.a + spec.b;
  const double abc = ab + spec.c;
  for (int level = 0; level < spec.scale; ++level) {
    double u = rng.next_double();
    quads[level] = u < spec.a ? 0 : u < ab ? 1 : u < abc ? 2 : 3;
  }
  return quads;
}

std::vector<VertexId> label_permutation(std::uint64_t n, std::uint64_t seed) {
  std::vector<VertexId> perm(n);
  for (std::uint64_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
  std::mt19937_64 gen(stream_key(seed, 0x7065726DULL));  // "perm" stream
  for (std::uint64_t i = n; i > 1; --i) {
    std::uint64_t j = gen() % i;
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

EdgeList generate_kronecker(const KroneckerSpec& spec) {
  spec.validate();
  const std::uint64_t n = spec.num_vertices();
  if (n > std::numeric_limits<VertexId>::max())
    throw std::overflow_error("vertex count exceeds id range");
  const std::uint64_t m = spec.num_tuples();

  EdgeList out;
  out.num_vertices = n;
  out.directed = false;
  out.edges.resize(m);

  std::vector<VertexId> perm;
  if (spec.permute_labels) perm = label_permutation(n, spec.seed);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
    SplitMix64 rng(stream_key(spec.seed, static_cast<std::uint64_t>(i)));
    const double ab = spec.a + spec.b;
    const double abc = ab + spec.c;
    std::uint64_t src = 0, dst = 0;
    for (int level = 0; level < spec.scale; ++level) {
      double u = rng.next_double();
      int quad = u < spec.a ? 0 : u < ab ? 1 : u < abc ? 2 : 3;
      src = (src << 1) | (quad >> 1);
      dst = (dst << 1) | (quad & 1);
    }
    VertexId s = static_cast<VertexId>(src);
    VertexId t = static_cast<VertexId>(dst);
    if (spec.permute_labels) {
      s = perm[s];
      t = perm[t];
    }
    out.edges[i] = {s, t};
  }
  return out;
}

void assign_weights(EdgeList& edges, std::uint64_t seed) {
  if (edges.weighted())
    throw std::logic_error("edge list is already weighted");
  edges.weights.resize(edges.edges.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(edges.edges.size());
       ++i) {
    SplitMix64 rng(stream_key(seed ^ 0x77656967687473ULL,
                              static_cast<std::uint64_t>(i)));
    edges.weights[i] = rng.next_double();
  }
}

RootSet select_roots(const CsrGraph& g, std::size_t count, std::uint64_t seed) {
  const std::uint64_t n = g.num_vertices();
  std::uint64_t eligible = 0;
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) > 1) ++eligible;
  if (eligible < count)
    throw std::runtime_error("root selection infeasible: only " +
                             std::to_string(eligible) +
                             " vertices have degree > 1, need " +
                             std::to_string(count));

  RootSet rs;
  rs.seed = seed;
  std::mt19937_64 gen(stream_key(seed, 0x726F6F7473ULL));  // "roots" stream
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::unordered_set<VertexId> seen;
  while (rs.roots.size() < count) {
    VertexId v = static_cast<VertexId>(pick(gen));
    if (g.degree(v) <= 1 || seen.count(v)) continue;
    seen.insert(v);
    rs.roots.push_back(v);
  }
  return rs;
}

}  // namespace graphbench
