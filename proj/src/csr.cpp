#include "graphbench/csr.hpp"

#include <algorithm>
#include <numeric>

namespace graphbench {

namespace {

struct Arc {
  VertexId src;
  VertexId dst;
  double w;
};

}  // namespace

CsrGraph build_csr(const EdgeList& edges, bool dedupe, bool drop_self_loops) {
  edges.validate();
  const bool weighted = edges.weighted();
  const std::uint64_t n = edges.num_vertices;

  std::vector<Arc> arcs;
  arcs.reserve(edges.edges.size() * (edges.directed ? 1 : 2));
  for (std::size_t i = 0; i < edges.edges.size(); ++i) {
    auto [u, v] = edges.edges[i];
    if (drop_self_loops && u == v) continue;
    double w = weighted ? edges.weights[i] : 0.0;
    arcs.push_back({u, v, w});
    if (!edges.directed && u != v) arcs.push_back({v, u, w});
  }

  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return a.w < b.w;
  });

  if (dedupe) {
    // arcs are sorted with the minimum weight first within each (src,dst)
    auto last = std::unique(arcs.begin(), arcs.end(),
                            [](const Arc& a, const Arc& b) {
                              return a.src == b.src && a.dst == b.dst;
                            });
    arcs.erase(last, arcs.end());
  }

  CsrGraph g;
  g.directed_ = edges.directed;
  g.offsets_.assign(n + 1, 0);
  for (const Arc& a : arcs) g.offsets_[a.src + 1]++;
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  g.neighbors_.resize(arcs.size());
  if (weighted) g.weights_.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    g.neighbors_[i] = arcs[i].dst;
    if (weighted) g.weights_[i] = arcs[i].w;
  }
  return g;
}

void CsrGraph::build_in_csr() {
  if (!directed_ || in_csr_) return;
  auto rev = std::make_shared<CsrGraph>();
  const std::uint64_t n = num_vertices();
  rev->directed_ = true;
  rev->offsets_.assign(n + 1, 0);
  for (VertexId v : neighbors_) rev->offsets_[v + 1]++;
  std::partial_sum(rev->offsets_.begin(), rev->offsets_.end(),
                   rev->offsets_.begin());
  rev->neighbors_.resize(neighbors_.size());
  if (weighted()) rev->weights_.resize(neighbors_.size());
  std::vector<std::uint64_t> cursor(rev->offsets_.begin(),
                                    rev->offsets_.end() - 1);
  for (VertexId u = 0; u < n; ++u) {
    auto ws = weighted() ? edge_weights(u) : std::span<const double>{};
    auto ns = neighbors(u);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      std::uint64_t slot = cursor[ns[i]]++;
      rev->neighbors_[slot] = u;
      if (weighted()) rev->weights_[slot] = ws[i];
    }
  }
  in_csr_ = std::move(rev);
}

}  // namespace graphbench
