#pragma once

#include <cstdint>
#include <vector>

#include "graphbench/csr.hpp"

namespace graphbench {

struct PageRankParams {
  double epsilon = 6e-8;    // L1 stopping tolerance
  double damping = 0.85;
  std::uint64_t max_iters = 1000;
};

struct RankVector {
  std::vector<double> p;
  std::uint64_t iterations = 0;
  bool converged = false;
  double final_l1_delta = 0.0;
};

/// Pull-style power iteration from the uniform vector. Dangling mass is
/// reinjected uniformly. Stops when the L1 change drops below epsilon.
/// Reductions run over fixed-size vertex blocks summed in block order, so
/// the iteration count does not depend on the worker count.
RankVector pagerank(const CsrGraph& g, const PageRankParams& params,
                    unsigned workers);

}  // namespace graphbench
