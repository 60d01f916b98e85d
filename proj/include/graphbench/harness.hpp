#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/bfs.hpp"
#include "graphbench/energy.hpp"
#include "graphbench/io.hpp"
#include "graphbench/pagerank.hpp"
#include "graphbench/sssp.hpp"

namespace graphbench {

enum class Algorithm { kBfsTopDown, kBfsDirectionOpt, kSssp, kPageRank };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct ExperimentConfig {
  std::filesystem::path bundle_dir;
  Algorithm algorithm = Algorithm::kBfsTopDown;
  std::vector<unsigned> thread_counts{1};
  std::size_t trials = 32;  // roots for bfs/sssp, repetitions for pagerank
  BfsParams bfs;
  SsspParams sssp;
  PageRankParams pagerank;
  bool energy = false;
  std::filesystem::path mock_energy_script;  // empty = real powercap probe
  bool validate = true;
  std::size_t warmup = 0;
  bool construction_per_trial = false;
};

struct TrialRecord {
  std::string dataset;
  std::string algorithm;
  unsigned threads = 1;
  std::uint64_t trial = 0;
  std::optional<VertexId> root;
  double construction_s = 0.0;
  double run_s = 0.0;
  std::optional<std::uint64_t> iterations;
  std::optional<bool> converged;
  std::optional<double> pkg_joules, dram_joules, pkg_watts, dram_watts;
  std::string timestamp;

  bool operator==(const TrialRecord&) const = default;
};

/// Phase intervals (load/construction/kernel/validate) recorded per run,
/// for region-placement checks against a probe's event log.
struct PhaseEvent {
  std::string phase;
  double begin_s;
  double end_s;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  std::vector<PhaseEvent> phases;
  std::size_t validation_failures = 0;
  bool energy_available = false;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// CSV schema v1. Header is fixed; inapplicable fields are empty; times
/// carry 9 significant digits.
void emit_csv(const std::vector<TrialRecord>& records,
              const std::filesystem::path& path);
std::vector<TrialRecord> parse_csv(const std::filesystem::path& path);

extern const char* const kCsvHeader;

}  // namespace graphbench
