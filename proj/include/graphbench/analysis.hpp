#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "graphbench/energy.hpp"
#include "graphbench/harness.hpp"

namespace graphbench {

struct SummaryStats {
  std::size_t n_points = 0;
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
  double mean = 0, stddev = 0;
  double relative_stddev = 0;  // stddev / mean
};

/// Quartiles by linear interpolation between closest ranks
/// (rank = p * (n - 1)).
SummaryStats summarize(std::vector<double> values);

struct ScalingSeries {
  std::map<unsigned, double> time_s;  // thread count -> aggregate time
};

/// Median-over-trials aggregate per thread count (mean when use_mean).
ScalingSeries scaling_series(const std::vector<TrialRecord>& records,
                             bool use_mean = false);

/// T1 / Tn per thread count; requires the n=1 baseline.
std::map<unsigned, double> speedup(const ScalingSeries& series);

/// T1 / (n * Tn); equals speedup(n) / n.
std::map<unsigned, double> efficiency(const ScalingSeries& series);

struct GroupKey {
  std::string dataset;
  std::string algorithm;
  unsigned threads;
  std::string metric;
  auto operator<=>(const GroupKey&) const = default;
};

/// Per-group stats over (dataset, algorithm, threads, metric). Metrics:
/// run_s, construction_s, iterations, pkg_joules, dram_joules, pkg_watts,
/// dram_watts (when present).
std::map<GroupKey, SummaryStats> summarize_records(
    const std::vector<TrialRecord>& records);

struct ReportOptions {
  bool render_svg = false;
  bool use_mean = false;
};

/// Writes the report artifacts: long-format box-point and scaling CSVs, a
/// markdown summary (energy rows mirror the Time / Average Power per Root /
/// Energy per Root / Sleeping Energy / Increase over Sleep layout), and
/// optional SVG plots.
std::vector<std::filesystem::path> emit_report(
    const std::vector<TrialRecord>& records,
    const std::map<std::string, double>& sleep_power,
    const std::filesystem::path& out_dir, const ReportOptions& opts = {});

}  // namespace graphbench
