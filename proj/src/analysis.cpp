#include "graphbench/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace graphbench {

namespace {

double quantile_sorted(const std::vector<double>& v, double p) {
  double rank = p * static_cast<double>(v.size() - 1);
  std::size_t lo = static_cast<std::size_t>(rank);
  std::size_t hi = std::min(lo + 1, v.size() - 1);
  double frac = rank - static_cast<double>(lo);
  return v[lo] + frac * (v[hi] - v[lo]);
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(9) << v;
  return os.str();
}

}  // namespace

SummaryStats summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("empty group");
  std::sort(values.begin(), values.end());
  SummaryStats s;
  s.n_points = values.size();
  s.min = values.front();
  s.max = values.back();
  s.q1 = quantile_sorted(values, 0.25);
  s.median = quantile_sorted(values, 0.5);
  s.q3 = quantile_sorted(values, 0.75);
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = values.size() > 1
                 ? std::sqrt(ss / static_cast<double>(values.size() - 1))
                 : 0.0;
  s.relative_stddev = s.mean != 0.0 ? s.stddev / s.mean : 0.0;
  return s;
}

ScalingSeries scaling_series(const std::vector<TrialRecord>& records,
                             bool use_mean) {
  std::map<unsigned, std::vector<double>> by_threads;
  for (const TrialRecord& r : records) by_threads[r.threads].push_back(r.run_s);
  ScalingSeries s;
  for (auto& [n, times] : by_threads) {
    SummaryStats st = summarize(times);
    s.time_s[n] = use_mean ? st.mean : st.median;
  }
  return s;
}

std::map<unsigned, double> speedup(const ScalingSeries& series) {
  auto it = series.time_s.find(1);
  if (it == series.time_s.end())
    throw std::invalid_argument("sequential baseline absent (no n=1 series)");
  double t1 = it->second;
  std::map<unsigned, double> out;
  for (const auto& [n, tn] : series.time_s) {
    if (!(tn > 0)) throw std::invalid_argument("non-positive time");
    out[n] = t1 / tn;
  }
  return out;
}

std::map<unsigned, double> efficiency(const ScalingSeries& series) {
  std::map<unsigned, double> out = speedup(series);
  for (auto& [n, s] : out) s /= static_cast<double>(n);
  return out;
}

std::map<GroupKey, SummaryStats> summarize_records(
    const std::vector<TrialRecord>& records) {
  std::map<GroupKey, std::vector<double>> groups;
  auto add = [&](const TrialRecord& r, const std::string& metric, double v) {
    groups[{r.dataset, r.algorithm, r.threads, metric}].push_back(v);
  };
  for (const TrialRecord& r : records) {
    add(r, "run_s", r.run_s);
    add(r, "construction_s", r.construction_s);
    if (r.iterations) add(r, "iterations", static_cast<double>(*r.iterations));
    if (r.pkg_joules) add(r, "pkg_joules", *r.pkg_joules);
    if (r.dram_joules) add(r, "dram_joules", *r.dram_joules);
    if (r.pkg_watts) add(r, "pkg_watts", *r.pkg_watts);
    if (r.dram_watts) add(r, "dram_watts", *r.dram_watts);
  }
  std::map<GroupKey, SummaryStats> out;
  for (auto& [key, values] : groups) out[key] = summarize(std::move(values));
  return out;
}

std::vector<std::filesystem::path> emit_report(
    const std::vector<TrialRecord>& records,
    const std::map<std::string, double>& sleep_power,
    const std::filesystem::path& out_dir, const ReportOptions& opts) {
  namespace fs = std::filesystem;
  if (records.empty()) throw std::invalid_argument("no records");
  fs::create_directories(out_dir);
  std::vector<fs::path> written;

  // one row per box-plot point
  {
    fs::path p = out_dir / "points.csv";
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << "dataset,algorithm,threads,trial,metric,value\n";
    for (const TrialRecord& r : records) {
      auto row = [&](const std::string& metric, double v) {
        out << r.dataset << ',' << r.algorithm << ',' << r.threads << ','
            << r.trial << ',' << metric << ',' << num(v) << '\n';
      };
      row("run_s", r.run_s);
      row("construction_s", r.construction_s);
      if (r.iterations) row("iterations", static_cast<double>(*r.iterations));
      if (r.pkg_joules) row("pkg_joules", *r.pkg_joules);
      if (r.dram_joules) row("dram_joules", *r.dram_joules);
    }
    written.push_back(p);
  }

  // per (dataset, algorithm) scaling series
  std::map<std::pair<std::string, std::string>, std::vector<TrialRecord>>
      by_run;
  for (const TrialRecord& r : records)
    by_run[{r.dataset, r.algorithm}].push_back(r);
  {
    fs::path p = out_dir / "scaling.csv";
    std::ofstream out(p, std::ios::binary);
    out << "dataset,algorithm,threads,time_s,speedup,efficiency\n";
    for (const auto& [key, recs] : by_run) {
      ScalingSeries s = scaling_series(recs, opts.use_mean);
      if (!s.time_s.count(1)) continue;  // no sequential baseline, skip
      auto sp = speedup(s);
      auto ef = efficiency(s);
      for (const auto& [n, tn] : s.time_s)
        out << key.first << ',' << key.second << ',' << n << ',' << num(tn)
            << ',' << num(sp.at(n)) << ',' << num(ef.at(n)) << '\n';
    }
    written.push_back(p);
  }

  // markdown summary, energy block laid out like the energy table rows
  {
    fs::path p = out_dir / "summary.md";
    std::ofstream out(p, std::ios::binary);
    out << "# Benchmark summary\n\n";
    out << "| dataset | algorithm | threads | metric | n | min | q1 | median "
           "| q3 | max | mean | rel. stddev |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& [key, st] : summarize_records(records)) {
      out << "| " << key.dataset << " | " << key.algorithm << " | "
          << key.threads << " | " << key.metric << " | " << st.n_points
          << " | " << num(st.min) << " | " << num(st.q1) << " | "
          << num(st.median) << " | " << num(st.q3) << " | " << num(st.max)
          << " | " << num(st.mean) << " | " << num(st.relative_stddev)
          << " |\n";
    }

    bool any_energy = false;
    for (const TrialRecord& r : records) any_energy |= r.pkg_joules.has_value();
    if (any_energy && sleep_power.count("package-cpu")) {
      double sp = sleep_power.at("package-cpu");
      out << "\n## Energy (package domain, mean over trials)\n\n";
      out << "| | ";
      std::map<std::pair<std::string, std::string>,
               std::array<double, 3>>  // time, energy, count
          acc;
      for (const TrialRecord& r : records) {
        if (!r.pkg_joules) continue;
        auto& a = acc[{r.dataset, r.algorithm}];
        a[0] += r.run_s;
        a[1] += *r.pkg_joules;
        a[2] += 1.0;
      }
      for (const auto& [key, a] : acc)
        out << key.first << "/" << key.second << " | ";
      out << "\n|---|";
      for (std::size_t i = 0; i < acc.size(); ++i) out << "---|";
      out << "\n";
      auto emit_row = [&](const std::string& label, auto&& value) {
        out << "| " << label << " | ";
        for (const auto& [key, a] : acc) out << num(value(a)) << " | ";
        out << "\n";
      };
      emit_row("Time (s)", [](const auto& a) { return a[0] / a[2]; });
      emit_row("Average Power per Root (W)",
               [](const auto& a) { return (a[1] / a[2]) / (a[0] / a[2]); });
      emit_row("Energy per Root (J)", [](const auto& a) { return a[1] / a[2]; });
      emit_row("Sleeping Energy (J)",
               [&](const auto& a) { return sp * (a[0] / a[2]); });
      emit_row("Increase over Sleep", [&](const auto& a) {
        return (a[1] / a[2]) / (sp * (a[0] / a[2]));
      });
    }
    written.push_back(p);
  }

  if (opts.render_svg) {
    fs::path p = out_dir / "scaling.svg";
    std::ofstream out(p, std::ios::binary);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='640' "
           "height='400' viewBox='0 0 640 400'>\n";
    out << "<rect width='640' height='400' fill='white'/>\n";
    double max_n = 1, max_sp = 1;
    std::vector<std::pair<std::string, std::map<unsigned, double>>> curves;
    for (const auto& [key, recs] : by_run) {
      ScalingSeries s = scaling_series(recs, opts.use_mean);
      if (!s.time_s.count(1)) continue;
      auto sp = speedup(s);
      for (const auto& [n, v] : sp) {
        max_n = std::max(max_n, static_cast<double>(n));
        max_sp = std::max(max_sp, v);
      }
      curves.emplace_back(key.first + "/" + key.second, std::move(sp));
    }
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    int ci = 0;
    for (const auto& [label, sp] : curves) {
      std::ostringstream pts;
      for (const auto& [n, v] : sp)
        pts << 60 + 540 * (n - 1) / std::max(1.0, max_n - 1) << ','
            << 360 - 320 * v / max_sp << ' ';
      out << "<polyline fill='none' stroke='" << colors[ci++ % 4]
          << "' stroke-width='2' points='" << pts.str() << "'/>\n";
    }
    out << "<line x1='60' y1='360' x2='600' y2='360' stroke='black'/>\n";
    out << "<line x1='60' y1='40' x2='60' y2='360' stroke='black'/>\n";
    out << "<text x='300' y='390'>threads</text>\n";
    out << "<text x='10' y='200' transform='rotate(-90 15 200)'>speedup"
           "</text>\n";
    out << "</svg>\n";
    written.push_back(p);
  }

  return written;
}

}  // namespace graphbench
