#include "graphbench/energy.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace graphbench {

namespace {

double monotonic_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string read_line(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::string s;
  if (!in || !std::getline(in, s))
    throw ProbeUnavailable("cannot read " + p.string());
  return s;
}

}  // namespace

PowercapProbe::PowercapProbe(std::filesystem::path root) {
  namespace fs = std::filesystem;
  if (root.empty()) {
    if (const char* env = std::getenv("GRAPHBENCH_POWERCAP_ROOT"))
      root = env;
    else
      root = "/sys/class/powercap";
  }
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    auto name_file = entry.path() / "name";
    auto energy_file = entry.path() / "energy_uj";
    auto range_file = entry.path() / "max_energy_range_uj";
    if (!fs::exists(name_file) || !fs::exists(energy_file)) continue;
    std::string name = read_line(name_file);
    std::string domain;
    if (name.rfind("package", 0) == 0)
      domain = "package-cpu";
    else if (name == "dram")
      domain = "dram";
    else
      continue;
    Zone z;
    z.energy_file = energy_file;
    z.domain = domain;
    z.max_range_uj =
        fs::exists(range_file) ? std::stod(read_line(range_file)) : 0.0;
    zones_.push_back(std::move(z));
  }
  if (zones_.empty())
    throw ProbeUnavailable(
        "no readable powercap package/dram zones under " + root.string() +
        " (use a mock script or --no-energy)");
}

void PowercapProbe::start() {
  if (active_) throw std::logic_error("energy region already active");
  for (Zone& z : zones_) z.start_uj = std::stod(read_line(z.energy_file));
  start_time_ = monotonic_seconds();
  active_ = true;
}

EnergyReport PowercapProbe::stop() {
  if (!active_) throw std::logic_error("no active energy region");
  active_ = false;
  EnergyReport r;
  r.wall_time = monotonic_seconds() - start_time_;
  for (Zone& z : zones_) {
    double end_uj = std::stod(read_line(z.energy_file));
    double max_range =
        z.max_range_uj > 0 ? z.max_range_uj : 1.8446744073709552e19;
    r.joules[z.domain] +=
        wrap_corrected_delta(z.start_uj, end_uj, max_range) * 1e-6;
  }
  return r;
}

MockProbe::MockProbe(const std::filesystem::path& script) {
  std::ifstream in(script);
  if (!in) throw ProbeUnavailable("cannot read mock script " + script.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "flat") {
      std::string domain;
      double watts;
      if (!(ls >> domain >> watts))
        throw ProbeUnavailable("bad flat line " + std::to_string(line_no));
      flat_watts_[domain] = watts;
    } else if (first == "range") {
      std::string domain;
      double uj;
      if (!(ls >> domain >> uj))
        throw ProbeUnavailable("bad range line " + std::to_string(line_no));
      max_range_uj_[domain] = uj;
    } else {
      Sample s;
      try {
        s.t = std::stod(first);
      } catch (const std::exception&) {
        throw ProbeUnavailable("bad sample line " + std::to_string(line_no));
      }
      if (!(ls >> s.domain >> s.counter_uj))
        throw ProbeUnavailable("bad sample line " + std::to_string(line_no));
      samples_.push_back(std::move(s));
    }
  }
  if (flat_watts_.empty() && samples_.empty())
    throw ProbeUnavailable("mock script has no flat or sample lines");
}

void MockProbe::start() {
  if (active_) throw std::logic_error("energy region already active");
  active_ = true;
  start_time_ = monotonic_seconds();
  events_.push_back({true, start_time_});
}

EnergyReport MockProbe::stop() {
  if (!active_) throw std::logic_error("no active energy region");
  active_ = false;
  double now = monotonic_seconds();
  events_.push_back({false, now});

  EnergyReport r;
  if (!samples_.empty()) {
    double t_min = samples_.front().t, t_max = samples_.front().t;
    for (const Sample& s : samples_) {
      t_min = std::min(t_min, s.t);
      t_max = std::max(t_max, s.t);
    }
    r.wall_time = t_max - t_min;
    std::map<std::string, std::pair<double, double>> first_last;
    for (const Sample& s : samples_) {
      auto it = first_last.find(s.domain);
      if (it == first_last.end())
        first_last[s.domain] = {s.counter_uj, s.counter_uj};
      else
        it->second.second = s.counter_uj;
    }
    for (const auto& [domain, fl] : first_last) {
      double max_range = max_range_uj_.count(domain)
                             ? max_range_uj_.at(domain)
                             : 1.8446744073709552e19;
      r.joules[domain] =
          wrap_corrected_delta(fl.first, fl.second, max_range) * 1e-6;
    }
  } else {
    r.wall_time = now - start_time_;
  }
  for (const auto& [domain, watts] : flat_watts_)
    r.joules[domain] = watts * r.wall_time;
  return r;
}

std::unique_ptr<EnergyProbe> make_probe(
    const std::filesystem::path& mock_script) {
  if (!mock_script.empty())
    return std::make_unique<MockProbe>(mock_script);
  return std::make_unique<PowercapProbe>();
}

BaselineReport measure_sleep_baseline(EnergyProbe& probe, double duration) {
  if (!(duration > 0)) throw std::invalid_argument("duration must be > 0");
  probe.start();
  std::this_thread::sleep_for(std::chrono::duration<double>(duration));
  EnergyReport r = probe.stop();
  BaselineReport b;
  b.duration = duration;
  double denom = r.wall_time > 0 ? r.wall_time : duration;
  for (const auto& [domain, joules] : r.joules)
    b.sleep_power[domain] = joules / denom;
  return b;
}

EnergyMetrics energy_metrics(const EnergyReport& report,
                             const BaselineReport& baseline,
                             const std::string& domain) {
  if (!(report.wall_time > 0)) throw std::invalid_argument("zero wall time");
  EnergyMetrics m;
  m.energy_per_root = report.joules.at(domain);
  m.average_power = m.energy_per_root / report.wall_time;
  m.sleeping_energy = baseline.sleep_power.at(domain) * report.wall_time;
  m.increase_over_sleep = m.energy_per_root / m.sleeping_energy;
  return m;
}

}  // namespace graphbench
