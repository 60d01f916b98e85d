#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphbench {

struct ProbeUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Energy over one marked region, per domain ("package-cpu", "dram").
struct EnergyReport {
  std::map<std::string, double> joules;
  double wall_time = 0.0;  // seconds

  double watts(const std::string& domain) const {
    return joules.at(domain) / wall_time;
  }
};

struct BaselineReport {
  std::map<std::string, double> sleep_power;  // watts
  double duration = 0.0;                      // seconds
};

/// Wrap-corrected counter delta: counters are modular in [0, max_range).
inline double wrap_corrected_delta(double start, double end,
                                   double max_range) {
  double d = end - start;
  if (d < 0) d += max_range;
  return d;
}

/// Two-point region probe: start(), run the kernel, stop().
/// Regions must not nest.
class EnergyProbe {
 public:
  virtual ~EnergyProbe() = default;
  virtual void start() = 0;
  virtual EnergyReport stop() = 0;
};

/// Reads the powercap sysfs counters (energy_uj / max_energy_range_uj).
/// Package domains are summed across sockets into "package-cpu"; dram
/// domains into "dram". The root path defaults to /sys/class/powercap and
/// can be overridden with GRAPHBENCH_POWERCAP_ROOT.
class PowercapProbe : public EnergyProbe {
 public:
  explicit PowercapProbe(std::filesystem::path root = {});
  void start() override;
  EnergyReport stop() override;

 private:
  struct Zone {
    std::filesystem::path energy_file;
    std::string domain;  // "package-cpu" or "dram"
    double max_range_uj;
    double start_uj = 0.0;
  };
  std::vector<Zone> zones_;
  double start_time_ = 0.0;
  bool active_ = false;
};

/// Deterministic probe for tests, driven by a script file.
///
///   flat <domain> <watts>             constant-power mode
///   range <domain> <max_uj>           counter modulus for trace mode
///   <t-offset-s> <domain> <counter-uj>  one trace sample
///
/// Trace mode: each region consumes the earliest and latest samples; wall
/// time is the timestamp span. Flat mode: joules = watts x measured wall
/// time. All start/stop calls are recorded in an event log.
class MockProbe : public EnergyProbe {
 public:
  explicit MockProbe(const std::filesystem::path& script);
  void start() override;
  EnergyReport stop() override;

  struct Event {
    bool is_start;
    double monotonic_s;  // real monotonic timestamp of the call
  };
  const std::vector<Event>& events() const { return events_; }

 private:
  std::map<std::string, double> flat_watts_;
  std::map<std::string, double> max_range_uj_;
  struct Sample {
    double t;
    std::string domain;
    double counter_uj;
  };
  std::vector<Sample> samples_;
  std::vector<Event> events_;
  double start_time_ = 0.0;
  bool active_ = false;
};

/// Opens the powercap probe, or a mock when mock_script is non-empty.
std::unique_ptr<EnergyProbe> make_probe(const std::filesystem::path&
                                            mock_script = {});

/// Idle power per domain over a sleep of `duration` seconds.
BaselineReport measure_sleep_baseline(EnergyProbe& probe,
                                      double duration = 10.0);

struct EnergyMetrics {
  double energy_per_root;      // joules over the region
  double average_power;        // watts
  double sleeping_energy;      // joules the idle machine would have used
  double increase_over_sleep;  // ratio energy / sleeping_energy
};

/// Table-style derived quantities for one domain.
EnergyMetrics energy_metrics(const EnergyReport& report,
                             const BaselineReport& baseline,
                             const std::string& domain = "package-cpu");

}  // namespace graphbench
