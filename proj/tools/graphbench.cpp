#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "graphbench/analysis.hpp"
#include "graphbench/datagen.hpp"
#include "graphbench/energy.hpp"
#include "graphbench/harness.hpp"
#include "graphbench/io.hpp"

namespace {

using namespace graphbench;

// exit codes: 0 ok, 1 usage, 2 validation failure, 3 environment (probe)

int cmd_gen(int scale, std::uint64_t edge_factor, std::uint64_t seed,
            const std::string& snap, const std::string& out_dir,
            std::size_t roots) {
  HomogenizeOptions opts;
  opts.root_count = roots;
  opts.weight_seed = seed;
  opts.root_seed = seed;
  DatasetBundle b;
  if (!snap.empty()) {
    b = homogenize(std::filesystem::path(snap), out_dir, opts);
  } else {
    KroneckerSpec spec;
    spec.scale = scale;
    spec.edge_factor = edge_factor;
    spec.seed = seed;
    b = homogenize(spec, out_dir, opts);
  }
  std::cout << "bundle " << b.base_name << "\n"
            << "  vertices   " << b.num_vertices << "\n"
            << "  edges      " << b.num_edges << "\n"
            << "  snap       " << b.snap_text.string() << "\n"
            << "  weighted   " << b.weighted_text.string() << "\n"
            << "  binary     " << b.binary_edges.string() << "\n"
            << "  roots      " << b.roots_file.string() << "\n";
  return 0;
}

int cmd_run(const ExperimentConfig& cfg, const std::string& out_csv) {
  ExperimentResult res = run_experiment(cfg);
  emit_csv(res.records, out_csv);
  std::cout << "wrote " << res.records.size() << " records to " << out_csv
            << "\n";
  if (res.validation_failures > 0) {
    std::cerr << res.validation_failures << " validation failure(s)\n";
    return 2;
  }
  if (cfg.energy && !res.energy_available) return 3;
  return 0;
}

int cmd_analyze(const std::string& csv, const std::string& out_dir,
                double sleep_power, bool svg, bool use_mean) {
  auto records = parse_csv(csv);
  std::map<std::string, double> sp;
  if (sleep_power > 0) sp["package-cpu"] = sleep_power;
  ReportOptions opts;
  opts.render_svg = svg;
  opts.use_mean = use_mean;
  auto files = emit_report(records, sp, out_dir, opts);
  for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
  return 0;
}

int cmd_power_baseline(double duration, const std::string& mock,
                       const std::string& out_file) {
  auto probe = make_probe(mock.empty() ? std::filesystem::path{}
                                       : std::filesystem::path(mock));
  BaselineReport b = measure_sleep_baseline(*probe, duration);
  std::ostream* out = &std::cout;
  std::ofstream f;
  if (!out_file.empty()) {
    f.open(out_file);
    out = &f;
  }
  *out << "domain,sleep_watts,duration_s\n";
  for (const auto& [domain, watts] : b.sleep_power)
    *out << domain << ',' << watts << ',' << b.duration << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shared-memory parallel graph algorithm benchmark suite"};
  app.require_subcommand(1);
  app.set_config("--config");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a homogenized dataset bundle");
  int scale = 10;
  std::uint64_t edge_factor = 16, seed = 1;
  std::string snap, out_dir = ".";
  std::size_t root_count = 32;
  auto* scale_opt =
      gen->add_option("--scale", scale, "Kronecker scale (2^S vertices)")
          ->capture_default_str();
  gen->add_option("--edge-factor", edge_factor, "edge tuples per vertex")
      ->capture_default_str();
  gen->add_option("--snap", snap, "SNAP text file to homogenize instead")
      ->excludes(scale_opt);
  gen->add_option("--seed", seed, "generator / weight / root seed")
      ->capture_default_str();
  gen->add_option("--out", out_dir, "output directory")->capture_default_str();
  gen->add_option("--roots", root_count, "number of roots to select")
      ->capture_default_str();

  // run
  auto* run = app.add_subcommand("run", "Run an experiment, write CSV");
  std::string dataset, alg = "bfs-td", threads_arg = "1", out_csv = "results.csv";
  std::string mock_energy;
  std::size_t trials = 32, warmup = 0;
  double alpha = 15.0, beta = 18.0, delta = 1.0, epsilon = 6e-8,
         damping = 0.85;
  bool energy = false, no_validate = false;
  run->add_option("--dataset", dataset, "bundle directory from gen")
      ->required();
  run->add_option("--alg", alg, "bfs-td | bfs-do | sssp | pagerank")
      ->capture_default_str();
  run->add_option("--threads", threads_arg,
                  "worker count or comma list, e.g. 1,2,4")
      ->capture_default_str();
  run->add_option("--trials", trials, "roots (bfs/sssp) or repetitions")
      ->capture_default_str();
  run->add_option("--warmup", warmup, "untimed warm-up runs")
      ->capture_default_str();
  run->add_option("--alpha", alpha, "BFS top-down->bottom-up threshold")
      ->capture_default_str();
  run->add_option("--beta", beta, "BFS bottom-up->top-down threshold")
      ->capture_default_str();
  run->add_option("--delta", delta, "SSSP bucket width")->capture_default_str();
  run->add_option("--epsilon", epsilon, "PageRank L1 stopping tolerance")
      ->capture_default_str();
  run->add_option("--damping", damping, "PageRank damping factor")
      ->capture_default_str();
  run->add_flag("--energy", energy, "record RAPL energy per kernel");
  run->add_option("--mock-energy", mock_energy,
                  "mock probe script instead of powercap");
  run->add_flag("--no-validate", no_validate, "skip result validation");
  run->add_option("--out", out_csv, "output CSV path")->capture_default_str();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Derive stats and reports");
  std::string in_csv, report_dir = "report";
  double sleep_power = 0.0;
  bool svg = false, use_mean = false;
  analyze->add_option("--csv", in_csv, "results CSV from run")->required();
  analyze->add_option("--out", report_dir, "report directory")
      ->capture_default_str();
  analyze->add_option("--sleep-power", sleep_power,
                      "package sleep power (W) for the energy table");
  analyze->add_flag("--svg", svg, "also render SVG plots");
  analyze->add_flag("--mean", use_mean,
                    "aggregate scaling series by mean instead of median");

  // power-baseline
  auto* baseline = app.add_subcommand("power-baseline",
                                      "Measure idle power over a sleep");
  double duration = 10.0;
  std::string mock, baseline_out;
  baseline->add_option("--duration", duration, "sleep length in seconds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  baseline->add_option("--mock", mock, "mock probe script");
  baseline->add_option("--out", baseline_out, "write report to file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(scale, edge_factor, seed, snap, out_dir, root_count);
    if (run->parsed()) {
      ExperimentConfig cfg;
      cfg.bundle_dir = dataset;
      cfg.algorithm = algorithm_from_name(alg);
      cfg.thread_counts.clear();
      std::stringstream ts(threads_arg);
      std::string tok;
      while (std::getline(ts, tok, ','))
        cfg.thread_counts.push_back(static_cast<unsigned>(std::stoul(tok)));
      cfg.trials = trials;
      cfg.warmup = warmup;
      cfg.bfs.alpha = alpha;
      cfg.bfs.beta = beta;
      cfg.sssp.delta = delta;
      cfg.pagerank.epsilon = epsilon;
      cfg.pagerank.damping = damping;
      cfg.energy = energy || !mock_energy.empty();
      cfg.mock_energy_script = mock_energy;
      cfg.validate = !no_validate;
      return cmd_run(cfg, out_csv);
    }
    if (analyze->parsed())
      return cmd_analyze(in_csv, report_dir, sleep_power, svg, use_mean);
    if (baseline->parsed())
      return cmd_power_baseline(duration, mock, baseline_out);
  } catch (const ProbeUnavailable& e) {
    std::cerr << "error: " << e.what()
              << "\nhint: pass --mock <script> or --no-energy\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
