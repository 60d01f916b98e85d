#include "graphbench/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace graphbench {

namespace {

double monotonic_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", s);
  return buf;
}

void check_sssp_result(const CsrGraph& g, const DistArray& d) {
  if (d.dist[d.root] != 0.0) throw std::runtime_error("dist[root] != 0");
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (std::isinf(d.dist[u])) continue;
    auto ns = g.neighbors(u);
    auto ws = g.edge_weights(u);
    for (std::size_t k = 0; k < ns.size(); ++k) {
      if (d.dist[ns[k]] > d.dist[u] + ws[k] + 1e-9 * (1.0 + d.dist[u]))
        throw std::runtime_error("triangle inequality violated");
    }
  }
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kBfsTopDown: return "bfs-td";
    case Algorithm::kBfsDirectionOpt: return "bfs-do";
    case Algorithm::kSssp: return "sssp";
    case Algorithm::kPageRank: return "pagerank";
  }
  throw std::logic_error("bad algorithm");
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "bfs-td") return Algorithm::kBfsTopDown;
  if (name == "bfs-do") return Algorithm::kBfsDirectionOpt;
  if (name == "sssp") return Algorithm::kSssp;
  if (name == "pagerank") return Algorithm::kPageRank;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (unsigned n : cfg.thread_counts)
    if (n < 1) throw std::invalid_argument("thread count must be >= 1");

  ExperimentResult res;
  auto phase = [&](const std::string& name, auto&& fn) {
    double t0 = monotonic_seconds();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      res.phases.push_back({name, t0, monotonic_seconds()});
    } else {
      auto v = fn();
      res.phases.push_back({name, t0, monotonic_seconds()});
      return v;
    }
  };

  // untimed load
  DatasetBundle bundle;
  EdgeList edges;
  std::vector<VertexId> roots;
  phase("load", [&] {
    bundle = load_bundle(cfg.bundle_dir);
    edges = read_binary_file(bundle.binary_edges);
    roots = read_roots_file(bundle.roots_file);
  });

  const bool is_bfs = cfg.algorithm == Algorithm::kBfsTopDown ||
                      cfg.algorithm == Algorithm::kBfsDirectionOpt;
  const bool per_root = is_bfs || cfg.algorithm == Algorithm::kSssp;
  if (per_root && roots.size() < cfg.trials)
    throw std::runtime_error("bundle has only " +
                             std::to_string(roots.size()) + " roots, need " +
                             std::to_string(cfg.trials));
  if (cfg.algorithm != Algorithm::kSssp) edges.weights.clear();

  const bool needs_in =
      bundle.directed && (cfg.algorithm == Algorithm::kBfsDirectionOpt ||
                          cfg.algorithm == Algorithm::kPageRank);

  std::unique_ptr<EnergyProbe> probe;
  if (cfg.energy) {
    try {
      probe = make_probe(cfg.mock_energy_script);
      res.energy_available = true;
    } catch (const ProbeUnavailable& e) {
      std::cerr << "warning: energy probe unavailable: " << e.what()
                << " (energy fields omitted)\n";
    }
  }

  // construction timed once per (dataset, algorithm) pair
  CsrGraph g;
  double construction_s = 0.0;
  auto construct = [&] {
    double t0 = monotonic_seconds();
    g = build_csr(edges, /*dedupe=*/true, /*drop_self_loops=*/true);
    if (needs_in) g.build_in_csr();
    construction_s = monotonic_seconds() - t0;
    res.phases.push_back({"construction", t0, monotonic_seconds()});
  };
  if (!cfg.construction_per_trial) construct();

  MockProbe* mock = dynamic_cast<MockProbe*>(probe.get());
  (void)mock;

  for (unsigned nthreads : cfg.thread_counts) {
    for (std::size_t trial = 0; trial < cfg.warmup + cfg.trials; ++trial) {
      const bool warm = trial < cfg.warmup;
      if (cfg.construction_per_trial) construct();
      VertexId root = per_root ? roots[(trial < cfg.warmup
                                            ? trial
                                            : trial - cfg.warmup) %
                                       roots.size()]
                               : 0;

      TrialRecord rec;
      rec.dataset = bundle.base_name;
      rec.algorithm = algorithm_name(cfg.algorithm);
      rec.threads = nthreads;
      rec.trial = warm ? trial : trial - cfg.warmup;
      rec.construction_s = construction_s;
      if (per_root) rec.root = root;

      ParentArray parents;
      DistArray dists;
      RankVector ranks;

      if (probe) probe->start();
      double t0 = monotonic_seconds();
      switch (cfg.algorithm) {
        case Algorithm::kBfsTopDown: {
          BfsParams p = cfg.bfs;
          p.mode = BfsMode::kTopDown;
          parents = bfs(g, root, p, nthreads);
          break;
        }
        case Algorithm::kBfsDirectionOpt: {
          BfsParams p = cfg.bfs;
          p.mode = BfsMode::kDirectionOptimizing;
          parents = bfs(g, root, p, nthreads);
          break;
        }
        case Algorithm::kSssp:
          dists = sssp(g, root, cfg.sssp, nthreads);
          break;
        case Algorithm::kPageRank:
          ranks = pagerank(g, cfg.pagerank, nthreads);
          break;
      }
      double t1 = monotonic_seconds();
      EnergyReport energy;
      if (probe) energy = probe->stop();
      res.phases.push_back({"kernel", t0, t1});
      rec.run_s = t1 - t0;

      if (cfg.validate) {
        phase("validate", [&] {
          switch (cfg.algorithm) {
            case Algorithm::kBfsTopDown:
            case Algorithm::kBfsDirectionOpt: {
              auto v = validate_bfs_tree(g, root, parents);
              if (!v.ok) {
                ++res.validation_failures;
                std::cerr << "validation failed (" << rec.algorithm
                          << " root " << root << "): " << v.reason << "\n";
              }
              break;
            }
            case Algorithm::kSssp:
              try {
                check_sssp_result(g, dists);
              } catch (const std::exception& e) {
                ++res.validation_failures;
                std::cerr << "validation failed (sssp root " << root
                          << "): " << e.what() << "\n";
              }
              break;
            case Algorithm::kPageRank: {
              double sum = 0.0;
              for (double p : ranks.p) sum += p;
              if (std::abs(sum - 1.0) > 1e-6) {
                ++res.validation_failures;
                std::cerr << "validation failed (pagerank): rank sum " << sum
                          << "\n";
              }
              break;
            }
          }
        });
      }

      if (cfg.algorithm == Algorithm::kPageRank) {
        rec.iterations = ranks.iterations;
        rec.converged = ranks.converged;
        if (!ranks.converged)
          std::cerr << "warning: pagerank did not converge in "
                    << ranks.iterations << " iterations\n";
      }
      if (probe) {
        if (energy.joules.count("package-cpu")) {
          rec.pkg_joules = energy.joules.at("package-cpu");
          rec.pkg_watts = *rec.pkg_joules / energy.wall_time;
        }
        if (energy.joules.count("dram")) {
          rec.dram_joules = energy.joules.at("dram");
          rec.dram_watts = *rec.dram_joules / energy.wall_time;
        }
      }
      rec.timestamp = utc_timestamp();
      if (!warm) res.records.push_back(std::move(rec));
    }
  }
  return res;
}

const char* const kCsvHeader =
    "schema,dataset,algorithm,threads,trial,root,construction_s,run_s,"
    "iterations,converged,pkg_joules,dram_joules,pkg_watts,dram_watts,"
    "timestamp";

void emit_csv(const std::vector<TrialRecord>& records,
              const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // LF endings everywhere
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kCsvHeader << '\n';
  auto opt_num = [](const std::optional<double>& v) {
    return v ? fmt_time(*v) : std::string{};
  };
  for (const TrialRecord& r : records) {
    out << "1," << r.dataset << ',' << r.algorithm << ',' << r.threads << ','
        << r.trial << ',';
    if (r.root) out << *r.root;
    out << ',' << fmt_time(r.construction_s) << ',' << fmt_time(r.run_s)
        << ',';
    if (r.iterations) out << *r.iterations;
    out << ',';
    if (r.converged) out << (*r.converged ? '1' : '0');
    out << ',' << opt_num(r.pkg_joules) << ',' << opt_num(r.dram_joules)
        << ',' << opt_num(r.pkg_watts) << ',' << opt_num(r.dram_watts) << ','
        << r.timestamp << '\n';
  }
}

std::vector<TrialRecord> parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::stringstream have(line), want(kCsvHeader);
    std::string h, w;
    std::size_t col = 0;
    while (std::getline(want, w, ',')) {
      ++col;
      if (!std::getline(have, h, ',') || h != w)
        throw std::runtime_error("CSV header mismatch at column " +
                                 std::to_string(col) + ": expected '" + w +
                                 "', got '" + h + "'");
    }
    if (std::getline(have, h, ','))
      throw std::runtime_error("CSV header has extra column '" + h + "'");
  }

  std::vector<TrialRecord> records;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) f.push_back(tok);
    if (!line.empty() && line.back() == ',') f.push_back("");
    if (f.size() != 15)
      throw std::runtime_error("row " + std::to_string(row) + ": expected 15 "
                               "fields, got " + std::to_string(f.size()));
    try {
      if (f[0] != "1")
        throw std::runtime_error("unsupported schema version '" + f[0] + "'");
      TrialRecord r;
      r.dataset = f[1];
      r.algorithm = f[2];
      r.threads = static_cast<unsigned>(std::stoul(f[3]));
      r.trial = std::stoull(f[4]);
      if (!f[5].empty()) r.root = static_cast<VertexId>(std::stoul(f[5]));
      r.construction_s = std::stod(f[6]);
      r.run_s = std::stod(f[7]);
      if (!f[8].empty()) r.iterations = std::stoull(f[8]);
      if (!f[9].empty()) r.converged = f[9] == "1";
      if (!f[10].empty()) r.pkg_joules = std::stod(f[10]);
      if (!f[11].empty()) r.dram_joules = std::stod(f[11]);
      if (!f[12].empty()) r.pkg_watts = std::stod(f[12]);
      if (!f[13].empty()) r.dram_watts = std::stod(f[13]);
      r.timestamp = f[14];
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error("row " + std::to_string(row) + ": " + e.what());
    }
  }
  return records;
}

}  // namespace graphbench
