#include "cvm/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "cvm/error.hpp"
#include "cvm/rng.hpp"

namespace cvm {

Estimate estimate(std::span<const double> samples) {
  Estimate e;
  if (samples.empty()) return e;
  const auto n = static_cast<double>(samples.size());
  double sum = 0.0;
  for (double x : samples) sum += x;
  e.mean = sum / n;
  if (samples.size() < 2) return e;
  double ss = 0.0;
  for (double x : samples) ss += (x - e.mean) * (x - e.mean);
  e.radius = 3.0 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return e;
}

Graph build_graph(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return load_graph_file(spec.substr(5));
  return graph_from_spec(spec);
}

const EpsilonAggregate& ExperimentReport::at(double epsilon) const {
  for (const auto& a : aggregates) {
    if (a.epsilon == epsilon) return a;
  }
  throw ValidationError("no aggregate for epsilon " + std::to_string(epsilon));
}

namespace {

// Runs fn(0..count-1) on up to `workers` threads. Each index writes only its
// own output slot, so results do not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct RunSettings {
  std::optional<double> t_max;
  std::uint64_t max_events = kDefaultMaxEvents;
};

ReplicateRecord run_replicate(const Graph& g, double eps, std::size_t index, std::uint64_t seed,
                              const RunSettings& run, OpinionConfig* final_state) {
  const auto start = std::chrono::steady_clock::now();
  const OpinionConfig init = random_initial(g, seed);
  ReplicateRecord r;
  r.replicate = index;
  r.seed = seed;
  r.epsilon = eps;
  r.n_vertices = g.n_vertices();
  r.initially_absorbing = is_absorbing(g, init, eps);

  Simulator sim(g, init, eps, seed);
  if (eps > 0.5) r.theta_initial = sim.extremists();
  const double limit = run.t_max.value_or(std::numeric_limits<double>::infinity());
  while (sim.events() < run.max_events && sim.step(limit)) {
  }
  r.nu = sim.distinct_opinions();
  r.absorbed = sim.absorbed();
  r.consensus = r.nu == 1;
  if (eps > 0.5) {
    r.theta_final = sim.extremists();
    if (r.absorbed) r.theta_inf_zero = sim.extremists() == 0;
  }
  r.events = sim.events();
  r.time = sim.time();
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (final_state) *final_state = sim.config();
  return r;
}

// Replicate i of every epsilon uses replicate_seed(master, i), so the grid
// values share initial configurations.
std::vector<ReplicateRecord> run_grid(const Graph& g, std::span<const double> grid,
                                      std::size_t replicates, std::uint64_t master,
                                      const RunSettings& run, std::size_t workers,
                                      std::vector<OpinionConfig>* first_finals) {
  std::vector<ReplicateRecord> records(grid.size() * replicates);
  if (first_finals) first_finals->assign(grid.size(), OpinionConfig{});
  parallel_for(records.size(), workers, [&](std::size_t k) {
    const std::size_t e = k / replicates;
    const std::size_t i = k % replicates;
    OpinionConfig* keep = (first_finals && i == 0) ? &(*first_finals)[e] : nullptr;
    records[k] = run_replicate(g, grid[e], i, replicate_seed(master, i), run, keep);
  });
  return records;
}

void check_common(std::span<const double> grid, std::size_t replicates) {
  if (grid.empty()) throw ValidationError("epsilon grid is empty");
  for (double eps : grid) check_epsilon(eps);
  if (replicates < 1) throw ValidationError("replicate count must be at least 1");
}

std::vector<EpsilonAggregate> aggregate_all(std::span<const ReplicateRecord> records,
                                            std::span<const double> grid) {
  std::vector<EpsilonAggregate> out;
  for (double eps : grid) out.push_back(aggregate(records, eps));
  return out;
}

}  // namespace

EpsilonAggregate aggregate(std::span<const ReplicateRecord> records, double epsilon) {
  EpsilonAggregate a;
  a.epsilon = epsilon;
  std::vector<double> nu, frac, consensus, absorbed, init_abs, theta0, theta_zero;
  bool all_theta0 = true;
  for (const auto& r : records) {
    if (r.epsilon != epsilon) continue;
    nu.push_back(static_cast<double>(r.nu));
    frac.push_back(static_cast<double>(r.nu) / static_cast<double>(r.n_vertices));
    consensus.push_back(r.consensus ? 1.0 : 0.0);
    absorbed.push_back(r.absorbed ? 1.0 : 0.0);
    init_abs.push_back(r.initially_absorbing ? 1.0 : 0.0);
    if (r.theta_initial) {
      theta0.push_back(static_cast<double>(*r.theta_initial));
    } else {
      all_theta0 = false;
    }
    if (r.theta_inf_zero) theta_zero.push_back(*r.theta_inf_zero ? 1.0 : 0.0);
    if (r.absorbed && r.theta_final && *r.theta_final != 0 && *r.theta_final != r.n_vertices) {
      ++a.extremist_identity_violations;
    }
    a.nu_min = a.replicates == 0 ? r.nu : std::min(a.nu_min, r.nu);
    a.nu_max = std::max(a.nu_max, r.nu);
    ++a.replicates;
  }
  a.nu = estimate(nu);
  a.nu_fraction = estimate(frac);
  a.consensus = estimate(consensus);
  a.absorbed = estimate(absorbed);
  a.initially_absorbing = estimate(init_abs);
  if (all_theta0 && !theta0.empty()) a.theta_initial = estimate(theta0);
  if (!theta_zero.empty()) a.theta_inf_zero = estimate(theta_zero);
  return a;
}

ExperimentReport consensus_experiment(const ExperimentSpec& spec) {
  check_common(spec.epsilons, spec.replicates);
  for (double eps : spec.epsilons) {
    if (!(eps > 0.5)) throw ValidationError("consensus experiment needs epsilon > 1/2");
  }
  const Graph g = build_graph(spec.graph);
  if (!g.is_connected()) throw ValidationError("dynamics require a connected graph");
  ExperimentReport report;
  report.kind = "consensus";
  report.spec = spec;
  report.records = run_grid(g, spec.epsilons, spec.replicates, spec.master_seed,
                            {spec.t_max, spec.max_events}, spec.workers, nullptr);
  report.aggregates = aggregate_all(report.records, spec.epsilons);
  for (auto& a : report.aggregates) {
    a.reference["lower_bound"] = 2.0 * a.epsilon - 1.0;
    a.reference["theta_initial_mean"] = 2.0 * (1.0 - a.epsilon) * static_cast<double>(g.n_vertices());
  }
  return report;
}

ExperimentReport coexistence_experiment(std::size_t n, double eps, std::size_t replicates,
                                        std::uint64_t seed, std::size_t workers) {
  const std::vector<double> grid{eps};
  check_common(grid, replicates);
  const Graph g = make_path(n);
  ExperimentReport report;
  report.kind = "coexistence";
  report.spec = ExperimentSpec{"path:" + std::to_string(n), grid, replicates, seed,
                               std::nullopt, kDefaultMaxEvents, workers};
  report.records = run_grid(g, grid, replicates, seed, {}, workers, nullptr);
  report.aggregates = aggregate_all(report.records, grid);
  auto& a = report.aggregates.front();
  const double threshold = (1.0 - 12.0 * eps) * static_cast<double>(n);
  std::size_t violations = 0;
  for (const auto& r : report.records) violations += static_cast<double>(r.nu) < threshold ? 1 : 0;
  a.reference["threshold"] = threshold;
  a.reference["violation_frequency"] =
      static_cast<double>(violations) / static_cast<double>(replicates);
  a.reference["bound"] = 3.0 * std::exp(-eps * static_cast<double>(n));
  return report;
}

ExperimentReport sweep_experiment(std::size_t width, std::size_t height,
                                  std::span<const double> grid, double t_max,
                                  std::size_t replicates, std::uint64_t seed,
                                  std::size_t workers) {
  check_common(grid, replicates);
  if (!(t_max >= 0.0)) throw ValidationError("t_max must be non-negative");
  const Graph g = make_torus(width, height);
  ExperimentReport report;
  report.kind = "sweep";
  report.spec = ExperimentSpec{"torus:" + std::to_string(width) + "x" + std::to_string(height),
                               {grid.begin(), grid.end()}, replicates, seed, t_max,
                               kDefaultMaxEvents, workers};
  std::vector<OpinionConfig> finals;
  report.records = run_grid(g, grid, replicates, seed, {t_max, kDefaultMaxEvents}, workers, &finals);
  report.aggregates = aggregate_all(report.records, grid);
  for (std::size_t e = 0; e < grid.size(); ++e) {
    report.snapshots.push_back(Snapshot{grid[e], width, height, std::move(finals[e])});
  }
  return report;
}

ExperimentReport degree_bound_check(const ExperimentSpec& spec) {
  check_common(spec.epsilons, spec.replicates);
  const Graph g = build_graph(spec.graph);
  if (!g.is_connected()) throw ValidationError("dynamics require a connected graph");
  ExperimentReport report;
  report.kind = "degree_bound";
  report.spec = spec;
  report.records = run_grid(g, spec.epsilons, spec.replicates, spec.master_seed,
                            {spec.t_max, spec.max_events}, spec.workers, nullptr);
  report.aggregates = aggregate_all(report.records, spec.epsilons);
  const auto edges = static_cast<double>(g.n_edges());
  const auto n = static_cast<double>(g.n_vertices());
  const auto K = static_cast<double>(g.max_degree());
  for (auto& a : report.aggregates) {
    a.reference["union_bound"] = 2.0 * a.epsilon * edges;
    a.reference["degree_bound"] = 2.0 * a.epsilon * n * K;
    a.reference["non_absorbing_frequency"] = 1.0 - a.initially_absorbing.mean;
    a.reference["max_degree"] = K;
  }
  return report;
}

}  // namespace cvm
