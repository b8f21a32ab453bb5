#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvm/graph.hpp"
#include "cvm/opinions.hpp"
#include "cvm/simulator.hpp"

namespace cvm {

// Point estimate with a 3-sigma confidence radius: 3 * sample_sd / sqrt(R).
struct Estimate {
  double mean = 0.0;
  double radius = 0.0;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

Estimate estimate(std::span<const double> samples);

struct ExperimentSpec {
  std::string graph;  // graph_from_spec() syntax, or "file:<path>"
  std::vector<double> epsilons;
  std::size_t replicates = 1;
  std::uint64_t master_seed = 0;
  std::optional<double> t_max;  // none: run to absorption
  std::uint64_t max_events = kDefaultMaxEvents;
  std::size_t workers = 1;
};

Graph build_graph(const std::string& spec);

struct ReplicateRecord {
  std::size_t replicate = 0;  // index within its epsilon
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  std::size_t n_vertices = 0;
  std::size_t nu = 0;  // distinct opinions at the end of the run
  bool absorbed = false;
  bool consensus = false;
  bool initially_absorbing = false;
  std::optional<std::size_t> theta_initial;  // extremists at t = 0 (eps > 1/2)
  std::optional<std::size_t> theta_final;
  std::optional<bool> theta_inf_zero;  // set for absorbed runs with eps > 1/2
  std::uint64_t events = 0;
  double time = 0.0;
  double wall_seconds = 0.0;  // excluded from equality and default output

  friend bool operator==(const ReplicateRecord& a, const ReplicateRecord& b) {
    return a.replicate == b.replicate && a.seed == b.seed && a.epsilon == b.epsilon &&
           a.n_vertices == b.n_vertices && a.nu == b.nu && a.absorbed == b.absorbed &&
           a.consensus == b.consensus && a.initially_absorbing == b.initially_absorbing &&
           a.theta_initial == b.theta_initial && a.theta_final == b.theta_final &&
           a.theta_inf_zero == b.theta_inf_zero && a.events == b.events && a.time == b.time;
  }
};

struct EpsilonAggregate {
  double epsilon = 0.0;
  std::size_t replicates = 0;
  Estimate nu;
  Estimate nu_fraction;  // nu / N
  std::size_t nu_min = 0;
  std::size_t nu_max = 0;
  Estimate consensus;
  Estimate absorbed;
  Estimate initially_absorbing;
  std::optional<Estimate> theta_initial;
  std::optional<Estimate> theta_inf_zero;
  // Absorbed eps > 1/2 runs whose final extremist count is neither 0 nor N.
  std::size_t extremist_identity_violations = 0;
  // Reference values attached by the experiment (theoretical bounds etc).
  std::map<std::string, double> reference;

  friend bool operator==(const EpsilonAggregate&, const EpsilonAggregate&) = default;
};

// Recomputes the aggregate of the records carrying this epsilon.
EpsilonAggregate aggregate(std::span<const ReplicateRecord> records, double epsilon);

struct Snapshot {
  double epsilon = 0.0;
  std::size_t width = 0;
  std::size_t height = 0;
  OpinionConfig opinions;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

struct ExperimentReport {
  std::string kind;
  ExperimentSpec spec;
  std::vector<ReplicateRecord> records;  // epsilon-major, replicate order
  std::vector<EpsilonAggregate> aggregates;
  std::vector<Snapshot> snapshots;

  const EpsilonAggregate& at(double epsilon) const;
};

// Runs to absorption from uniform random opinions, eps > 1/2 for every grid
// value. Reports consensus and theta_inf = 0 frequencies and checks that
// each absorbed extremist count is 0 or N.
ExperimentReport consensus_experiment(const ExperimentSpec& spec);

// Path of n vertices run to absorption; reference values "threshold"
// (1 - 12 eps) n, "violation_frequency" of nu below it and "bound"
// 3 exp(-eps n).
ExperimentReport coexistence_experiment(std::size_t n, double eps, std::size_t replicates,
                                        std::uint64_t seed, std::size_t workers = 1);

// Torus runs to model time t_max for each grid value; one snapshot per
// epsilon from replicate 0.
ExperimentReport sweep_experiment(std::size_t width, std::size_t height,
                                  std::span<const double> grid, double t_max,
                                  std::size_t replicates, std::uint64_t seed,
                                  std::size_t workers = 1);

// Frequency of a non-absorbing initial configuration against the union bound
// 2 eps |E| ("union_bound"); nu / N at absorption is recorded without
// assertion.
ExperimentReport degree_bound_check(const ExperimentSpec& spec);

}  // namespace cvm
