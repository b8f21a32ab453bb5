#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cvm/graph.hpp"
#include "cvm/opinions.hpp"
#include "cvm/simulator.hpp"

namespace cvm {

// Signed opinion difference along each canonically oriented edge:
// weight(e) = opinion(head) - opinion(tail).
struct EdgeWeightConfig {
  std::vector<double> weights;

  friend bool operator==(const EdgeWeightConfig&, const EdgeWeightConfig&) = default;
};

EdgeWeightConfig weights_from_opinions(const Graph& g, std::span<const double> opinions);
inline EdgeWeightConfig weights_from_opinions(const Graph& g, const OpinionConfig& c) {
  return weights_from_opinions(g, c.values());
}

enum class EdgeClass { empty, typed, boundary };

// empty: weight == 0; typed with j: (j-1) eps < |w| < j eps; boundary: |w| a
// nonzero exact multiple of eps.
struct EdgeType {
  EdgeClass kind = EdgeClass::empty;
  std::size_t j = 0;

  friend bool operator==(const EdgeType&, const EdgeType&) = default;
};

EdgeType classify_edge(double weight, double eps);

// counts[0] = empty edges, counts[j] = type-j edges for j = 1..J.
struct EdgeCensus {
  std::vector<std::size_t> counts;
  std::size_t boundary = 0;

  std::size_t total() const noexcept;
  friend bool operator==(const EdgeCensus&, const EdgeCensus&) = default;
};

EdgeCensus census(std::span<const double> weights, double eps);
inline EdgeCensus census(const EdgeWeightConfig& w, double eps) { return census(w.weights, eps); }

// Weight-level image of an opinion copy on `edge`: direction +1 updates the
// head, -1 the tail. Every other edge at the updated endpoint absorbs
// +/- weight(edge) by orientation; weight(edge) becomes exactly 0. Returns
// false (no change) unless 0 < |weight(edge)| < eps.
bool apply_edge_event(const Graph& g, std::span<double> weights, EdgeId edge, int direction,
                      double eps);

// Opinions and edge weights driven by one event stream.
class CoupledSimulator {
 public:
  CoupledSimulator(const Graph& g, const OpinionConfig& init, double epsilon, std::uint64_t seed);

  std::optional<Event> step(double time_limit = std::numeric_limits<double>::infinity());
  bool apply(EdgeId edge, int direction);

  const Simulator& opinions() const noexcept { return sim_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t empty_edges() const noexcept { return empty_; }
  EdgeCensus census() const { return cvm::census(weights_, sim_.epsilon()); }

 private:
  void propagate(const Event& ev);

  Simulator sim_;
  std::vector<double> weights_;
  std::size_t empty_ = 0;
};

struct WeightSample {
  double time = 0.0;
  std::uint64_t event = 0;
  EdgeWeightConfig weights;
};

struct CensusSample {
  double time = 0.0;
  std::uint64_t event = 0;
  EdgeCensus census;
};

struct CoupledReport {
  SimReport sim;
  std::vector<WeightSample> trajectory;  // geometric event indices + final
  std::vector<CensusSample> census_trace;
};

// Requires eps > 0 for the census.
CoupledReport simulate_coupled(const Graph& g, const OpinionConfig& init, const SimParams& p);

}  // namespace cvm
