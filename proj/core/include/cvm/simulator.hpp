#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cvm/graph.hpp"
#include "cvm/opinions.hpp"
#include "cvm/rng.hpp"

namespace cvm {

inline constexpr std::uint64_t kDefaultMaxEvents = 10'000'000'000ULL;

// Simulation halts at the first of absorption, t_max (model time) and
// max_events. No t_max means run to absorption.
struct SimParams {
  double epsilon = 0.0;
  std::optional<double> t_max;
  std::uint64_t max_events = kDefaultMaxEvents;
  std::uint64_t seed = 0;
};

// Direction +1 copies the tail opinion onto the head; -1 copies head onto
// tail.
struct Event {
  double time = 0.0;
  EdgeId edge = 0;
  int direction = 1;
  Vertex source = 0;
  Vertex target = 0;
};

struct TracePoint {
  double time = 0.0;
  std::uint64_t event = 0;
  std::size_t value = 0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SimReport {
  OpinionConfig final_opinions;
  double time = 0.0;
  std::uint64_t events = 0;
  bool absorbed = false;
  std::vector<TracePoint> opinion_trace;
  std::vector<TracePoint> extremist_trace;  // only when epsilon > 1/2

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

// Event-driven simulation of the threshold voter model.
//
// Only interacting ("active") edges carry clocks: each event picks an active
// edge uniformly, advances time by an exponential holding time of rate
// 2 * |active|, flips a fair coin for the direction and copies the source
// opinion onto the target. Clock rings on inactive edges would be no-ops, so
// the jump chain matches the per-edge rate-2 construction.
//
// Opinions are tracked by lineage label (index of the initial distinct value)
// so distinct-opinion, extremist and theta_t(x) counts are O(1) per event.
class Simulator {
 public:
  // Throws ValidationError if g is disconnected, sizes mismatch or eps is
  // outside [0, 1].
  Simulator(const Graph& g, const OpinionConfig& init, double epsilon, std::uint64_t seed);

  // Draws the next event. If it would fall after time_limit, the clock is
  // set to time_limit and nothing is applied. Returns nullopt when absorbed
  // or the limit was hit.
  std::optional<Event> step(double time_limit = std::numeric_limits<double>::infinity());

  // Applies a scripted event without randomness or time advance. Returns
  // false (no-op) if the edge is not active. Throws ValidationError on a
  // bad edge index or direction.
  bool apply(EdgeId edge, int direction);

  const Graph& graph() const noexcept { return *graph_; }
  double epsilon() const noexcept { return epsilon_; }
  double time() const noexcept { return time_; }
  std::uint64_t events() const noexcept { return events_; }
  bool absorbed() const noexcept { return active_.empty(); }
  std::size_t active_edges() const noexcept { return active_.size(); }
  bool is_active(EdgeId e) const noexcept { return active_pos_[e] != kInactive; }

  std::span<const double> opinions() const noexcept { return opinions_; }
  OpinionConfig config() const { return OpinionConfig(opinions_); }

  std::size_t distinct_opinions() const noexcept { return distinct_; }
  // Vertices outside (1 - eps, eps). Meaningful only for eps > 1/2.
  std::size_t extremists() const noexcept { return extremists_; }
  // theta_t(x): vertices currently holding x's initial opinion.
  std::size_t holders_of_initial(Vertex x) const noexcept {
    return label_count_[initial_label_[x]];
  }

 private:
  static constexpr std::uint32_t kInactive = std::numeric_limits<std::uint32_t>::max();

  void copy_opinion(Vertex source, Vertex target);
  void refresh_edge(EdgeId e);

  const Graph* graph_;
  double epsilon_;
  Rng rng_;
  double time_ = 0.0;
  std::uint64_t events_ = 0;

  std::vector<double> opinions_;
  std::vector<std::uint32_t> label_;          // per vertex
  std::vector<std::uint32_t> initial_label_;  // per vertex at time 0
  std::vector<std::size_t> label_count_;      // per label
  std::vector<char> label_extremist_;         // per label
  std::size_t distinct_ = 0;
  std::size_t extremists_ = 0;

  std::vector<EdgeId> active_;
  std::vector<std::uint32_t> active_pos_;
};

// Records trace points at geometrically spaced event indices.
class TraceSchedule {
 public:
  bool due(std::uint64_t event) const noexcept { return event >= next_; }
  void advance(std::uint64_t event) noexcept;

 private:
  std::uint64_t next_ = 0;
};

SimReport simulate(const Graph& g, const OpinionConfig& init, const SimParams& p);

struct ScriptedEvent {
  EdgeId edge = 0;
  int direction = 1;
};

// Applies the events in order with the simulate() update rule; inactive
// edges are no-ops. Trace times are event indices.
SimReport replay(const Graph& g, const OpinionConfig& init, double epsilon,
                 std::span<const ScriptedEvent> script);

}  // namespace cvm
