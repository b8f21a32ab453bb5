#include "cvm/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvm/error.hpp"

namespace cvm {

Simulator::Simulator(const Graph& g, const OpinionConfig& init, double epsilon,
                     std::uint64_t seed)
    : graph_(&g), epsilon_(epsilon), rng_(stream_seed(seed, Stream::dynamics)) {
  check_epsilon(epsilon);
  if (!g.is_connected()) throw ValidationError("dynamics require a connected graph");
  if (init.size() != g.n_vertices()) {
    throw ValidationError("initial configuration has " + std::to_string(init.size()) +
                          " opinions for " + std::to_string(g.n_vertices()) + " vertices");
  }
  opinions_.assign(init.begin(), init.end());

  std::vector<double> distinct(opinions_);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  distinct_ = distinct.size();
  label_count_.assign(distinct.size(), 0);
  label_extremist_.assign(distinct.size(), 0);
  for (std::size_t l = 0; l < distinct.size(); ++l) {
    label_extremist_[l] = epsilon_ > 0.5 && is_extremist(distinct[l], epsilon_);
  }
  label_.resize(opinions_.size());
  for (std::size_t v = 0; v < opinions_.size(); ++v) {
    const auto l = static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), opinions_[v]) - distinct.begin());
    label_[v] = l;
    ++label_count_[l];
    extremists_ += label_extremist_[l] ? 1 : 0;
  }
  initial_label_ = label_;

  active_pos_.assign(g.n_edges(), kInactive);
  for (EdgeId e = 0; e < g.n_edges(); ++e) refresh_edge(e);
}

void Simulator::refresh_edge(EdgeId e) {
  const Edge& edge = graph_->edge(e);
  const bool now = interacts(opinions_[edge.tail], opinions_[edge.head], epsilon_);
  const bool was = active_pos_[e] != kInactive;
  if (now == was) return;
  if (now) {
    active_pos_[e] = static_cast<std::uint32_t>(active_.size());
    active_.push_back(e);
  } else {
    const std::uint32_t pos = active_pos_[e];
    const EdgeId last = active_.back();
    active_[pos] = last;
    active_pos_[last] = pos;
    active_.pop_back();
    active_pos_[e] = kInactive;
  }
}

void Simulator::copy_opinion(Vertex source, Vertex target) {
  const std::uint32_t from = label_[target];
  const std::uint32_t to = label_[source];
  opinions_[target] = opinions_[source];
  label_[target] = to;
  if (--label_count_[from] == 0) --distinct_;
  ++label_count_[to];
  extremists_ = extremists_ - (label_extremist_[from] ? 1 : 0) + (label_extremist_[to] ? 1 : 0);
  for (EdgeId e : graph_->incident_edges(target)) refresh_edge(e);
}

std::optional<Event> Simulator::step(double time_limit) {
  if (active_.empty()) return std::nullopt;
  const EdgeId e = active_[rng_.below(active_.size())];
  const double dt = rng_.exponential(2.0 * static_cast<double>(active_.size()));
  const int direction = rng_.coin();
  if (time_ + dt > time_limit) {
    time_ = time_limit;
    return std::nullopt;
  }
  time_ += dt;
  const Edge& edge = graph_->edge(e);
  Event ev{time_, e, direction, direction > 0 ? edge.tail : edge.head,
           direction > 0 ? edge.head : edge.tail};
  copy_opinion(ev.source, ev.target);
  ++events_;
  return ev;
}

bool Simulator::apply(EdgeId edge, int direction) {
  if (edge >= graph_->n_edges()) {
    throw ValidationError("scripted event names edge " + std::to_string(edge) + " but graph has " +
                          std::to_string(graph_->n_edges()));
  }
  if (direction != 1 && direction != -1) throw ValidationError("direction must be +1 or -1");
  if (!is_active(edge)) return false;
  const Edge& e = graph_->edge(edge);
  copy_opinion(direction > 0 ? e.tail : e.head, direction > 0 ? e.head : e.tail);
  ++events_;
  return true;
}

void TraceSchedule::advance(std::uint64_t event) noexcept {
  // ~ten points per decade of events
  next_ = std::max(event + 1, static_cast<std::uint64_t>(std::ceil(static_cast<double>(event) * 1.25)));
}

namespace {

void record(const Simulator& sim, SimReport& out) {
  out.opinion_trace.push_back({sim.time(), sim.events(), sim.distinct_opinions()});
  if (sim.epsilon() > 0.5) {
    out.extremist_trace.push_back({sim.time(), sim.events(), sim.extremists()});
  }
}

void finish(const Simulator& sim, SimReport& out) {
  if (out.opinion_trace.empty() || out.opinion_trace.back().event != sim.events() ||
      out.opinion_trace.back().time != sim.time()) {
    record(sim, out);
  }
  out.final_opinions = sim.config();
  out.time = sim.time();
  out.events = sim.events();
  out.absorbed = sim.absorbed();
}

}  // namespace

SimReport simulate(const Graph& g, const OpinionConfig& init, const SimParams& p) {
  if (p.t_max && !(*p.t_max >= 0.0)) throw ValidationError("t_max must be non-negative");
  Simulator sim(g, init, p.epsilon, p.seed);
  const double limit = p.t_max.value_or(std::numeric_limits<double>::infinity());
  SimReport out;
  TraceSchedule schedule;
  record(sim, out);
  schedule.advance(0);
  while (sim.events() < p.max_events && sim.step(limit)) {
    if (schedule.due(sim.events())) {
      record(sim, out);
      schedule.advance(sim.events());
    }
  }
  finish(sim, out);
  return out;
}

SimReport replay(const Graph& g, const OpinionConfig& init, double epsilon,
                 std::span<const ScriptedEvent> script) {
  Simulator sim(g, init, epsilon, 0);
  SimReport out;
  std::uint64_t index = 0;
  out.opinion_trace.push_back({0.0, 0, sim.distinct_opinions()});
  if (epsilon > 0.5) out.extremist_trace.push_back({0.0, 0, sim.extremists()});
  for (const ScriptedEvent& ev : script) {
    sim.apply(ev.edge, ev.direction);
    ++index;
    out.opinion_trace.push_back({static_cast<double>(index), sim.events(), sim.distinct_opinions()});
    if (epsilon > 0.5) {
      out.extremist_trace.push_back({static_cast<double>(index), sim.events(), sim.extremists()});
    }
  }
  out.final_opinions = sim.config();
  out.time = static_cast<double>(index);
  out.events = sim.events();
  out.absorbed = sim.absorbed();
  return out;
}

}  // namespace cvm
