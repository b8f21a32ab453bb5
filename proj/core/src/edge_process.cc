#include "cvm/edge_process.hpp"

#include <cmath>
#include <string>

#include "cvm/error.hpp"

namespace cvm {

EdgeWeightConfig weights_from_opinions(const Graph& g, std::span<const double> opinions) {
  if (opinions.size() != g.n_vertices()) {
    throw ValidationError("opinion count does not match vertex count");
  }
  EdgeWeightConfig out;
  out.weights.reserve(g.n_edges());
  for (const Edge& e : g.edges()) out.weights.push_back(opinions[e.head] - opinions[e.tail]);
  return out;
}

EdgeType classify_edge(double weight, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ValidationError("epsilon out of range");
  if (weight == 0.0) return {EdgeClass::empty, 0};
  const double a = std::abs(weight);
  const double below = std::floor(a / eps);
  // The quotient may round across an integer; test the neighbours exactly.
  for (double k : {below - 1.0, below, below + 1.0}) {
    if (k >= 1.0 && k * eps == a) return {EdgeClass::boundary, static_cast<std::size_t>(k)};
  }
  std::size_t j = static_cast<std::size_t>(below) + 1;
  if (static_cast<double>(j - 1) * eps > a) --j;
  else if (static_cast<double>(j) * eps < a) ++j;
  return {EdgeClass::typed, std::min(j, ceil_inverse(eps))};
}

std::size_t EdgeCensus::total() const noexcept {
  std::size_t sum = boundary;
  for (auto c : counts) sum += c;
  return sum;
}

EdgeCensus census(std::span<const double> weights, double eps) {
  EdgeCensus out;
  out.counts.assign(ceil_inverse(eps) + 1, 0);
  for (double w : weights) {
    const EdgeType t = classify_edge(w, eps);
    switch (t.kind) {
      case EdgeClass::empty: ++out.counts[0]; break;
      case EdgeClass::typed: ++out.counts[t.j]; break;
      case EdgeClass::boundary: ++out.boundary; break;
    }
  }
  return out;
}

namespace {

// Shift every other edge at `target` by the opinion change there.
void shift_incident(const Graph& g, std::span<double> weights, EdgeId edge, Vertex target,
                    double delta) {
  const auto nb = g.incident_edges(target);
  for (EdgeId other : nb) {
    if (other == edge) continue;
    if (g.edge(other).head == target) {
      weights[other] += delta;
    } else {
      weights[other] -= delta;
    }
  }
  weights[edge] = 0.0;
}

}  // namespace

bool apply_edge_event(const Graph& g, std::span<double> weights, EdgeId edge, int direction,
                      double eps) {
  if (weights.size() != g.n_edges()) throw ValidationError("weight count does not match edges");
  if (edge >= g.n_edges()) throw ValidationError("edge index out of range");
  if (direction != 1 && direction != -1) throw ValidationError("direction must be +1 or -1");
  const double w = weights[edge];
  if (w == 0.0 || !(std::abs(w) < eps)) return false;
  const Edge& e = g.edge(edge);
  // +1: head takes the tail opinion, its value changes by -w.
  // -1: tail takes the head opinion, its value changes by +w.
  if (direction > 0) {
    shift_incident(g, weights, edge, e.head, -w);
  } else {
    shift_incident(g, weights, edge, e.tail, w);
  }
  return true;
}

CoupledSimulator::CoupledSimulator(const Graph& g, const OpinionConfig& init, double epsilon,
                                   std::uint64_t seed)
    : sim_(g, init, epsilon, seed), weights_(weights_from_opinions(g, init).weights) {
  for (double w : weights_) empty_ += w == 0.0 ? 1 : 0;
}

void CoupledSimulator::propagate(const Event& ev) {
  const Graph& g = sim_.graph();
  const double w = weights_[ev.edge];
  const auto nb = g.incident_edges(ev.target);
  for (EdgeId other : nb) empty_ -= weights_[other] == 0.0 ? 1 : 0;
  shift_incident(g, weights_, ev.edge, ev.target, ev.direction > 0 ? -w : w);
  for (EdgeId other : nb) empty_ += weights_[other] == 0.0 ? 1 : 0;
}

std::optional<Event> CoupledSimulator::step(double time_limit) {
  auto ev = sim_.step(time_limit);
  if (ev) propagate(*ev);
  return ev;
}

bool CoupledSimulator::apply(EdgeId edge, int direction) {
  if (!sim_.apply(edge, direction)) return false;
  const Edge& e = sim_.graph().edge(edge);
  Event ev{sim_.time(), edge, direction, direction > 0 ? e.tail : e.head,
           direction > 0 ? e.head : e.tail};
  propagate(ev);
  return true;
}

CoupledReport simulate_coupled(const Graph& g, const OpinionConfig& init, const SimParams& p) {
  if (p.t_max && !(*p.t_max >= 0.0)) throw ValidationError("t_max must be non-negative");
  if (!(p.epsilon > 0.0)) throw ValidationError("edge census needs epsilon > 0");
  CoupledSimulator sim(g, init, p.epsilon, p.seed);
  const double limit = p.t_max.value_or(std::numeric_limits<double>::infinity());
  CoupledReport out;
  auto record = [&] {
    const Simulator& s = sim.opinions();
    out.sim.opinion_trace.push_back({s.time(), s.events(), s.distinct_opinions()});
    if (p.epsilon > 0.5) out.sim.extremist_trace.push_back({s.time(), s.events(), s.extremists()});
    out.trajectory.push_back(
        {s.time(), s.events(), EdgeWeightConfig{{sim.weights().begin(), sim.weights().end()}}});
    out.census_trace.push_back({s.time(), s.events(), sim.census()});
  };
  TraceSchedule schedule;
  record();
  schedule.advance(0);
  while (sim.opinions().events() < p.max_events && sim.step(limit)) {
    if (schedule.due(sim.opinions().events())) {
      record();
      schedule.advance(sim.opinions().events());
    }
  }
  const Simulator& s = sim.opinions();
  if (out.trajectory.back().event != s.events() || out.trajectory.back().time != s.time()) record();
  out.sim.final_opinions = s.config();
  out.sim.time = s.time();
  out.sim.events = s.events();
  out.sim.absorbed = s.absorbed();
  return out;
}

}  // namespace cvm
