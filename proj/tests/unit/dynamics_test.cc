#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cvm/error.hpp"
#include "cvm/simulator.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using cvm::Graph;
using cvm::OpinionConfig;
using cvm::SimParams;

SimParams absorbing(double eps, std::uint64_t seed) {
  SimParams p;
  p.epsilon = eps;
  p.seed = seed;
  return p;
}

TEST(RandomInitial, RangeDistinctAndDeterministic) {
  const auto a = cvm::random_initial(cvm::make_path(1000), 42);
  const auto b = cvm::random_initial(cvm::make_path(1000), 42);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, cvm::random_initial(cvm::make_path(1000), 43));
  EXPECT_TRUE(std::all_of(a.begin(), a.end(), [](double v) { return v >= 0.0 && v <= 1.0; }));
  EXPECT_EQ(cvm::count_opinions(a), 1000u);
  double mean = 0.0;
  for (double v : a) mean += v / 1000.0;
  EXPECT_NEAR(mean, 0.5, 0.05);
}

TEST(OpinionConfig, Validation) {
  EXPECT_THROW(OpinionConfig({0.5, 1.2}), cvm::ValidationError);
  EXPECT_THROW(OpinionConfig({-0.1}), cvm::ValidationError);
  EXPECT_THROW(OpinionConfig({std::nan("")}), cvm::ValidationError);
  EXPECT_THROW(cvm::check_epsilon(1.5), cvm::ValidationError);
  EXPECT_THROW(cvm::check_epsilon(-0.01), cvm::ValidationError);
  EXPECT_NO_THROW(cvm::check_epsilon(0.0));
  EXPECT_NO_THROW(cvm::check_epsilon(1.0));
}

TEST(CeilInverse, SnapsNearIntegers) {
  EXPECT_EQ(cvm::ceil_inverse(0.3), 4u);
  EXPECT_EQ(cvm::ceil_inverse(1.0), 1u);
  EXPECT_EQ(cvm::ceil_inverse(0.5), 2u);
  EXPECT_EQ(cvm::ceil_inverse(1.0 / 3.0), 3u);
  EXPECT_EQ(cvm::ceil_inverse(0.1), 10u);
  EXPECT_EQ(cvm::ceil_inverse(0.15), 7u);
}

TEST(IsAbsorbing, Examples) {
  const Graph p3 = cvm::make_path(3);
  EXPECT_TRUE(cvm::is_absorbing(p3, OpinionConfig{0, 1, 0}, 0.5));
  EXPECT_FALSE(cvm::is_absorbing(p3, OpinionConfig{0, 0.3, 1}, 0.5));
  for (double eps : {0.0, 0.3, 1.0}) {
    EXPECT_TRUE(cvm::is_absorbing(cvm::make_complete(5), OpinionConfig{.4, .4, .4, .4, .4}, eps));
  }
  // Separation exactly eps does not interact.
  EXPECT_TRUE(cvm::is_absorbing(cvm::make_path(2), OpinionConfig{0.25, 0.75}, 0.5));
}

TEST(CountOpinions, Examples) {
  EXPECT_EQ(cvm::count_opinions(OpinionConfig{0.2, 0.2, 0.7}), 2u);
  EXPECT_EQ(cvm::count_opinions(OpinionConfig{0.5, 0.5, 0.5, 0.5}), 1u);
  EXPECT_EQ(cvm::count_opinions(OpinionConfig{0.1, 0.2, 0.3, 0.4}), 4u);
}

TEST(ExtremistCount, Examples) {
  EXPECT_EQ(cvm::extremist_count(OpinionConfig{0.1, 0.3, 0.9}, 0.75), 2u);
  EXPECT_EQ(cvm::extremist_count(OpinionConfig{0.5, 0.5, 0.5}, 0.75), 0u);
  EXPECT_THROW(cvm::extremist_count(OpinionConfig{0.5}, 0.5), cvm::ValidationError);
  EXPECT_THROW(cvm::extremist_count(OpinionConfig{0.5}, 0.3), cvm::ValidationError);
}

TEST(ExtremistCount, InitialMeanMatchesTwoOneMinusEpsN) {
  // theta_0 ~ Binomial(100, 0.5) at eps = 0.75.
  const std::size_t R = 10000;
  double sum = 0.0;
  double sq = 0.0;
  for (std::uint64_t s = 0; s < R; ++s) {
    const double t =
        static_cast<double>(cvm::extremist_count(cvm::random_initial(100, s), 0.75));
    sum += t;
    sq += t * t;
  }
  const double mean = sum / R;
  const double sd = std::sqrt((sq - R * mean * mean) / (R - 1));
  EXPECT_NEAR(mean, 2 * (1 - 0.75) * 100, 3 * sd / std::sqrt(R));
}

TEST(Simulate, FrozenAtZeroEpsilon) {
  for (const Graph& g : {cvm::make_path(10), cvm::make_torus(4, 4), cvm::make_complete(7)}) {
    const auto init = cvm::random_initial(g, 5);
    const auto r = cvm::simulate(g, init, absorbing(0.0, 1));
    EXPECT_EQ(r.events, 0u);
    EXPECT_TRUE(r.absorbed);
    EXPECT_EQ(r.final_opinions, init);
    EXPECT_EQ(r.time, 0.0);
  }
}

TEST(Simulate, NoActiveEdgeAbsorbsImmediately) {
  const auto r = cvm::simulate(cvm::make_path(3), OpinionConfig{0.1, 0.9, 0.5}, absorbing(0.3, 9));
  EXPECT_TRUE(r.absorbed);
  EXPECT_EQ(r.events, 0u);
  EXPECT_EQ(r.time, 0.0);
}

TEST(Simulate, FullThresholdReachesConsensus) {
  for (const auto& [name, g] : fixture::small_connected(12, 10, 4)) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto r = cvm::simulate(g, cvm::random_initial(g, s), absorbing(1.0, s));
      EXPECT_TRUE(r.absorbed) << name;
      EXPECT_EQ(cvm::count_opinions(r.final_opinions), 1u) << name;
    }
  }
}

TEST(Simulate, RejectsBadInput) {
  const Graph split(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(cvm::simulate(split, cvm::random_initial(4, 1), absorbing(0.5, 1)),
               cvm::ValidationError);
  EXPECT_THROW(cvm::simulate(cvm::make_path(3), cvm::random_initial(4, 1), absorbing(0.5, 1)),
               cvm::ValidationError);
  EXPECT_THROW(cvm::simulate(cvm::make_path(3), cvm::random_initial(3, 1), absorbing(1.5, 1)),
               cvm::ValidationError);
}

TEST(Simulate, Deterministic) {
  const Graph g = cvm::make_torus(8, 8);
  const auto init = cvm::random_initial(g, 11);
  SimParams p = absorbing(0.4, 99);
  p.t_max = 50.0;
  EXPECT_EQ(cvm::simulate(g, init, p), cvm::simulate(g, init, p));
  p.seed = 100;
  EXPECT_NE(cvm::simulate(g, init, p).final_opinions,
            cvm::simulate(g, init, absorbing(0.4, 99)).final_opinions);
}

TEST(Simulate, StopConditions) {
  const Graph g = cvm::make_torus(10, 10);
  const auto init = cvm::random_initial(g, 3);
  SimParams p = absorbing(0.5, 3);
  p.max_events = 25;
  auto r = cvm::simulate(g, init, p);
  EXPECT_EQ(r.events, 25u);
  EXPECT_FALSE(r.absorbed);

  p = absorbing(0.5, 3);
  p.t_max = 0.5;
  r = cvm::simulate(g, init, p);
  EXPECT_FALSE(r.absorbed);
  EXPECT_DOUBLE_EQ(r.time, 0.5);
}

TEST(Simulate, TracesAndValueProvenance) {
  const Graph g = cvm::make_torus(12, 12);
  const auto init = cvm::random_initial(g, 21);
  const std::set<double> initial(init.begin(), init.end());
  for (double eps : {0.3, 0.75}) {
    const auto r = cvm::simulate(g, init, absorbing(eps, 8));
    ASSERT_TRUE(r.absorbed);
    EXPECT_TRUE(cvm::is_absorbing(g, r.final_opinions, eps));
    for (double v : r.final_opinions) EXPECT_TRUE(initial.count(v));
    ASSERT_FALSE(r.opinion_trace.empty());
    EXPECT_EQ(r.opinion_trace.front().value, 144u);
    EXPECT_EQ(r.opinion_trace.back().value, cvm::count_opinions(r.final_opinions));
    EXPECT_EQ(r.opinion_trace.back().event, r.events);
    for (std::size_t i = 1; i < r.opinion_trace.size(); ++i) {
      EXPECT_LE(r.opinion_trace[i].value, r.opinion_trace[i - 1].value);
      EXPECT_GE(r.opinion_trace[i].time, r.opinion_trace[i - 1].time);
      EXPECT_GT(r.opinion_trace[i].event, r.opinion_trace[i - 1].event);
    }
    if (eps > 0.5) {
      ASSERT_FALSE(r.extremist_trace.empty());
      EXPECT_EQ(r.extremist_trace.back().value, cvm::extremist_count(r.final_opinions, eps));
    } else {
      EXPECT_TRUE(r.extremist_trace.empty());
    }
  }
}

TEST(Simulator, NotAbsorbingBeforeFinalEventAndCountersAgree) {
  const Graph g = cvm::make_cycle(30);
  const auto init = cvm::random_initial(g, 77);
  cvm::Simulator sim(g, init, 0.7, 5);
  while (auto ev = sim.step()) {
    const auto c = sim.config();
    EXPECT_EQ(sim.absorbed(), cvm::is_absorbing(g, c, 0.7));
    EXPECT_EQ(sim.distinct_opinions(), cvm::count_opinions(c));
    EXPECT_EQ(sim.extremists(), cvm::extremist_count(c, 0.7));
    EXPECT_EQ(c[ev->target], c[ev->source]);
    std::size_t holders = 0;
    for (double v : c) holders += v == init[3];
    EXPECT_EQ(sim.holders_of_initial(3), holders);
    std::size_t active = 0;
    for (const auto& e : g.edges()) active += cvm::interacts(c[e.tail], c[e.head], 0.7);
    EXPECT_EQ(sim.active_edges(), active);
  }
  EXPECT_TRUE(sim.absorbed());
}

TEST(Replay, CopyAndNoOp) {
  const cvm::ScriptedEvent fwd[] = {{0, +1}};
  EXPECT_EQ(cvm::replay(cvm::make_path(2), OpinionConfig{0.1, 0.2}, 0.5, fwd).final_opinions,
            (OpinionConfig{0.1, 0.1}));
  const auto r = cvm::replay(cvm::make_path(2), OpinionConfig{0.1, 0.9}, 0.5, fwd);
  EXPECT_EQ(r.final_opinions, (OpinionConfig{0.1, 0.9}));
  EXPECT_EQ(r.events, 0u);
  const cvm::ScriptedEvent back[] = {{0, -1}};
  EXPECT_EQ(cvm::replay(cvm::make_path(2), OpinionConfig{0.1, 0.2}, 0.5, back).final_opinions,
            (OpinionConfig{0.2, 0.2}));
  const cvm::ScriptedEvent bad[] = {{1, +1}};
  EXPECT_THROW(cvm::replay(cvm::make_path(2), OpinionConfig{0.1, 0.2}, 0.5, bad),
               cvm::ValidationError);
}

TEST(Replay, TreeCounterexampleReachesTwoOpinions) {
  const auto t = fixture::tree_counterexample();
  const auto& x = t.opinions;
  // A..E = 0..4
  EXPECT_LT(std::fabs(x[4] - x[0]), t.eps);
  EXPECT_LT(std::fabs(x[4] - x[1]), t.eps);
  EXPECT_LT(std::fabs(x[4] - x[2]), t.eps);
  EXPECT_LT(std::fabs(x[3] - x[0]), t.eps);
  EXPECT_GT(std::fabs(x[4] - x[3]), t.eps);
  const auto r = cvm::replay(t.graph, OpinionConfig(x), t.eps, t.script);
  EXPECT_EQ(r.events, t.script.size());
  EXPECT_TRUE(r.absorbed);
  EXPECT_TRUE(cvm::is_absorbing(t.graph, r.final_opinions, t.eps));
  EXPECT_EQ(cvm::count_opinions(r.final_opinions), 2u);
}

// The thinned simulator against a per-edge-clock simulation: compare the
// probability that a 6-cycle reaches consensus and the mean number of
// opinions at t = 0.5.
TEST(Simulate, AgreesWithFullClockConstruction) {
  const Graph g = cvm::make_cycle(6);
  const OpinionConfig init{0.05, 0.3, 0.45, 0.6, 0.8, 0.95};
  const double eps = 0.4;
  const std::size_t R = 4000;
  double cons_fast = 0, cons_full = 0, nu_fast = 0, nu_full = 0;
  for (std::uint64_t s = 0; s < R; ++s) {
    const auto fast = cvm::simulate(g, init, absorbing(eps, s));
    const auto full = oracle::harris_run(g, {init.begin(), init.end()}, eps, std::nullopt, s);
    cons_fast += cvm::count_opinions(fast.final_opinions) == 1;
    cons_full += cvm::count_opinions(full.opinions) == 1;
    SimParams p = absorbing(eps, s + R);
    p.t_max = 0.5;
    nu_fast += static_cast<double>(cvm::count_opinions(cvm::simulate(g, init, p).final_opinions));
    nu_full += static_cast<double>(
        cvm::count_opinions(oracle::harris_run(g, {init.begin(), init.end()}, eps, 0.5, s + R).opinions));
  }
  cons_fast /= R;
  cons_full /= R;
  nu_fast /= R;
  nu_full /= R;
  const double p = (cons_fast + cons_full) / 2;
  EXPECT_NEAR(cons_fast, cons_full, 4 * std::sqrt(2 * p * (1 - p) / R));
  // nu_t lies in [1, 6]; variance at most 6.25.
  EXPECT_NEAR(nu_fast, nu_full, 4 * std::sqrt(2 * 6.25 / R));
}

TEST(Simulate, AbsorptionLawMatchesExactChain) {
  const Graph g = cvm::make_path(3);
  const std::vector<double> init = {0.1, 0.3, 0.55};
  const auto exact = oracle::absorption_distribution(g, init, 0.3);
  double total = 0;
  for (const auto& [state, p] : exact) total += p;
  ASSERT_NEAR(total, 1.0, 1e-12);
  const std::size_t R = 20000;
  std::map<std::vector<double>, double> freq;
  for (std::uint64_t s = 0; s < R; ++s) {
    const auto r = cvm::simulate(g, OpinionConfig(init), absorbing(0.3, s));
    ASSERT_TRUE(r.absorbed);
    const auto v = r.final_opinions.values();
    freq[std::vector<double>(v.begin(), v.end())] += 1.0 / R;
  }
  for (const auto& [state, f] : freq) EXPECT_TRUE(exact.count(state));
  for (const auto& [state, p] : exact) {
    EXPECT_NEAR(freq[state], p, 4 * std::sqrt(p * (1 - p) / R) + 1e-9);
  }
}

}  // namespace
