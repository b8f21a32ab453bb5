#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvm/graph.hpp"
#include "cvm/simulator.hpp"

namespace fixture {

// Random spanning tree plus each remaining pair with probability p.
cvm::Graph random_connected(std::size_t n, double p, std::uint64_t seed);
cvm::Graph random_tree(std::size_t n, std::uint64_t seed);
// Arbitrary (possibly disconnected) graph, each pair with probability p.
cvm::Graph random_graph(std::size_t n, double p, std::uint64_t seed);

cvm::Graph petersen();

struct Named {
  std::string name;
  cvm::Graph graph;
};

// Paths and complete graphs on 1..max_n vertices, cycles on 3..max_n, and
// `n_random` random connected graphs on 2..max_n vertices.
std::vector<Named> small_connected(std::size_t max_n, std::size_t n_random, std::uint64_t seed);

// Five-vertex tree A-E, B-E, C-E, A-D (A..E = 0..4) with opinions satisfying
// |E-A|, |E-B|, |E-C|, |D-A| < eps < |E-D|, and an event script reaching an
// absorbing state with two opinions and two empty edges.
struct TreeCounterexample {
  cvm::Graph graph;
  std::vector<double> opinions;
  double eps;
  std::vector<cvm::ScriptedEvent> script;
};
TreeCounterexample tree_counterexample();

}  // namespace fixture
