#include "fixtures.hpp"

#include <algorithm>
#include <random>

namespace fixture {

using Pairs = std::vector<std::pair<cvm::Vertex, cvm::Vertex>>;

cvm::Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Pairs edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.emplace_back(static_cast<cvm::Vertex>(parent(gen)), static_cast<cvm::Vertex>(v));
  }
  return cvm::Graph(n, edges);
}

cvm::Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Pairs edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.emplace_back(static_cast<cvm::Vertex>(parent(gen)), static_cast<cvm::Vertex>(v));
  }
  std::bernoulli_distribution extra(p);
  for (cvm::Vertex i = 0; i < n; ++i) {
    for (cvm::Vertex j = i + 1; j < n; ++j) {
      const bool present = std::find(edges.begin(), edges.end(), std::pair{i, j}) != edges.end();
      if (!present && extra(gen)) edges.emplace_back(i, j);
    }
  }
  return cvm::Graph(n, edges);
}

cvm::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution keep(p);
  Pairs edges;
  for (cvm::Vertex i = 0; i < n; ++i) {
    for (cvm::Vertex j = i + 1; j < n; ++j) {
      if (keep(gen)) edges.emplace_back(i, j);
    }
  }
  return cvm::Graph(n, edges);
}

cvm::Graph petersen() {
  return cvm::Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

std::vector<Named> small_connected(std::size_t max_n, std::size_t n_random, std::uint64_t seed) {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    out.push_back({"P" + std::to_string(n), cvm::make_path(n)});
    if (n >= 3) out.push_back({"C" + std::to_string(n), cvm::make_cycle(n)});
    if (n >= 3) out.push_back({"K" + std::to_string(n), cvm::make_complete(n)});
  }
  std::mt19937_64 gen(seed);
  for (std::size_t i = 0; i < n_random; ++i) {
    const std::size_t n = 2 + gen() % (max_n - 1);
    const double p = 0.15 + 0.6 * static_cast<double>(gen() % 1000) / 1000.0;
    out.push_back({"R" + std::to_string(i) + "_n" + std::to_string(n),
                   random_connected(n, p, gen())});
  }
  return out;
}

TreeCounterexample tree_counterexample() {
  constexpr cvm::Vertex A = 0, B = 1, C = 2, D = 3, E = 4;
  TreeCounterexample t{cvm::Graph(5, {{A, E}, {B, E}, {C, E}, {A, D}}),
                       {0.35, 0.05, 0.15, 0.55, 0.2},
                       0.3,
                       {}};
  // Edge ids follow construction order: 0 = AE, 1 = BE, 2 = CE, 3 = AD.
  t.script = {{2, +1}, {1, -1}, {0, +1}, {3, -1}, {0, +1}};
  return t;
}

}  // namespace fixture
