#include <gtest/gtest.h>

#include <algorithm>

#include "cvm/coloring.hpp"
#include "cvm/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using cvm::Graph;

std::vector<Graph> small_graphs() {
  std::vector<Graph> out = {cvm::make_path(1), cvm::make_path(6), cvm::make_cycle(5),
                            cvm::make_cycle(6), cvm::make_complete(4), fixture::petersen(),
                            Graph(5, {})};
  for (std::uint64_t s = 0; s < 60; ++s) {
    out.push_back(fixture::random_graph(2 + s % 9, 0.2 + 0.01 * static_cast<double>(s), s));
  }
  return out;
}

bool is_clique(const Graph& g, const std::vector<cvm::Vertex>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!g.adjacent(c[i], c[j])) return false;
    }
  }
  return true;
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(cvm::chromatic_number_exact(cvm::make_complete(4)).n_colors, 4u);
  EXPECT_EQ(cvm::chromatic_number_exact(cvm::make_cycle(5)).n_colors, 3u);
  EXPECT_EQ(cvm::chromatic_number_exact(cvm::make_path(6)).n_colors, 2u);
  EXPECT_EQ(cvm::chromatic_number_exact(fixture::petersen()).n_colors, 3u);
  EXPECT_EQ(cvm::chromatic_number_exact(Graph(3, {})).n_colors, 1u);
}

TEST(Chromatic, SizeLimit) {
  EXPECT_THROW(cvm::chromatic_number_exact(cvm::make_path(17)), cvm::SizeLimitError);
  EXPECT_NO_THROW(cvm::chromatic_number_exact(cvm::make_path(17), 20));
}

TEST(Chromatic, MatchesExhaustiveOracle) {
  for (const auto& g : small_graphs()) {
    if (g.n_vertices() > 8) continue;
    const auto c = cvm::chromatic_number_exact(g);
    EXPECT_TRUE(cvm::is_proper(g, c));
    EXPECT_EQ(c.n_colors, oracle::chromatic_number(g)) << cvm::render_graph(g);
  }
}

TEST(Chromatic, BipartiteIffAtMostTwoColors) {
  for (const auto& g : small_graphs()) {
    if (g.n_edges() == 0) continue;
    EXPECT_EQ(cvm::is_bipartite(g), cvm::chromatic_number_exact(g).n_colors <= 2);
  }
}

TEST(Greedy, ProperAndNoBetterThanExact) {
  for (const auto& g : small_graphs()) {
    const auto greedy = cvm::greedy_coloring(g);
    EXPECT_TRUE(cvm::is_proper(g, greedy));
    EXPECT_GE(greedy.n_colors, cvm::chromatic_number_exact(g).n_colors);
  }
}

TEST(Coloring, ClassSizesAndProperness) {
  const cvm::Coloring c{{0, 1, 0, 1, 2}, 3};
  EXPECT_EQ(c.class_sizes(), (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_TRUE(cvm::is_proper(cvm::make_cycle(5), c));
  EXPECT_FALSE(cvm::is_proper(cvm::make_cycle(5), cvm::Coloring{{0, 1, 0, 1, 0}, 2}));
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(cvm::max_clique(cvm::make_complete(6), cvm::CliqueMode::exact).size(), 6u);
  EXPECT_EQ(cvm::max_clique(cvm::make_cycle(5), cvm::CliqueMode::exact).size(), 2u);
  EXPECT_EQ(cvm::max_clique(cvm::make_path(4), cvm::CliqueMode::exact).size(), 2u);
  EXPECT_TRUE(cvm::max_clique(Graph(0, {}), cvm::CliqueMode::exact).empty());
  EXPECT_THROW(cvm::max_clique(cvm::make_path(33), cvm::CliqueMode::exact), cvm::SizeLimitError);
}

TEST(MaxClique, ExactMatchesOracleAndBoundsChromatic) {
  for (const auto& g : small_graphs()) {
    const auto exact = cvm::max_clique(g, cvm::CliqueMode::exact);
    const auto greedy = cvm::max_clique(g, cvm::CliqueMode::greedy);
    EXPECT_TRUE(is_clique(g, exact));
    EXPECT_TRUE(is_clique(g, greedy));
    EXPECT_EQ(exact.size(), oracle::clique_number(g));
    EXPECT_LE(greedy.size(), exact.size());
    EXPECT_LE(exact.size(), cvm::chromatic_number_exact(g).n_colors);
  }
}

std::vector<std::vector<std::size_t>> peel_size_sets(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : cvm::enumerate_clique_peels(g)) out.push_back(p.sizes());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TEST(Peel, CompleteGraphIsOneClique) {
  const auto peel = cvm::clique_peel(cvm::make_complete(6));
  EXPECT_EQ(peel.sizes(), (std::vector<std::size_t>{6}));
  EXPECT_EQ(peel.residual, 0u);
}

TEST(Peel, PathFourChoices) {
  // Taking the middle edge first strands two single vertices.
  EXPECT_EQ(peel_size_sets(cvm::make_path(4)),
            (std::vector<std::vector<std::size_t>>{{2, 1, 1}, {2, 2}}));
}

TEST(Peel, CycleFiveAlwaysTwoTwoOne) {
  EXPECT_EQ(peel_size_sets(cvm::make_cycle(5)),
            (std::vector<std::vector<std::size_t>>{{2, 2, 1}}));
}

TEST(Peel, StructuralInvariants) {
  std::vector<Graph> graphs = small_graphs();
  graphs.push_back(cvm::make_torus(6, 6));
  graphs.push_back(fixture::random_graph(40, 0.1, 3));
  for (const auto& g : graphs) {
    const auto peel = cvm::clique_peel(g);
    std::vector<int> seen(g.n_vertices(), 0);
    for (const auto& clique : peel.cliques) {
      EXPECT_TRUE(is_clique(g, clique));
      for (auto v : clique) ++seen[v];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    EXPECT_EQ(peel.residual, 0u);
  }
}

TEST(Peel, EnumerationSizeLimit) {
  EXPECT_THROW(cvm::enumerate_clique_peels(cvm::make_path(13)), cvm::SizeLimitError);
}

}  // namespace
