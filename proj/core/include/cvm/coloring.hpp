#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cvm/graph.hpp"

namespace cvm {

// Proper vertex coloring with colors 0..n_colors-1, every color used.
struct Coloring {
  std::vector<std::uint32_t> colors;
  std::uint32_t n_colors = 0;

  // Vertex count per color.
  std::vector<std::size_t> class_sizes() const;
};

bool is_proper(const Graph& g, const Coloring& c);

inline constexpr std::size_t kExactColoringLimit = 16;
inline constexpr std::size_t kExactCliqueLimit = 32;
inline constexpr std::size_t kPeelEnumerationLimit = 12;

// Minimum coloring by branch and bound. The witness has exactly chi(G)
// colors. Throws SizeLimitError above `limit` vertices.
Coloring chromatic_number_exact(const Graph& g, std::size_t limit = kExactColoringLimit);

// DSATUR; proper but not necessarily optimal.
Coloring greedy_coloring(const Graph& g);

enum class CliqueMode { exact, greedy };

// exact: a maximum clique (n_vertices <= 32, else SizeLimitError).
// greedy: a maximal clique grown from a highest-degree vertex.
// Returned vertices are sorted ascending. Empty graph yields {}.
std::vector<Vertex> max_clique(const Graph& g, CliqueMode mode);

struct CliquePeel {
  std::vector<std::vector<Vertex>> cliques;  // in peel order, original ids
  std::size_t residual = 0;                  // vertices left unpeeled

  std::vector<std::size_t> sizes() const;
};

// One peel sequence. Each step removes a maximum clique of the residual
// graph when the residual has at most 32 vertices, otherwise a greedy
// maximal clique.
CliquePeel clique_peel(const Graph& g);

// Every distinct peel sequence obtained by removing some maximum clique at
// each step. Throws SizeLimitError above `limit` vertices.
std::vector<CliquePeel> enumerate_clique_peels(const Graph& g,
                                               std::size_t limit = kPeelEnumerationLimit);

// All maximum cliques of the subgraph induced by `mask` (bit v = vertex v),
// given per-vertex neighbor masks. Used by peel enumeration and the statics
// minimization.
std::vector<std::uint32_t> maximum_cliques(std::span<const std::uint32_t> adjacency,
                                           std::uint32_t mask);
std::vector<std::uint32_t> adjacency_masks(const Graph& g);

}  // namespace cvm
