#pragma once

#include <cstddef>
#include <optional>

#include "cvm/coloring.hpp"
#include "cvm/graph.hpp"
#include "cvm/opinions.hpp"

namespace cvm {

// Bounds on the opinion index mu_eps(G), the largest number of distinct
// opinions an absorbing configuration of G can hold. Absorbing here uses
// strict separation: adjacent unequal opinions differ by more than eps.
struct IndexBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> exact;
  OpinionConfig lower_witness;
  std::optional<OpinionConfig> exact_witness;
  bool exact_coloring = false;  // lower bound used an optimal coloring
  bool exact_peel = false;      // upper bound minimized over all peels
};

// min(n, ceil(1/eps)); n when eps == 0.
std::size_t complete_index(std::size_t n, double eps);

// Absorbing configuration built from a proper coloring with c colors:
// all N opinions distinct when eps < 1/(c-1), otherwise the largest color
// class gets distinct small values and every other vertex gets 1.
// Throws ValidationError for eps >= 1 or an improper coloring.
OpinionConfig coloring_construction(const Graph& g, const Coloring& col, double eps);

struct LowerBound {
  std::size_t value = 0;
  OpinionConfig witness;
  bool exact_coloring = false;
};

// Best of the coloring constructions and the complete-graph comparison
// min(N, ceil(1/eps)). Uses an exact coloring up to 16 vertices, DSATUR
// beyond.
LowerBound index_lower_bound(const Graph& g, double eps);

enum class PeelMode { exact_enumerate, greedy };

// Sum over a clique peel of min(|clique|, ceil(1/eps)). exact_enumerate
// minimizes over every maximum-clique choice (<= 12 vertices); greedy
// evaluates the single clique_peel() sequence. N when eps == 0.
std::size_t clique_upper_bound(const Graph& g, double eps, PeelMode mode);

inline constexpr std::size_t kBruteForceLimit = 8;

struct BruteForceIndex {
  std::size_t index = 0;
  OpinionConfig witness;
};

// Exact mu_eps(G) by enumerating partitions of V into equal-opinion classes
// and total orders of the classes. For a fixed order the tightest span is
// eps times the longest chain of quotient edges; the partition is feasible
// iff that span is below 1. Throws SizeLimitError above 8 vertices.
BruteForceIndex brute_force_index(const Graph& g, double eps);

// Lower and upper bounds, plus the exact index when the graph is small
// enough for brute force.
IndexBounds index_bounds(const Graph& g, double eps);

}  // namespace cvm
