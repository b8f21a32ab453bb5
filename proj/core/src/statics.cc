#include "cvm/statics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "cvm/error.hpp"

namespace cvm {

std::size_t complete_index(std::size_t n, double eps) {
  check_epsilon(eps);
  if (eps == 0.0) return n;
  return std::min(n, ceil_inverse(eps));
}

OpinionConfig coloring_construction(const Graph& g, const Coloring& col, double eps) {
  check_epsilon(eps);
  if (eps >= 1.0) throw ValidationError("coloring construction needs epsilon < 1");
  if (!is_proper(g, col)) throw ValidationError("coloring is not proper");
  const std::size_t n = g.n_vertices();
  if (n == 0) return {};
  const auto nd = static_cast<double>(n);
  const std::uint32_t c = col.n_colors;
  std::vector<double> values(n);

  // Vertex v plays x_i with i = v + 1.
  if (c == 1 || eps < 1.0 / (c - 1)) {
    if (c == 1) {
      const double alpha = 1.0 / (4.0 * nd);
      for (std::size_t v = 0; v < n; ++v) values[v] = static_cast<double>(v + 1) * alpha;
      return OpinionConfig(std::move(values));
    }
    const double gap = 1.0 / (c - 1);
    // Half of the largest alpha with eps + 2 N alpha < gap.
    const double alpha = (gap - eps) / (2.0 * nd) / 2.0;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint32_t j = col.colors[v] + 1;
      const double i_alpha = static_cast<double>(v + 1) * alpha;
      values[v] = j == c ? 1.0 - i_alpha : (j - 1) * gap + i_alpha;
    }
    return OpinionConfig(std::move(values));
  }

  const auto sizes = col.class_sizes();
  const auto j0 = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  // Half of the largest alpha with eps + N alpha < 1.
  const double alpha = (1.0 - eps) / nd / 2.0;
  for (std::size_t v = 0; v < n; ++v) {
    values[v] = col.colors[v] == j0 ? static_cast<double>(v + 1) * alpha : 1.0;
  }
  return OpinionConfig(std::move(values));
}

namespace {

// Complete-graph witness on the vertex set of g: vertex j gets
// min(j / (m - 1), 1) with m = min(N, ceil(1/eps)).
OpinionConfig complete_witness(std::size_t n, double eps) {
  const std::size_t m = complete_index(n, eps);
  std::vector<double> values(n, 0.0);
  if (m > 1) {
    for (std::size_t j = 0; j < n; ++j) {
      values[j] = std::min(static_cast<double>(j) / static_cast<double>(m - 1), 1.0);
    }
  }
  return OpinionConfig(std::move(values));
}

}  // namespace

LowerBound index_lower_bound(const Graph& g, double eps) {
  check_epsilon(eps);
  LowerBound best;
  if (g.n_vertices() == 0) return best;

  best.witness = complete_witness(g.n_vertices(), eps);
  best.value = count_opinions(best.witness);

  if (eps < 1.0) {
    const bool exact = g.n_vertices() <= kExactColoringLimit;
    const Coloring col = exact ? chromatic_number_exact(g) : greedy_coloring(g);
    OpinionConfig witness = coloring_construction(g, col, eps);
    const std::size_t value = count_opinions(witness);
    if (value >= best.value) {
      best.value = value;
      best.witness = std::move(witness);
    }
    best.exact_coloring = exact;
  }
  return best;
}

namespace {

std::size_t peel_minimum(std::span<const std::uint32_t> adj, std::uint32_t mask, std::size_t J,
                         std::vector<std::size_t>& memo) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  if (mask == 0) return 0;
  if (memo[mask] != kUnset) return memo[mask];
  std::size_t best = kUnset;
  for (std::uint32_t clique : maximum_cliques(adj, mask)) {
    const auto size = static_cast<std::size_t>(std::popcount(clique));
    best = std::min(best, std::min(size, J) + peel_minimum(adj, mask & ~clique, J, memo));
  }
  return memo[mask] = best;
}

}  // namespace

std::size_t clique_upper_bound(const Graph& g, double eps, PeelMode mode) {
  check_epsilon(eps);
  if (eps == 0.0) return g.n_vertices();
  const std::size_t J = ceil_inverse(eps);
  if (mode == PeelMode::exact_enumerate) {
    if (g.n_vertices() > kPeelEnumerationLimit) {
      throw SizeLimitError("exact peel minimization limited to " +
                           std::to_string(kPeelEnumerationLimit) + " vertices");
    }
    const auto adj = adjacency_masks(g);
    const std::uint32_t all = (std::uint32_t{1} << g.n_vertices()) - 1;
    std::vector<std::size_t> memo(std::size_t{1} << g.n_vertices(),
                                  std::numeric_limits<std::size_t>::max());
    return peel_minimum(adj, all, J, memo);
  }
  std::size_t total = 0;
  for (const auto& clique : clique_peel(g).cliques) total += std::min(clique.size(), J);
  return total;
}

IndexBounds index_bounds(const Graph& g, double eps) {
  IndexBounds out;
  LowerBound lower = index_lower_bound(g, eps);
  out.lower = lower.value;
  out.lower_witness = std::move(lower.witness);
  out.exact_coloring = lower.exact_coloring;
  out.exact_peel = g.n_vertices() <= kPeelEnumerationLimit;
  out.upper = clique_upper_bound(g, eps, out.exact_peel ? PeelMode::exact_enumerate
                                                        : PeelMode::greedy);
  if (g.n_vertices() <= kBruteForceLimit) {
    BruteForceIndex exact = brute_force_index(g, eps);
    out.exact = exact.index;
    out.exact_witness = std::move(exact.witness);
  }
  return out;
}

}  // namespace cvm
