#include <algorithm>
#include <bit>
#include <string>

#include "cvm/coloring.hpp"
#include "cvm/error.hpp"

namespace cvm {

std::vector<std::size_t> CliquePeel::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) out.push_back(c.size());
  return out;
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.n_vertices() > 32) {
    throw SizeLimitError("bitmask adjacency limited to 32 vertices");
  }
  std::vector<std::uint32_t> adj(g.n_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.tail] |= std::uint32_t{1} << e.head;
    adj[e.head] |= std::uint32_t{1} << e.tail;
  }
  return adj;
}

namespace {

int lowest(std::uint32_t m) { return std::countr_zero(m); }

// Bron-Kerbosch with pivoting. Calls visit(R) for every maximal clique R
// whose size can still reach `floor` (cliques that cannot are pruned).
template <typename Visit>
void bron_kerbosch(std::span<const std::uint32_t> adj, std::uint32_t r, std::uint32_t p,
                   std::uint32_t x, const int& floor, Visit& visit) {
  if (std::popcount(r) + std::popcount(p) < floor) return;
  if (p == 0) {
    if (x == 0) visit(r);
    return;
  }
  const std::uint32_t px = p | x;
  int pivot = lowest(px);
  int best = -1;
  for (std::uint32_t m = px; m; m &= m - 1) {
    const int u = lowest(m);
    const int cover = std::popcount(p & adj[u]);
    if (cover > best) {
      best = cover;
      pivot = u;
    }
  }
  for (std::uint32_t m = p & ~adj[pivot]; m; m &= m - 1) {
    const int v = lowest(m);
    const std::uint32_t bit = std::uint32_t{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], floor, visit);
    p &= ~bit;
    x |= bit;
  }
}

std::uint32_t max_clique_mask(std::span<const std::uint32_t> adj, std::uint32_t mask) {
  std::uint32_t best = 0;
  int floor = 1;
  auto visit = [&](std::uint32_t r) {
    if (std::popcount(r) > std::popcount(best) ||
        (std::popcount(r) == std::popcount(best) && r < best)) {
      best = r;
      floor = std::popcount(r);
    }
  };
  bron_kerbosch(adj, 0, mask, 0, floor, visit);
  return best;
}

std::vector<Vertex> mask_to_vertices(std::uint32_t m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(lowest(m)));
  return out;
}

std::uint32_t all_vertices(std::size_t n) {
  return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

// Greedy maximal clique among vertices with alive[v] set.
std::vector<Vertex> greedy_clique(const Graph& g, const std::vector<char>& alive) {
  Vertex start = 0;
  std::size_t best_degree = 0;
  bool found = false;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    if (!alive[v]) continue;
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v)) d += alive[w] ? 1 : 0;
    if (!found || d > best_degree) {
      start = v;
      best_degree = d;
      found = true;
    }
  }
  if (!found) return {};

  std::vector<Vertex> clique{start};
  std::vector<Vertex> candidates;
  for (Vertex w : g.neighbors(start)) {
    if (alive[w]) candidates.push_back(w);
  }
  std::sort(candidates.begin(), candidates.end());
  while (!candidates.empty()) {
    // Candidate with most neighbors among the remaining candidates.
    std::size_t pick = 0;
    std::size_t pick_score = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::size_t score = 0;
      for (Vertex w : candidates) score += g.adjacent(candidates[i], w) ? 1 : 0;
      if (i == 0 || score > pick_score) {
        pick = i;
        pick_score = score;
      }
    }
    const Vertex v = candidates[pick];
    clique.push_back(v);
    std::vector<Vertex> next;
    for (Vertex w : candidates) {
      if (w != v && g.adjacent(v, w)) next.push_back(w);
    }
    candidates = std::move(next);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace

std::vector<std::uint32_t> maximum_cliques(std::span<const std::uint32_t> adj,
                                           std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  if (mask == 0) return out;
  int floor = 1;
  auto visit = [&](std::uint32_t r) {
    const int size = std::popcount(r);
    if (size > floor) {
      floor = size;
      out.clear();
    }
    if (size == floor) out.push_back(r);
  };
  bron_kerbosch(adj, 0, mask, 0, floor, visit);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> max_clique(const Graph& g, CliqueMode mode) {
  if (g.n_vertices() == 0) return {};
  if (mode == CliqueMode::exact) {
    if (g.n_vertices() > kExactCliqueLimit) {
      throw SizeLimitError("exact clique search limited to " + std::to_string(kExactCliqueLimit) +
                           " vertices");
    }
    const auto adj = adjacency_masks(g);
    return mask_to_vertices(max_clique_mask(adj, all_vertices(g.n_vertices())));
  }
  return greedy_clique(g, std::vector<char>(g.n_vertices(), 1));
}

CliquePeel clique_peel(const Graph& g) {
  CliquePeel peel;
  std::vector<char> alive(g.n_vertices(), 1);
  std::size_t remaining = g.n_vertices();
  while (remaining > 0) {
    std::vector<Vertex> clique;
    if (remaining <= kExactCliqueLimit) {
      std::vector<Vertex> keep;
      for (Vertex v = 0; v < g.n_vertices(); ++v) {
        if (alive[v]) keep.push_back(v);
      }
      const Graph residual = g.induced_subgraph(keep);
      for (Vertex local : max_clique(residual, CliqueMode::exact)) clique.push_back(keep[local]);
    } else {
      clique = greedy_clique(g, alive);
    }
    for (Vertex v : clique) alive[v] = 0;
    remaining -= clique.size();
    peel.cliques.push_back(std::move(clique));
  }
  return peel;
}

namespace {

void enumerate_peels(std::span<const std::uint32_t> adj, std::uint32_t mask,
                     std::vector<std::vector<Vertex>>& prefix, std::vector<CliquePeel>& out) {
  if (mask == 0) {
    out.push_back(CliquePeel{prefix, 0});
    return;
  }
  for (std::uint32_t clique : maximum_cliques(adj, mask)) {
    prefix.push_back(mask_to_vertices(clique));
    enumerate_peels(adj, mask & ~clique, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CliquePeel> enumerate_clique_peels(const Graph& g, std::size_t limit) {
  if (g.n_vertices() > limit) {
    throw SizeLimitError("peel enumeration limited to " + std::to_string(limit) + " vertices");
  }
  std::vector<CliquePeel> out;
  std::vector<std::vector<Vertex>> prefix;
  const auto adj = adjacency_masks(g);
  enumerate_peels(adj, all_vertices(g.n_vertices()), prefix, out);
  return out;
}

}  // namespace cvm
