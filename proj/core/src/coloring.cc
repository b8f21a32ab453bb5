#include "cvm/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cvm/error.hpp"

namespace cvm {

std::vector<std::size_t> Coloring::class_sizes() const {
  std::vector<std::size_t> sizes(n_colors, 0);
  for (auto c : colors) ++sizes[c];
  return sizes;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.n_vertices()) return false;
  std::vector<char> used(c.n_colors, 0);
  for (auto color : c.colors) {
    if (color >= c.n_colors) return false;
    used[color] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) return false;
  for (const Edge& e : g.edges()) {
    if (c.colors[e.tail] == c.colors[e.head]) return false;
  }
  return true;
}

namespace {

// Backtracking k-colorability over a fixed vertex order. A vertex may open at
// most one new color beyond those already in use.
class KColoring {
 public:
  KColoring(const Graph& g, std::uint32_t k) : g_(g), k_(k), color_(g.n_vertices(), kNone) {
    order_.resize(g.n_vertices());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  bool solve() { return assign(0, 0); }
  const std::vector<std::uint32_t>& colors() const { return color_; }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  bool assign(std::size_t pos, std::uint32_t used) {
    if (pos == order_.size()) return true;
    const Vertex v = order_[pos];
    const std::uint32_t limit = std::min(k_, used + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      bool clash = false;
      for (Vertex w : g_.neighbors(v)) {
        if (color_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[v] = c;
      if (assign(pos + 1, std::max(used, c + 1))) return true;
    }
    color_[v] = kNone;
    return false;
  }

  const Graph& g_;
  std::uint32_t k_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> color_;
};

}  // namespace

Coloring chromatic_number_exact(const Graph& g, std::size_t limit) {
  if (g.n_vertices() > limit) {
    throw SizeLimitError("exact coloring limited to " + std::to_string(limit) + " vertices, got " +
                         std::to_string(g.n_vertices()));
  }
  if (g.n_vertices() == 0) return {};
  const auto lower = static_cast<std::uint32_t>(g.n_edges() > 0 ? 2 : 1);
  const Coloring upper = greedy_coloring(g);
  for (std::uint32_t k = lower; k < upper.n_colors; ++k) {
    KColoring search(g, k);
    if (search.solve()) return Coloring{search.colors(), k};
  }
  return upper;
}

Coloring greedy_coloring(const Graph& g) {
  const std::size_t n = g.n_vertices();
  Coloring out;
  out.colors.assign(n, 0);
  if (n == 0) return out;

  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> color(n, kNone);
  std::vector<std::vector<char>> seen(n);  // neighbor colors per vertex
  std::vector<std::size_t> saturation(n, 0);
  std::uint32_t n_colors = 0;

  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != kNone) continue;
      if (!found || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick))) {
        pick = v;
        found = true;
      }
    }
    std::uint32_t c = 0;
    while (c < seen[pick].size() && seen[pick][c]) ++c;
    color[pick] = c;
    n_colors = std::max(n_colors, c + 1);
    for (Vertex w : g.neighbors(pick)) {
      if (color[w] != kNone) continue;
      if (seen[w].size() <= c) seen[w].resize(c + 1, 0);
      if (!seen[w][c]) {
        seen[w][c] = 1;
        ++saturation[w];
      }
    }
  }
  out.colors = std::move(color);
  out.n_colors = n_colors;
  return out;
}

}  // namespace cvm
