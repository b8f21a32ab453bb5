#include "cvm/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "cvm/error.hpp"

namespace cvm {

Graph::Graph(std::size_t n_vertices, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_vertices_(n_vertices) {
  if (n_vertices > std::numeric_limits<Vertex>::max()) {
    throw ValidationError("graph too large");
  }
  edges_.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (auto [a, b] : edges) {
    if (a >= n_vertices || b >= n_vertices) {
      throw ValidationError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") out of range for " + std::to_string(n_vertices) + " vertices");
    }
    if (a == b) {
      throw ValidationError("self-loop at vertex " + std::to_string(a));
    }
    const Edge e{std::min(a, b), std::max(a, b)};
    const auto key = (static_cast<std::uint64_t>(e.tail) << 32) | e.head;
    if (!seen.insert(key).second) {
      throw ValidationError("duplicate edge (" + std::to_string(e.tail) + ", " +
                            std::to_string(e.head) + ")");
    }
    edges_.push_back(e);
  }
  build();
}

Graph::Graph(std::size_t n_vertices, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n_vertices, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

void Graph::build() {
  offsets_.assign(n_vertices_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.tail + 1];
    ++offsets_[e.head + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  neighbors_.resize(2 * edges_.size());
  incident_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    neighbors_[fill[e.tail]] = e.head;
    incident_[fill[e.tail]++] = id;
    neighbors_[fill[e.head]] = e.tail;
    incident_[fill[e.head]++] = id;
  }

  if (n_vertices_ == 0) {
    connected_ = true;
    return;
  }
  std::vector<char> seen(n_vertices_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  connected_ = reached == n_vertices_;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_vertices_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (u >= n_vertices_ || v >= n_vertices_) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

Graph Graph::induced_subgraph(std::span<const Vertex> keep) const {
  std::vector<std::int64_t> index(n_vertices_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n_vertices_ || index[keep[i]] >= 0) {
      throw ValidationError("induced_subgraph: invalid or repeated vertex");
    }
    index[keep[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> sub;
  for (const Edge& e : edges_) {
    if (index[e.tail] >= 0 && index[e.head] >= 0) {
      sub.emplace_back(static_cast<Vertex>(index[e.tail]), static_cast<Vertex>(index[e.head]));
    }
  }
  return Graph(keep.size(), sub);
}

Graph make_path(std::size_t n) {
  if (n < 1) throw ValidationError("path needs at least 1 vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw ValidationError("cycle length must be at least 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n);
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

Graph make_complete(std::size_t n) {
  if (n < 1) throw ValidationError("complete graph needs at least 1 vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph make_torus(std::size_t width, std::size_t height) {
  if (width < 3 || height < 3) {
    throw ValidationError("torus dimensions must be at least 3");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(2 * width * height);
  auto id = [width](std::size_t x, std::size_t y) { return static_cast<Vertex>(y * width + x); };
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      edges.emplace_back(id(x, y), id((x + 1) % width, y));
      edges.emplace_back(id(x, y), id(x, (y + 1) % height));
    }
  }
  return Graph(width * height, edges);
}

Graph generate_graph(GraphKind kind, std::span<const std::size_t> params) {
  const std::size_t expected = kind == GraphKind::torus ? 2 : 1;
  if (params.size() != expected) {
    throw ValidationError("wrong number of size parameters for graph kind");
  }
  switch (kind) {
    case GraphKind::path: return make_path(params[0]);
    case GraphKind::cycle: return make_cycle(params[0]);
    case GraphKind::complete: return make_complete(params[0]);
    case GraphKind::torus: return make_torus(params[0], params[1]);
  }
  throw ValidationError("unknown graph kind");
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.n_vertices(), -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.n_vertices(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace cvm
