#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cvm {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge stored with its canonical orientation: tail < head.
struct Edge {
  Vertex tail;
  Vertex head;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite simple graph. Immutable after construction; edges keep the order in
// which they were supplied, each normalized so that tail < head. A graph may
// be disconnected or even empty (clique-peeling residuals); simulation entry
// points check connectivity themselves.
class Graph {
 public:
  Graph() = default;

  // Throws ValidationError on self-loops, duplicate edges or indices
  // outside [0, n_vertices).
  Graph(std::size_t n_vertices, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(std::size_t n_vertices, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t n_vertices() const noexcept { return n_vertices_; }
  std::size_t n_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  // Edge ids incident to v, parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const noexcept {
    return {incident_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;

  bool adjacent(Vertex u, Vertex v) const noexcept;
  bool is_connected() const noexcept { return connected_; }

  // Subgraph induced by `keep` (relabelled 0..keep.size()-1 in the given
  // order).
  Graph induced_subgraph(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_vertices_ == b.n_vertices_ && a.edges_ == b.edges_;
  }

 private:
  void build();

  std::size_t n_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<EdgeId> incident_;
  bool connected_ = true;
};

enum class GraphKind { path, cycle, complete, torus };

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
// width x height lattice with periodic boundary in both axes; vertex
// (x, y) has index y * width + x.
Graph make_torus(std::size_t width, std::size_t height);

// params: one size for path/cycle/complete, {width, height} for torus.
Graph generate_graph(GraphKind kind, std::span<const std::size_t> params);

// Parses "path:N", "cycle:N", "complete:N" or "torus:WxH".
Graph graph_from_spec(std::string_view spec);

// Edge-list document: "N M" header, then M lines "i j". Lines starting with
// '#' are ignored. Throws ParseError with the offending line number.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string render_graph(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace cvm
