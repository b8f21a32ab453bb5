#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cvm/error.hpp"
#include "cvm/graph.hpp"

namespace cvm {
namespace {

std::size_t parse_size(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

// Splits on single spaces; a trailing '\r' is tolerated.
std::vector<std::string_view> fields(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(' ', start);
    const auto stop = pos == std::string_view::npos ? s.size() : pos;
    out.push_back(s.substr(start, stop - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& out) {
    while (pos < text.size()) {
      const auto nl = text.find('\n', pos);
      const auto stop = nl == std::string_view::npos ? text.size() : nl;
      out = text.substr(pos, stop - pos);
      pos = stop + 1;
      ++line_no;
      if (!out.empty() && out.front() == '#') continue;
      return true;
    }
    return false;
  };

  std::string_view line;
  if (!next_line(line)) throw ParseError(line_no + 1, "missing 'N M' header");
  auto header = fields(line);
  if (header.size() != 2) throw ParseError(line_no, "header must be 'N M'");
  const std::size_t n = parse_size(header[0], line_no, "vertex count");
  const std::size_t m = parse_size(header[1], line_no, "edge count");

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  std::vector<std::size_t> edge_lines;
  while (edges.size() < m) {
    if (!next_line(line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
    }
    auto f = fields(line);
    if (f.size() != 2) throw ParseError(line_no, "edge line must be 'i j'");
    const auto a = parse_size(f[0], line_no, "vertex index");
    const auto b = parse_size(f[1], line_no, "vertex index");
    if (a >= n || b >= n) throw ParseError(line_no, "vertex index out of range");
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    edge_lines.push_back(line_no);
  }
  while (next_line(line)) {
    if (!line.empty() && line != "\r") throw ParseError(line_no, "unexpected content after edges");
  }

  // Duplicates are reported at the line of the second occurrence.
  std::vector<std::pair<Vertex, Vertex>> sorted;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    sorted.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<std::size_t> order(sorted.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sorted[x] < sorted[y]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (sorted[order[k]] == sorted[order[k - 1]]) {
      throw ParseError(edge_lines[order[k]], "duplicate edge");
    }
  }
  return Graph(n, edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string render_graph(const Graph& g) {
  std::string out = std::to_string(g.n_vertices()) + " " + std::to_string(g.n_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.tail);
    out += ' ';
    out += std::to_string(e.head);
    out += '\n';
  }
  return out;
}

Graph graph_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("graph spec must look like kind:size, got '" + std::string(spec) + "'");
  }
  const auto kind = spec.substr(0, colon);
  const auto size = spec.substr(colon + 1);
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ValidationError("bad size in graph spec '" + std::string(spec) + "'");
    }
    return v;
  };
  if (kind == "path") return make_path(number(size));
  if (kind == "cycle") return make_cycle(number(size));
  if (kind == "complete") return make_complete(number(size));
  if (kind == "torus") {
    const auto x = size.find('x');
    if (x == std::string_view::npos) throw ValidationError("torus spec must be torus:WxH");
    return make_torus(number(size.substr(0, x)), number(size.substr(x + 1)));
  }
  throw ValidationError("unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace cvm
