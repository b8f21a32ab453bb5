#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cvm/error.hpp"
#include "cvm/statics.hpp"

namespace cvm {
namespace {

// Span slack: k * eps must be below 1 by more than this to count as strict.
constexpr double kStrictTolerance = 1e-12;

struct Partition {
  std::vector<std::uint32_t> block;  // per vertex, restricted growth string
};

// Longest chain along `order` where each step either moves to the next class
// (weight 0) or crosses a quotient edge forward (weight 1).
std::size_t longest_chain(const std::vector<std::uint32_t>& order,
                          const std::vector<std::uint32_t>& quotient) {
  std::vector<std::size_t> chain(order.size(), 0);
  for (std::size_t pos = 1; pos < order.size(); ++pos) {
    chain[pos] = chain[pos - 1];
    for (std::size_t prev = 0; prev < pos; ++prev) {
      if (quotient[order[pos]] & (1u << order[prev])) {
        chain[pos] = std::max(chain[pos], chain[prev] + 1);
      }
    }
  }
  return chain.back();
}

// Opinion per class realizing the order with every forward quotient edge
// separated by more than eps and span below 1.
std::vector<double> class_values(const std::vector<std::uint32_t>& order,
                                 const std::vector<std::uint32_t>& quotient, std::size_t chain,
                                 double eps) {
  const auto m = static_cast<double>(order.size());
  const double delta = (1.0 - static_cast<double>(chain) * eps) / m;
  std::vector<double> at(order.size(), 0.0);
  std::vector<double> value(order.size(), 0.0);
  for (std::size_t pos = 1; pos < order.size(); ++pos) {
    at[pos] = at[pos - 1] + delta;
    for (std::size_t prev = 0; prev < pos; ++prev) {
      if (quotient[order[pos]] & (1u << order[prev])) {
        at[pos] = std::max(at[pos], at[prev] + eps + delta);
      }
    }
  }
  for (std::size_t pos = 0; pos < order.size(); ++pos) value[order[pos]] = at[pos];
  return value;
}

}  // namespace

BruteForceIndex brute_force_index(const Graph& g, double eps) {
  check_epsilon(eps);
  const std::size_t n = g.n_vertices();
  if (n > kBruteForceLimit) {
    throw SizeLimitError("brute-force index limited to " + std::to_string(kBruteForceLimit) +
                         " vertices, got " + std::to_string(n));
  }
  BruteForceIndex best;
  if (n == 0) return best;

  Partition p;
  p.block.assign(n, 0);

  // Enumerate restricted growth strings: block[0] = 0,
  // block[i] <= max(block[0..i-1]) + 1.
  while (true) {
    std::uint32_t m = 0;
    for (std::size_t v = 0; v < n; ++v) m = std::max(m, p.block[v] + 1);

    if (m > best.index) {
      std::vector<std::uint32_t> quotient(m, 0);
      for (const Edge& e : g.edges()) {
        const auto a = p.block[e.tail];
        const auto b = p.block[e.head];
        if (a != b) {
          quotient[a] |= 1u << b;
          quotient[b] |= 1u << a;
        }
      }
      std::vector<std::uint32_t> order(m);
      std::iota(order.begin(), order.end(), 0u);
      do {
        const std::size_t chain = longest_chain(order, quotient);
        if (static_cast<double>(chain) * eps < 1.0 - kStrictTolerance) {
          const auto values = class_values(order, quotient, chain, eps);
          std::vector<double> witness(n);
          for (std::size_t v = 0; v < n; ++v) witness[v] = values[p.block[v]];
          best.index = m;
          best.witness = OpinionConfig(std::move(witness));
          break;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      if (best.index == n) break;
    }

    // Next restricted growth string.
    std::size_t i = n;
    while (i-- > 1) {
      std::uint32_t prefix_max = 0;
      for (std::size_t k = 0; k < i; ++k) prefix_max = std::max(prefix_max, p.block[k] + 1);
      if (p.block[i] < prefix_max) {
        ++p.block[i];
        for (std::size_t k = i + 1; k < n; ++k) p.block[k] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return best;
}

}  // namespace cvm
