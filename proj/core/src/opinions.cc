#include "cvm/opinions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvm/error.hpp"
#include "cvm/rng.hpp"

namespace cvm {

OpinionConfig::OpinionConfig(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ValidationError("opinion " + std::to_string(i) + " outside [0, 1]");
    }
  }
}

void check_epsilon(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw ValidationError("epsilon out of range");
}

std::size_t ceil_inverse(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ValidationError("epsilon out of range");
  const double q = 1.0 / eps;
  const double r = std::round(q);
  if (std::abs(q - r) <= 1e-9 * q) return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::ceil(q));
}

OpinionConfig random_initial(std::size_t n, std::uint64_t seed) {
  Rng rng(stream_seed(seed, Stream::initial));
  std::vector<double> values(n);
  for (auto& v : values) v = rng.uniform();
  return OpinionConfig(std::move(values));
}

OpinionConfig random_initial(const Graph& g, std::uint64_t seed) {
  return random_initial(g.n_vertices(), seed);
}

bool is_absorbing(const Graph& g, std::span<const double> opinions, double eps) {
  if (opinions.size() != g.n_vertices()) {
    throw ValidationError("opinion count does not match vertex count");
  }
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return interacts(opinions[e.tail], opinions[e.head], eps);
  });
}

std::size_t count_opinions(std::span<const double> opinions) {
  std::vector<double> sorted(opinions.begin(), opinions.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::size_t extremist_count(std::span<const double> opinions, double eps) {
  if (!(eps > 0.5 && eps <= 1.0)) {
    throw ValidationError("extremist count needs 1/2 < epsilon <= 1");
  }
  return static_cast<std::size_t>(std::count_if(
      opinions.begin(), opinions.end(), [eps](double v) { return is_extremist(v, eps); }));
}

}  // namespace cvm
