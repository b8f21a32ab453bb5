#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "cvm/graph.hpp"

namespace cvm {

// One opinion in [0, 1] per vertex. Dynamics only ever copy values, so
// "same opinion" means exact floating-point equality throughout.
class OpinionConfig {
 public:
  OpinionConfig() = default;
  // Throws ValidationError if any value is NaN or outside [0, 1].
  explicit OpinionConfig(std::vector<double> values);
  OpinionConfig(std::initializer_list<double> values)
      : OpinionConfig(std::vector<double>(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const OpinionConfig&, const OpinionConfig&) = default;

 private:
  std::vector<double> values_;
};

// Throws ValidationError("epsilon out of range") unless 0 <= eps <= 1.
void check_epsilon(double eps);

// J = least integer not less than 1/eps, for eps in (0, 1]. Quotients within
// 1e-9 (relative) of an integer snap to it, so eps = 1/3 written in decimal
// gives 3 rather than 4.
std::size_t ceil_inverse(double eps);

// n independent Uniform[0,1) draws from the seeded stream.
OpinionConfig random_initial(std::size_t n, std::uint64_t seed);
OpinionConfig random_initial(const Graph& g, std::uint64_t seed);

// An edge interacts iff its endpoint opinions differ and are strictly closer
// than eps.
inline bool interacts(double a, double b, double eps) noexcept {
  return a != b && (a < b ? b - a : a - b) < eps;
}

// True iff no edge interacts.
bool is_absorbing(const Graph& g, std::span<const double> opinions, double eps);
inline bool is_absorbing(const Graph& g, const OpinionConfig& c, double eps) {
  return is_absorbing(g, c.values(), eps);
}

std::size_t count_opinions(std::span<const double> opinions);
inline std::size_t count_opinions(const OpinionConfig& c) { return count_opinions(c.values()); }

// Opinions outside the centrist interval (1 - eps, eps), eps > 1/2.
inline bool is_extremist(double opinion, double eps) noexcept {
  return opinion <= 1.0 - eps || opinion >= eps;
}
// Throws ValidationError for eps <= 1/2.
std::size_t extremist_count(std::span<const double> opinions, double eps);
inline std::size_t extremist_count(const OpinionConfig& c, double eps) {
  return extremist_count(c.values(), eps);
}

}  // namespace cvm
