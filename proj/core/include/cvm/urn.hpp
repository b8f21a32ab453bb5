#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cvm {

// Boxes 0..J; box 0 collects empty edges, box j >= 1 holds type-j edges.
struct UrnState {
  std::vector<std::int64_t> counts;
  std::uint64_t step = 0;

  std::size_t boxes() const noexcept { return counts.size(); }
  std::int64_t total() const noexcept;
  friend bool operator==(const UrnState&, const UrnState&) = default;
};

// M balls in each of boxes 1..J, box 0 empty.
UrnState uniform_urn(std::int64_t balls_per_box, std::size_t J);

struct UrnPlay {
  UrnState final;
  std::uint64_t steps = 0;
};

// Random play. While box 1 is non-empty: move a ball 1 -> 0, pick a
// uniformly random non-empty box j >= 1 and move one of its balls to j-1, j
// or j+1 with probability 1/3 each (j+1 past box J stays in J).
UrnPlay play_random(const UrnState& initial, std::uint64_t seed);

struct StrategyPlay {
  std::uint64_t steps = 0;
  std::vector<UrnState> trajectory;  // states after steps 0..steps
};

// Worst-case deterministic play from M balls per box: each step takes a ball
// from the lowest non-empty box j >= 2 down to j-1, then moves a ball from
// box 1 to box 0. Halts when box 1 has nothing to give. Throws
// ValidationError unless M >= 0 and J >= 3.
StrategyPlay play_strategy_S(std::int64_t M, std::size_t J);

// Box contents after step n of play_strategy_S(M, J), 0 <= n <= 3M, from the
// phase formulas. Throws ValidationError for n out of range.
UrnState closed_form_Y(std::int64_t M, std::uint64_t n, std::size_t J);

}  // namespace cvm
