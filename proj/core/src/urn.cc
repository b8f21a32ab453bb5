#include "cvm/urn.hpp"

#include <numeric>
#include <string>

#include "cvm/error.hpp"
#include "cvm/rng.hpp"

namespace cvm {

std::int64_t UrnState::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

UrnState uniform_urn(std::int64_t balls_per_box, std::size_t J) {
  if (balls_per_box < 0) throw ValidationError("ball count must be non-negative");
  if (J < 1) throw ValidationError("urn needs at least one non-empty box");
  UrnState s;
  s.counts.assign(J + 1, balls_per_box);
  s.counts[0] = 0;
  return s;
}

UrnPlay play_random(const UrnState& initial, std::uint64_t seed) {
  if (initial.counts.size() < 2) throw ValidationError("urn needs boxes 0..J with J >= 1");
  for (auto c : initial.counts) {
    if (c < 0) throw ValidationError("box counts must be non-negative");
  }
  Rng rng(stream_seed(seed, Stream::urn));
  UrnPlay play{initial, 0};
  auto& box = play.final.counts;
  const std::size_t J = box.size() - 1;
  std::vector<std::size_t> nonempty;
  while (box[1] > 0) {
    --box[1];
    ++box[0];
    nonempty.clear();
    for (std::size_t j = 1; j <= J; ++j) {
      if (box[j] > 0) nonempty.push_back(j);
    }
    if (!nonempty.empty()) {
      const std::size_t j = nonempty[rng.below(nonempty.size())];
      const auto move = static_cast<int>(rng.below(3)) - 1;  // -1, 0, +1
      std::size_t dest = static_cast<std::size_t>(static_cast<std::int64_t>(j) + move);
      if (dest > J) dest = J;
      --box[j];
      ++box[dest];
    }
    ++play.steps;
    ++play.final.step;
  }
  return play;
}

StrategyPlay play_strategy_S(std::int64_t M, std::size_t J) {
  if (J < 3) throw ValidationError("strategy S needs J >= 3");
  StrategyPlay play;
  UrnState s = uniform_urn(M, J);
  play.trajectory.push_back(s);
  while (true) {
    std::size_t j = 2;
    while (j <= J && s.counts[j] == 0) ++j;
    // Box 1 can only be refilled from box 2.
    if (s.counts[1] == 0 && j != 2) break;
    if (j <= J) {
      --s.counts[j];
      ++s.counts[j - 1];
    }
    --s.counts[1];
    ++s.counts[0];
    ++s.step;
    play.trajectory.push_back(s);
  }
  play.steps = s.step;
  return play;
}

UrnState closed_form_Y(std::int64_t M, std::uint64_t n, std::size_t J) {
  if (M < 0) throw ValidationError("ball count must be non-negative");
  if (J < 3) throw ValidationError("closed form needs J >= 3");
  if (n > static_cast<std::uint64_t>(3 * M)) {
    throw ValidationError("step " + std::to_string(n) + " outside 0.." + std::to_string(3 * M));
  }
  UrnState s = uniform_urn(M, J);
  s.step = n;
  s.counts[0] = static_cast<std::int64_t>(n);
  const auto steps = static_cast<std::int64_t>(n);
  if (steps <= M) {
    s.counts[2] = M - steps;
    return s;
  }
  const std::int64_t k = steps - M;
  const std::int64_t half_up = (k + 1) / 2;
  s.counts[1] = M - half_up;
  s.counts[2] = k % 2;
  s.counts[3] = M - half_up;
  return s;
}

}  // namespace cvm
