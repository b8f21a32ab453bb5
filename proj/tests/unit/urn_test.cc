#include <gtest/gtest.h>

#include "cvm/error.hpp"
#include "cvm/report_io.hpp"
#include "cvm/urn.hpp"

namespace {

using cvm::UrnState;

TEST(StrategyS, Examples) {
  EXPECT_EQ(cvm::play_strategy_S(0, 3).steps, 0u);
  EXPECT_EQ(cvm::play_strategy_S(2, 3).steps, 6u);
  const auto play = cvm::play_strategy_S(5, 6);
  EXPECT_EQ(play.steps, 15u);
  for (const auto& s : play.trajectory) {
    for (std::size_t j = 4; j <= 6; ++j) EXPECT_EQ(s.counts[j], 5);
  }
  EXPECT_THROW(cvm::play_strategy_S(3, 2), cvm::ValidationError);
  EXPECT_THROW(cvm::play_strategy_S(-1, 3), cvm::ValidationError);
}

TEST(StrategyS, MatchesClosedFormAndConserves) {
  for (std::int64_t M = 0; M <= 20; ++M) {
    for (std::size_t J : {3u, 4u, 7u}) {
      const auto play = cvm::play_strategy_S(M, J);
      ASSERT_EQ(play.steps, static_cast<std::uint64_t>(3 * M));
      ASSERT_EQ(play.trajectory.size(), play.steps + 1);
      for (std::uint64_t n = 0; n <= play.steps; ++n) {
        EXPECT_EQ(play.trajectory[n], cvm::closed_form_Y(M, n, J)) << "M=" << M << " n=" << n;
        EXPECT_EQ(play.trajectory[n].total(), M * static_cast<std::int64_t>(J));
      }
      EXPECT_EQ(play.trajectory.back().counts[1], 0);
    }
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(cvm::closed_form_Y(3, 2, 5).counts, (std::vector<std::int64_t>{2, 3, 1, 3, 3, 3}));
  const auto k2 = cvm::closed_form_Y(3, 5, 3).counts;
  EXPECT_EQ(k2[1], 2);
  EXPECT_EQ(k2[2], 0);
  EXPECT_EQ(k2[3], 2);
  EXPECT_EQ(cvm::closed_form_Y(7, 21, 4).counts[1], 0);
  EXPECT_THROW(cvm::closed_form_Y(3, 10, 3), cvm::ValidationError);
}

TEST(RandomPlay, EmptyBoxOneHaltsImmediately) {
  const UrnState s{{0, 0, 4, 4}, 0};
  const auto play = cvm::play_random(s, 1);
  EXPECT_EQ(play.steps, 0u);
  EXPECT_EQ(play.final.counts, s.counts);
}

TEST(RandomPlay, SingleBoxHaltsWithinBound) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::int64_t M = 1 + static_cast<std::int64_t>(seed % 12);
    const auto play = cvm::play_random(cvm::uniform_urn(M, 1), seed);
    EXPECT_LE(play.steps, static_cast<std::uint64_t>(3 * M));
    EXPECT_EQ(play.final.counts[1], 0);
  }
}

TEST(RandomPlay, NeverOutlastsStrategyS) {
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const std::int64_t M = 1 + static_cast<std::int64_t>(seed % 10);
    const std::size_t J = 1 + (seed / 10) % 10;
    const auto start = cvm::uniform_urn(M, J);
    const auto play = cvm::play_random(start, seed);
    ASSERT_LE(play.steps, static_cast<std::uint64_t>(3 * M)) << "seed=" << seed << " J=" << J;
    ASSERT_EQ(play.final.total(), start.total());
    ASSERT_EQ(play.final.step, play.steps);
    for (auto c : play.final.counts) ASSERT_GE(c, 0);
  }
}

TEST(RandomPlay, Deterministic) {
  const auto a = cvm::play_random(cvm::uniform_urn(8, 6), 99);
  const auto b = cvm::play_random(cvm::uniform_urn(8, 6), 99);
  EXPECT_EQ(a.final, b.final);
  EXPECT_EQ(a.steps, b.steps);
}

TEST(Urn, TrajectoryCsv) {
  const auto play = cvm::play_strategy_S(1, 3);
  EXPECT_EQ(cvm::urn_trajectory_csv(play.trajectory),
            "step,box0,box1,box2,box3\n"
            "0,0,1,1,1\n"
            "1,1,1,0,1\n"
            "2,2,0,1,0\n"
            "3,3,0,0,0\n");
}

}  // namespace
