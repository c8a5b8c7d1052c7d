#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "coxtest/empirical.hpp"
#include "coxtest/error.hpp"
#include "fixtures.hpp"

namespace coxtest {
namespace {

TEST(EmpiricalCurves, FixtureF1) {
  const auto curves = empirical_curves(fixture::f1());
  EXPECT_NEAR(curves.mean(0.4), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(curves.variance(0.4), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(curves.diff(0.4), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(curves.mean(0.1), 0.0);
  EXPECT_EQ(curves.variance(0.1), 0.0);
  EXPECT_EQ(curves.diff(0.1), 0.0);
  EXPECT_EQ(curves.diff(0.0), 0.0);
  EXPECT_EQ(curves.mean(1.0), 1.0);
  // Breakpoints: 0 then the merged jump times.
  EXPECT_EQ(std::vector<double>(curves.mean.breakpoints().begin(),
                                curves.mean.breakpoints().end()),
            (std::vector<double>{0.0, 0.2, 0.3, 0.5}));
}

TEST(EmpiricalCurves, TwoPathsOneEvent) {
  const TrajectorySet set({Trajectory({0.5}, 1.0), Trajectory({}, 1.0)});
  const auto curves = empirical_curves(set);
  EXPECT_EQ(curves.mean(0.8), 0.5);
  EXPECT_EQ(curves.variance(0.8), 0.5);
  EXPECT_EQ(curves.diff(0.8), 0.0);
}

TEST(EmpiricalCurves, ImpossibleSamplesRejectedAtConstruction) {
  EXPECT_THROW(TrajectorySet({Trajectory({0.5}, 1.0)}), InvalidSampleError);
  EXPECT_THROW(TrajectorySet({Trajectory({0.5}, 1.0), Trajectory({0.5}, 2.0)}),
               InvalidSampleError);
}

// Counts evaluated at fine grid times, mean and variance recomputed directly.
TEST(EmpiricalCurves, MatchesGridOracle) {
  std::mt19937_64 gen(99);
  for (bool ties : {false, true}) {
    const auto set = fixture::random_set(gen, 40, 3.0, 6.0, ties);
    const auto curves = empirical_curves(set);
    constexpr int kPoints = 100000;
    for (int k = 0; k <= kPoints; ++k) {
      const double t = 3.0 * k / kPoints;
      double mean = 0.0;
      for (const auto& p : set.trajectories()) mean += count_at(p, t);
      mean /= set.size();
      double ss = 0.0;
      for (const auto& p : set.trajectories()) {
        const double d = static_cast<double>(count_at(p, t)) - mean;
        ss += d * d;
      }
      const double var = ss / (set.size() - 1);
      ASSERT_NEAR(curves.mean(t), mean, 1e-10) << "t=" << t;
      ASSERT_NEAR(curves.variance(t), var, 1e-10) << "t=" << t;
      ASSERT_NEAR(curves.diff(t), var - mean, 1e-10) << "t=" << t;
    }
  }
}

TEST(EmpiricalCurves, StructuralInvariants) {
  std::mt19937_64 gen(5);
  for (int rep = 0; rep < 50; ++rep) {
    const auto set = fixture::random_set(gen, 2 + rep % 17, 1.0, 3.0, rep % 2);
    const auto c = empirical_curves(set);
    EXPECT_EQ(c.diff(0.0), 0.0);
    const auto m = c.mean.values();
    EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
    for (double v : c.variance.values()) EXPECT_GE(v, 0.0);
    const double total = m.back() * static_cast<double>(set.size());
    EXPECT_EQ(total, std::round(total));
    EXPECT_EQ(std::llround(total), static_cast<long long>(set.total_events()));
    for (std::size_t i = 0; i < c.diff.pieces(); ++i) {
      EXPECT_NEAR(c.diff.values()[i], c.variance.values()[i] - m[i], 1e-12);
    }
  }
}

TEST(EmpiricalCurves, PermutationInvariantBitForBit) {
  std::mt19937_64 gen(11);
  const auto set = fixture::random_set(gen, 30, 1.0, 4.0, true);
  std::vector<Trajectory> shuffled(set.trajectories().begin(),
                                   set.trajectories().end());
  std::shuffle(shuffled.begin(), shuffled.end(), gen);
  const auto a = empirical_curves(set);
  const auto b = empirical_curves(TrajectorySet(std::move(shuffled)));
  auto same = [](const StepFunction& f, const StepFunction& g) {
    return std::equal(f.values().begin(), f.values().end(), g.values().begin(),
                      g.values().end()) &&
           std::equal(f.breakpoints().begin(), f.breakpoints().end(),
                      g.breakpoints().begin(), g.breakpoints().end());
  };
  EXPECT_TRUE(same(a.mean, b.mean));
  EXPECT_TRUE(same(a.variance, b.variance));
  EXPECT_TRUE(same(a.diff, b.diff));
  EXPECT_EQ(i_hat(a), i_hat(b));
}

TEST(EmpiricalCurves, IdenticalTrajectoriesHaveZeroVariance) {
  const Trajectory p({0.1, 0.4, 0.4, 0.9}, 1.0);
  const auto c = empirical_curves(TrajectorySet({p, p, p, p}));
  for (double v : c.variance.values()) EXPECT_EQ(v, 0.0);
  for (std::size_t i = 0; i < c.diff.pieces(); ++i) {
    EXPECT_EQ(c.diff.values()[i], -c.mean.values()[i]);
  }
}

TEST(IHat, FixtureAndEdgeCases) {
  EXPECT_NEAR(i_hat(fixture::f1()), std::sqrt(14.0 / 75.0), 1e-15);
  EXPECT_NEAR(i_hat(fixture::f1()), 0.4320494, 1e-7);
  const TrajectorySet empty({Trajectory({}, 1.0), Trajectory({}, 1.0)});
  EXPECT_EQ(i_hat(empty), 0.0);
}

TEST(IHat, DoublingCountsQuadruplesSquare) {
  std::mt19937_64 gen(3);
  const auto set = fixture::random_set(gen, 12, 2.0, 5.0);
  std::vector<Trajectory> doubled;
  for (const auto& p : set.trajectories()) {
    std::vector<double> events;
    for (double t : p.events()) events.insert(events.end(), {t, t});
    doubled.emplace_back(std::move(events), p.horizon());
  }
  const double base = i_hat(set);
  const double twice = i_hat(TrajectorySet(std::move(doubled)));
  EXPECT_NEAR(twice * twice, 4.0 * base * base, 1e-12 * base * base);
}

}  // namespace
}  // namespace coxtest
