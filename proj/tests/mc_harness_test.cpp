#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "coxtest/analytic_power.hpp"
#include "coxtest/error.hpp"
#include "coxtest/mc_harness.hpp"
#include "coxtest/normal.hpp"

namespace coxtest {
namespace {

bool same(const McResult& a, const McResult& b) {
  return a.valid_trials == b.valid_trials &&
         a.degenerate_trials == b.degenerate_trials &&
         a.rejections_s1 == b.rejections_s1 &&
         a.rejections_s2 == b.rejections_s2 &&
         a.reject_freq_s1 == b.reject_freq_s1 &&
         a.reject_freq_s2 == b.reject_freq_s2 && a.se_s1 == b.se_s1 &&
         a.se_s2 == b.se_s2;
}

TEST(LevelStudy, SingleTrialIsBinaryAndReproducible) {
  const McConfig cfg{ModelSpec{Weibull{1.0}, 1.0}, 50, 1, 0.05, 123, 1};
  const McResult a = level_study(cfg);
  const McResult b = level_study(cfg);
  EXPECT_TRUE(same(a, b));
  EXPECT_TRUE(a.reject_freq_s1 == 0.0 || a.reject_freq_s1 == 1.0);
  EXPECT_TRUE(a.reject_freq_s2 == 0.0 || a.reject_freq_s2 == 1.0);
  EXPECT_EQ(a.valid_trials + a.degenerate_trials, 1u);
}

TEST(LevelStudy, IndependentOfWorkerCount) {
  McConfig cfg{ModelSpec{Weibull{2.0}, 1.0}, 40, 500, 0.1, 9, 1};
  const McResult one = level_study(cfg);
  cfg.workers = 4;
  const McResult four = level_study(cfg);
  EXPECT_TRUE(same(one, four));
}

TEST(LevelStudy, FrequenciesAndStandardErrors) {
  const McConfig cfg{ModelSpec{HomPoisson{1.0}, 1.0}, 100, 2000, 0.05, 4, 1};
  const McResult r = level_study(cfg);
  EXPECT_EQ(r.degenerate_trials, 0u);
  EXPECT_EQ(r.valid_trials, 2000u);
  EXPECT_DOUBLE_EQ(r.reject_freq_s1, r.rejections_s1 / 2000.0);
  EXPECT_DOUBLE_EQ(r.se_s1, std::sqrt(r.reject_freq_s1 * (1 - r.reject_freq_s1) / 2000.0));
  const double se = std::sqrt(0.05 * 0.95 / 2000.0);
  EXPECT_LE(std::abs(r.reject_freq_s1 - 0.05), 0.01 + 3.0 * se);
  EXPECT_LE(std::abs(r.reject_freq_s2 - 0.05), 0.01 + 3.0 * se);
}

TEST(LevelStudy, DegenerateTrialsAreExcluded) {
  // Rate 0.01 over n = 2 paths: most trials have no events at all.
  const McConfig cfg{ModelSpec{HomPoisson{0.01}, 1.0}, 2, 300, 0.05, 1, 1};
  const McResult r = level_study(cfg);
  EXPECT_GT(r.degenerate_trials, 250u);
  EXPECT_EQ(r.valid_trials + r.degenerate_trials, 300u);
  if (r.valid_trials > 0) {
    EXPECT_DOUBLE_EQ(r.reject_freq_s1,
                     static_cast<double>(r.rejections_s1) / r.valid_trials);
  }
}

TEST(LevelStudy, RejectsInvalidConfig) {
  EXPECT_THROW(level_study({ModelSpec{Weibull{1.0}, 1.0}, 1, 10, 0.05, 1, 1}),
               ParameterError);
  EXPECT_THROW(level_study({ModelSpec{Weibull{1.0}, 1.0}, 10, 0, 0.05, 1, 1}),
               ParameterError);
  EXPECT_THROW(level_study({ModelSpec{Weibull{1.0}, 1.0}, 10, 10, 1.5, 1, 1}),
               ParameterError);
}

TEST(PowerCurve, OnePointPerThetaAndDeterministic) {
  const McConfig cfg{ModelSpec{CoxModel1{0.0}, 1.0}, 60, 300, 0.05, 5, 1};
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const auto a = power_curve(cfg, grid);
  McConfig threaded = cfg;
  threaded.workers = 3;
  const auto b = power_curve(threaded, grid);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_TRUE(same(a[k], b[k]));
    EXPECT_EQ(std::get<CoxModel1>(a[k].config.model.variant).theta, grid[k]);
  }
  EXPECT_GT(a[2].reject_freq_s1, a[0].reject_freq_s1);
  const std::vector<double> bad{0.5};
  EXPECT_THROW(power_curve({ModelSpec{Weibull{1.0}, 1.0}, 10, 10, 0.05, 1, 1}, bad),
               ParameterError);
}

TEST(KsDistance, KnownValues) {
  auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_DOUBLE_EQ(ks_distance({0.5}, uniform), 0.5);
  EXPECT_NEAR(ks_distance({0.1, 0.6}, uniform), 0.4, 1e-15);
  EXPECT_NEAR(ks_distance({0.25, 0.75}, uniform), 0.25, 1e-15);
  EXPECT_EQ(ks_distance({}, uniform), 0.0);
}

TEST(KsDistance, LimitCdfs) {
  EXPECT_EQ(folded_normal2_cdf(-1.0), 0.0);
  EXPECT_EQ(folded_normal2_cdf(0.0), 0.0);
  // P(|N(0,2)| <= sqrt2 q_{0.975}) = 0.95
  EXPECT_NEAR(folded_normal2_cdf(std::sqrt(2.0) * normal_quantile(0.975)), 0.95,
              1e-12);
  EXPECT_EQ(normal4_cdf(0.0), 0.5);
  EXPECT_NEAR(normal4_cdf(2.0), normal_cdf(1.0), 1e-15);
}

TEST(LimitLaw, SmallSamplesAreInformational) {
  const McConfig cfg{ModelSpec{HomPoisson{1.0}, 1.0}, 10, 300, 0.05, 2, 1};
  const KsReport r = limit_law_check(cfg);
  EXPECT_FALSE(r.pass_t1.has_value());
  EXPECT_FALSE(r.pass_t2.has_value());
  EXPECT_EQ(r.t1.size() + r.degenerate_trials, 300u);
  EXPECT_GT(r.ks_t1, 0.0);
}

TEST(LimitLaw, AssertsForLargeSamples) {
  const McConfig cfg{ModelSpec{HomPoisson{1.0}, 1.0}, 200, 400, 0.05, 2, 1};
  const KsReport r = limit_law_check(cfg, 0.1);
  ASSERT_TRUE(r.pass_t1.has_value());
  EXPECT_EQ(*r.pass_t1, r.ks_t1 < 0.1);
  EXPECT_EQ(*r.pass_t2, r.ks_t2 < 0.1);
}

TEST(DriftedSup, NoDriftGivesLevel) {
  for (double alpha : {0.05, 0.1}) {
    const McEstimate e = drifted_sup_mc(0.0, 1.0, alpha, 40000, 2000, 3);
    // The grid supremum sits slightly below the continuous one.
    EXPECT_LE(std::abs(e.p - alpha), 3.0 * e.se + 0.005) << alpha;
  }
}

TEST(DriftedSup, RefiningTheGridApproachesClosedForm) {
  const double g1 = analytic_power_g1(1.0, 1.0, 0.05);
  double prev = 0.0;
  for (std::size_t steps : {4u, 16u, 64u, 256u}) {
    const McEstimate e = drifted_sup_mc(1.0, 1.0, 0.05, 100000, steps, 21);
    EXPECT_GT(e.p, prev) << steps;
    EXPECT_LT(e.p, g1 + 3.0 * e.se) << steps;
    prev = e.p;
  }
}

TEST(DriftedSup, GridMatchesSingleCallsAndWorkers) {
  const std::vector<double> xs{0.0, 1.0, 2.5};
  const std::vector<double> alphas{0.05, 0.1};
  const auto grid = drifted_sup_mc_grid(xs, alphas, 1.5, 3000, 200, 8, 1);
  const auto threaded = drifted_sup_mc_grid(xs, alphas, 1.5, 3000, 200, 8, 3);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      const McEstimate single = drifted_sup_mc(xs[i], 1.5, alphas[j], 3000, 200, 8);
      EXPECT_EQ(grid[i][j].p, single.p);
      EXPECT_EQ(threaded[i][j].p, single.p);
    }
  }
  EXPECT_THROW(drifted_sup_mc(1.0, 1.0, 0.05, 0, 10, 1), ParameterError);
}

}  // namespace
}  // namespace coxtest
