#ifndef COXTEST_MC_HARNESS_HPP_
#define COXTEST_MC_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "coxtest/simulate.hpp"

namespace coxtest {

struct McConfig {
  ModelSpec model{Weibull{1.0}, 1.0};
  std::size_t n = 100;       // trajectories per trial
  std::size_t n_mc = 10000;  // trials
  double alpha = 0.05;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;  // results do not depend on this

  void validate() const;
};

/// Rejection frequencies over the non-degenerate trials of one experiment.
struct McResult {
  McConfig config;
  std::size_t valid_trials = 0;
  std::size_t degenerate_trials = 0;
  std::size_t rejections_s1 = 0;
  std::size_t rejections_s2 = 0;
  double reject_freq_s1 = 0.0;
  double se_s1 = 0.0;  // binomial standard error sqrt(p (1 - p) / trials)
  double reject_freq_s2 = 0.0;
  double se_s2 = 0.0;
};

/// Simulates cfg.n_mc independent samples of cfg.model and tallies how often
/// each test rejects at cfg.alpha. Trial t uses trajectories drawn from
/// streams of derive_seed({master_seed, 0, t}).
McResult level_study(const McConfig& cfg);

/// One McResult per theta. cfg.model must be CoxModel1 or CoxModel2; the
/// k-th grid point uses derive_seed({master_seed, k, t}) for trial t.
std::vector<McResult> power_curve(const McConfig& cfg,
                                  std::span<const double> theta_grid);

/// Below this sample size limit_law_check only reports distances.
inline constexpr std::size_t kLimitLawMinN = 100;

struct KsReport {
  std::vector<double> t1;  // standardized statistics of the valid trials
  std::vector<double> t2;
  std::size_t degenerate_trials = 0;
  double ks_t1 = 0.0;  // distance to |N(0, 2)|
  double ks_t2 = 0.0;  // distance to N(0, 4)
  double threshold = 0.05;
  // Empty in informational mode (n < kLimitLawMinN).
  std::optional<bool> pass_t1;
  std::optional<bool> pass_t2;
};

/// Collects t1, t2 over cfg.n_mc null samples and measures their
/// Kolmogorov-Smirnov distances to the limiting laws.
KsReport limit_law_check(const McConfig& cfg, double threshold = 0.05);

/// One-sample Kolmogorov-Smirnov distance sup |F_n - F| for a continuous F.
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf);

/// Distribution function of |N(0, 2)|.
double folded_normal2_cdf(double x);
/// Distribution function of N(0, 4).
double normal4_cdf(double x);

struct McEstimate {
  double p = 0.0;
  double se = 0.0;
  std::size_t paths = 0;
};

/// Monte Carlo estimate of
///   P( sup_{s <= 2 lambda0^2} (B_s + x s / (2 lambda0^2)) >= sqrt2 lambda0 q )
/// with q = q_{1 - alpha/2}, the limiting rejection probability that
/// analytic_power_g1 gives in closed form (T = 1 without loss of generality).
/// Each path is a Gaussian random walk on `steps` uniform steps; path i uses
/// RngStream(seed, i).
McEstimate drifted_sup_mc(double x, double lambda0, double alpha,
                          std::size_t n_paths, std::size_t steps,
                          std::uint64_t seed, unsigned workers = 1);

/// Same estimate for every (x, alpha) pair from a single set of paths:
/// result[i][j] belongs to xs[i], alphas[j].
std::vector<std::vector<McEstimate>> drifted_sup_mc_grid(
    std::span<const double> xs, std::span<const double> alphas, double lambda0,
    std::size_t n_paths, std::size_t steps, std::uint64_t seed,
    unsigned workers = 1);

}  // namespace coxtest

#endif  // COXTEST_MC_HARNESS_HPP_
