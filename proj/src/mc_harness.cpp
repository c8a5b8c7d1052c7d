#include "coxtest/mc_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "coxtest/error.hpp"
#include "coxtest/normal.hpp"
#include "coxtest/test_engine.hpp"

namespace coxtest {

namespace {

// Runs body(index, worker) for every index in [0, count) on up to `workers`
// threads. Indices are claimed dynamically, so callers must make their
// results independent of which worker handles an index.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(i, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

enum class TrialOutcome : unsigned char { kDegenerate, kValid };

struct TrialStats {
  TrialOutcome outcome = TrialOutcome::kDegenerate;
  bool reject1 = false;
  bool reject2 = false;
  double t1 = 0.0;
  double t2 = 0.0;
};

TrialStats run_trial(const McConfig& cfg, std::uint64_t grid_index,
                     std::uint64_t trial) {
  const auto set = simulate_set(
      cfg.model, cfg.n, derive_seed({cfg.master_seed, grid_index, trial}));
  TrialStats stats;
  try {
    const TestReport r = run_test(set, cfg.alpha);
    stats = {TrialOutcome::kValid, r.reject1, r.reject2, r.t1, r.t2};
  } catch (const DegenerateSampleError&) {
  }
  return stats;
}

std::vector<TrialStats> run_trials(const McConfig& cfg,
                                   std::uint64_t grid_index) {
  cfg.validate();
  std::vector<TrialStats> trials(cfg.n_mc);
  parallel_for(cfg.n_mc, cfg.workers, [&](std::size_t t, unsigned) {
    trials[t] = run_trial(cfg, grid_index, t);
  });
  return trials;
}

double binomial_se(double p, std::size_t trials) {
  return trials == 0 ? 0.0
                     : std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

McResult summarize(const McConfig& cfg, const std::vector<TrialStats>& trials) {
  McResult r;
  r.config = cfg;
  for (const auto& t : trials) {
    if (t.outcome == TrialOutcome::kDegenerate) {
      ++r.degenerate_trials;
      continue;
    }
    ++r.valid_trials;
    r.rejections_s1 += t.reject1;
    r.rejections_s2 += t.reject2;
  }
  if (r.valid_trials > 0) {
    const auto denom = static_cast<double>(r.valid_trials);
    r.reject_freq_s1 = static_cast<double>(r.rejections_s1) / denom;
    r.reject_freq_s2 = static_cast<double>(r.rejections_s2) / denom;
  }
  r.se_s1 = binomial_se(r.reject_freq_s1, r.valid_trials);
  r.se_s2 = binomial_se(r.reject_freq_s2, r.valid_trials);
  return r;
}

}  // namespace

void McConfig::validate() const {
  model.validate();
  if (n < 2) throw ParameterError("n must be at least 2");
  if (n_mc < 1) throw ParameterError("n_mc must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("alpha must lie in (0, 1)");
  }
}

McResult level_study(const McConfig& cfg) {
  return summarize(cfg, run_trials(cfg, 0));
}

std::vector<McResult> power_curve(const McConfig& cfg,
                                  std::span<const double> theta_grid) {
  std::vector<McResult> curve;
  curve.reserve(theta_grid.size());
  for (std::size_t k = 0; k < theta_grid.size(); ++k) {
    McConfig point = cfg;
    point.model = with_theta(cfg.model, theta_grid[k]);
    curve.push_back(summarize(point, run_trials(point, k)));
  }
  return curve;
}

double folded_normal2_cdf(double x) {
  // P(|N(0, 2)| <= x) = erf(x / 2).
  return x <= 0.0 ? 0.0 : std::erf(0.5 * x);
}

double normal4_cdf(double x) { return normal_cdf(0.5 * x); }

double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf) {
  if (samples.empty()) return 0.0;
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const auto di = static_cast<double>(i);
    d = std::max({d, (di + 1.0) / n - f, f - di / n});
  }
  return d;
}

KsReport limit_law_check(const McConfig& cfg, double threshold) {
  const auto trials = run_trials(cfg, 0);
  KsReport report;
  report.threshold = threshold;
  for (const auto& t : trials) {
    if (t.outcome == TrialOutcome::kDegenerate) {
      ++report.degenerate_trials;
      continue;
    }
    report.t1.push_back(t.t1);
    report.t2.push_back(t.t2);
  }
  report.ks_t1 = ks_distance(report.t1, folded_normal2_cdf);
  report.ks_t2 = ks_distance(report.t2, normal4_cdf);
  if (cfg.n >= kLimitLawMinN) {
    report.pass_t1 = report.ks_t1 < threshold;
    report.pass_t2 = report.ks_t2 < threshold;
  }
  return report;
}

std::vector<std::vector<McEstimate>> drifted_sup_mc_grid(
    std::span<const double> xs, std::span<const double> alphas, double lambda0,
    std::size_t n_paths, std::size_t steps, std::uint64_t seed,
    unsigned workers) {
  if (n_paths < 1 || steps < 1) {
    throw ParameterError("drifted_sup_mc needs at least one path and step");
  }
  if (!(lambda0 > 0.0)) throw ParameterError("lambda0 must be positive");
  for (double x : xs) {
    if (!(x >= 0.0)) throw ParameterError("x must be non-negative");
  }
  std::vector<double> levels;
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
    levels.push_back(std::numbers::sqrt2 * lambda0 *
                     normal_upper_quantile(a / 2.0));
  }

  // Time runs over [0, 2 lambda0^2]; the drift of B_s is x / (2 lambda0^2).
  const double span = 2.0 * lambda0 * lambda0;
  const double dt = span / static_cast<double>(steps);
  const double sd = std::sqrt(dt);
  std::vector<double> drift_step;
  for (double x : xs) drift_step.push_back(x / span * dt);

  const std::size_t nx = xs.size();
  const std::size_t na = alphas.size();
  const unsigned threads = std::max(1u, workers);
  std::vector<std::vector<std::size_t>> hits(
      threads, std::vector<std::size_t>(nx * na, 0));

  parallel_for(n_paths, threads, [&](std::size_t path, unsigned worker) {
    RngStream rng(seed, path);
    std::vector<double> value(nx, 0.0);
    std::vector<double> best(nx, 0.0);
    for (std::size_t j = 0; j < steps; ++j) {
      const double dw = sd * rng.normal();
      for (std::size_t i = 0; i < nx; ++i) {
        value[i] += dw + drift_step[i];
        best[i] = std::max(best[i], value[i]);
      }
    }
    auto& h = hits[worker];
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t a = 0; a < na; ++a) h[i * na + a] += best[i] >= levels[a];
    }
  });

  std::vector<std::vector<McEstimate>> out(nx, std::vector<McEstimate>(na));
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t a = 0; a < na; ++a) {
      std::size_t total = 0;
      for (const auto& h : hits) total += h[i * na + a];
      const double p = static_cast<double>(total) / static_cast<double>(n_paths);
      out[i][a] = {p, binomial_se(p, n_paths), n_paths};
    }
  }
  return out;
}

McEstimate drifted_sup_mc(double x, double lambda0, double alpha,
                          std::size_t n_paths, std::size_t steps,
                          std::uint64_t seed, unsigned workers) {
  const double xs[] = {x};
  const double alphas[] = {alpha};
  return drifted_sup_mc_grid(xs, alphas, lambda0, n_paths, steps, seed,
                             workers)[0][0];
}

}  // namespace coxtest
