#ifndef COXTEST_SIMULATE_HPP_
#define COXTEST_SIMULATE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "coxtest/rng.hpp"
#include "coxtest/trajectory.hpp"

namespace coxtest {

/// Homogeneous Poisson process with constant intensity `rate`.
struct HomPoisson {
  double rate = 1.0;
};

/// Weibull process, intensity beta * t^(beta - 1).
struct Weibull {
  double beta = 1.0;
};

/// Cox process with intensity exp(theta * Z * t), Z ~ 2 + Beta(1/2, 1/2).
struct CoxModel1 {
  double theta = 0.0;
};

/// Cox process with intensity exp(theta * sin(W_t)), W a standard Brownian
/// motion.
struct CoxModel2 {
  double theta = 0.0;
};

/// Local alternative: constant intensity lambda0 + d_n * Z per trajectory,
/// Z uniform on [-w sqrt3, w sqrt3] (mean 0, variance w^2).
struct LocalAlt {
  double lambda0 = 1.0;
  double w = 0.0;
  double d_n = 0.0;

  /// d_n = sqrt(d / sqrt(n)), so that sqrt(n) d_n^2 = d exactly.
  static LocalAlt from_limit(double lambda0, double w, double d,
                             std::size_t n);
};

struct ModelSpec {
  std::variant<HomPoisson, Weibull, CoxModel1, CoxModel2, LocalAlt> variant;
  double horizon = 1.0;

  /// Throws ParameterError on non-positive horizon, rates or shapes, negative
  /// theta, or a local alternative whose intensity can go negative.
  void validate() const;
  std::string name() const;
};

/// Returns a copy of a CoxModel1/CoxModel2 spec with theta replaced; throws
/// ParameterError for other variants.
ModelSpec with_theta(const ModelSpec& spec, double theta);

/// Poisson process with cumulative intensity Lambda, sampled as
/// Lambda^{-1}(S_1), Lambda^{-1}(S_2), ... for unit-exponential partial sums
/// S_i, stopping once a time exceeds the horizon. Throws ContractViolation if
/// the inverse is not non-decreasing along the draws or returns NaN.
Trajectory sim_poisson_timechange(
    const std::function<double(double)>& inverse_cumulative, double horizon,
    RngStream& rng);

Trajectory sim_homogeneous(double rate, double horizon, RngStream& rng);
Trajectory sim_weibull(double beta, double horizon, RngStream& rng);

/// Lewis-Shedler thinning against the constant bound `rate_bound`.
///
/// `rate_at` is called once per candidate, at strictly increasing times, so
/// a stateful callback can advance a latent path between calls. A value above
/// the bound throws ContractViolation.
Trajectory sim_thinning(double rate_bound,
                        const std::function<double(double)>& rate_at,
                        double horizon, RngStream& rng);

Trajectory sim_cox_model1(double theta, double horizon, RngStream& rng);

/// Exact in distribution: the Brownian path is sampled only at thinning
/// candidates, with bound e^theta.
Trajectory sim_cox_model2(double theta, double horizon, RngStream& rng);

Trajectory sim_local_alt_path(const LocalAlt& model, double horizon,
                              RngStream& rng);

/// One trajectory of any model.
Trajectory simulate_trajectory(const ModelSpec& spec, RngStream& rng);

/// n trajectories; trajectory i draws from RngStream(seed, i).
TrajectorySet simulate_set(const ModelSpec& spec, std::size_t n,
                           std::uint64_t seed);

/// n trajectories of the local alternative with d_n = sqrt(d / sqrt(n)).
TrajectorySet sim_local_alt(double lambda0, double w, double d, std::size_t n,
                            double horizon, std::uint64_t seed);

}  // namespace coxtest

#endif  // COXTEST_SIMULATE_HPP_
