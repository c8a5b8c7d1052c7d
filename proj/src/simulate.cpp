#include "coxtest/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "coxtest/error.hpp"

namespace coxtest {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const char* message) {
  if (!ok) throw ParameterError(message);
}

}  // namespace

LocalAlt LocalAlt::from_limit(double lambda0, double w, double d,
                              std::size_t n) {
  require(d >= 0.0, "local alternative: d must be non-negative");
  require(n >= 1, "local alternative: n must be positive");
  return LocalAlt{lambda0, w,
                  std::sqrt(d / std::sqrt(static_cast<double>(n)))};
}

void ModelSpec::validate() const {
  require(std::isfinite(horizon) && horizon > 0.0,
          "horizon must be positive and finite");
  std::visit(
      Overloaded{
          [](const HomPoisson& m) {
            require(std::isfinite(m.rate) && m.rate >= 0.0,
                    "rate must be non-negative");
          },
          [](const Weibull& m) {
            require(std::isfinite(m.beta) && m.beta > 0.0,
                    "Weibull beta must be positive");
          },
          [](const CoxModel1& m) {
            require(std::isfinite(m.theta) && m.theta >= 0.0,
                    "theta must be non-negative");
          },
          [](const CoxModel2& m) {
            require(std::isfinite(m.theta) && m.theta >= 0.0,
                    "theta must be non-negative");
          },
          [](const LocalAlt& m) {
            require(std::isfinite(m.lambda0) && m.lambda0 > 0.0,
                    "lambda0 must be positive");
            require(m.w >= 0.0 && m.d_n >= 0.0, "w and d_n must be non-negative");
            require(m.lambda0 - m.d_n * m.w * std::numbers::sqrt3 >= 0.0,
                    "local alternative intensity can go negative: need "
                    "lambda0 >= d_n * w * sqrt(3)");
          },
      },
      variant);
}

std::string ModelSpec::name() const {
  std::ostringstream out;
  out.precision(9);
  std::visit(Overloaded{
                 [&](const HomPoisson& m) { out << "hompoisson(rate=" << m.rate << ")"; },
                 [&](const Weibull& m) { out << "weibull(beta=" << m.beta << ")"; },
                 [&](const CoxModel1& m) { out << "cox1(theta=" << m.theta << ")"; },
                 [&](const CoxModel2& m) { out << "cox2(theta=" << m.theta << ")"; },
                 [&](const LocalAlt& m) {
                   out << "localalt(lambda0=" << m.lambda0 << ",w=" << m.w
                       << ",d_n=" << m.d_n << ")";
                 },
             },
             variant);
  return out.str();
}

ModelSpec with_theta(const ModelSpec& spec, double theta) {
  ModelSpec out = spec;
  if (auto* m1 = std::get_if<CoxModel1>(&out.variant)) {
    m1->theta = theta;
  } else if (auto* m2 = std::get_if<CoxModel2>(&out.variant)) {
    m2->theta = theta;
  } else {
    throw ParameterError("theta grid requires the cox1 or cox2 model");
  }
  return out;
}

Trajectory sim_poisson_timechange(
    const std::function<double(double)>& inverse_cumulative, double horizon,
    RngStream& rng) {
  std::vector<double> events;
  double arrival = 0.0;
  double previous = 0.0;
  for (;;) {
    arrival += rng.exponential();
    const double t = inverse_cumulative(arrival);
    if (std::isnan(t) || t < previous) {
      throw ContractViolation(
          "time change: inverse cumulative intensity is not monotone");
    }
    if (t > horizon) break;
    events.push_back(t);
    previous = t;
  }
  return Trajectory(std::move(events), horizon);
}

Trajectory sim_homogeneous(double rate, double horizon, RngStream& rng) {
  if (!(rate >= 0.0)) throw ParameterError("rate must be non-negative");
  std::vector<double> events;
  if (rate > 0.0) {
    double t = 0.0;
    for (;;) {
      t += rng.exponential() / rate;
      if (t > horizon) break;
      events.push_back(t);
    }
  }
  return Trajectory(std::move(events), horizon);
}

Trajectory sim_weibull(double beta, double horizon, RngStream& rng) {
  if (!(beta > 0.0)) throw ParameterError("Weibull beta must be positive");
  if (beta == 1.0) {
    return sim_poisson_timechange([](double u) { return u; }, horizon, rng);
  }
  const double inv_beta = 1.0 / beta;
  return sim_poisson_timechange(
      [inv_beta](double u) { return std::pow(u, inv_beta); }, horizon, rng);
}

Trajectory sim_thinning(double rate_bound,
                        const std::function<double(double)>& rate_at,
                        double horizon, RngStream& rng) {
  if (!(rate_bound >= 0.0) || !std::isfinite(rate_bound)) {
    throw ParameterError("thinning bound must be finite and non-negative");
  }
  std::vector<double> events;
  if (rate_bound == 0.0) return Trajectory(std::move(events), horizon);
  double t = 0.0;
  for (;;) {
    t += rng.exponential() / rate_bound;
    if (t > horizon) break;
    const double rate = rate_at(t);
    if (!(rate <= rate_bound)) {
      throw ContractViolation("thinning: intensity " + std::to_string(rate) +
                              " at t = " + std::to_string(t) +
                              " exceeds the bound " +
                              std::to_string(rate_bound));
    }
    if (rng.uniform() * rate_bound < rate) events.push_back(t);
  }
  return Trajectory(std::move(events), horizon);
}

Trajectory sim_cox_model1(double theta, double horizon, RngStream& rng) {
  if (!(theta >= 0.0)) throw ParameterError("theta must be non-negative");
  // Beta(1/2, 1/2) by its arcsine inverse CDF.
  const double s = std::sin(0.5 * std::numbers::pi * rng.uniform());
  const double slope = theta * (2.0 + s * s);
  if (slope == 0.0) {
    return sim_poisson_timechange([](double u) { return u; }, horizon, rng);
  }
  // Lambda(t) = (exp(slope t) - 1) / slope.
  return sim_poisson_timechange(
      [slope](double u) { return std::log1p(slope * u) / slope; }, horizon,
      rng);
}

Trajectory sim_cox_model2(double theta, double horizon, RngStream& rng) {
  if (!(theta >= 0.0)) throw ParameterError("theta must be non-negative");
  RngStream path_rng = rng.substream(1);
  double w = 0.0;
  double last = 0.0;
  const double bound = std::exp(theta);
  auto rate_at = [&](double t) {
    w += std::sqrt(t - last) * path_rng.normal();
    last = t;
    return std::exp(theta * std::sin(w));
  };
  return sim_thinning(bound, rate_at, horizon, rng);
}

Trajectory sim_local_alt_path(const LocalAlt& model, double horizon,
                              RngStream& rng) {
  ModelSpec{model, horizon}.validate();
  const double z = model.w * std::numbers::sqrt3 * (2.0 * rng.uniform() - 1.0);
  // Rounding can push lambda0 - d_n w sqrt3 = 0 slightly below zero.
  const double rate = std::max(0.0, model.lambda0 + model.d_n * z);
  return sim_homogeneous(rate, horizon, rng);
}

Trajectory simulate_trajectory(const ModelSpec& spec, RngStream& rng) {
  const double horizon = spec.horizon;
  return std::visit(
      Overloaded{
          [&](const HomPoisson& m) {
            return sim_homogeneous(m.rate, horizon, rng);
          },
          [&](const Weibull& m) { return sim_weibull(m.beta, horizon, rng); },
          [&](const CoxModel1& m) {
            return sim_cox_model1(m.theta, horizon, rng);
          },
          [&](const CoxModel2& m) {
            return sim_cox_model2(m.theta, horizon, rng);
          },
          [&](const LocalAlt& m) {
            return sim_local_alt_path(m, horizon, rng);
          },
      },
      spec.variant);
}

TrajectorySet simulate_set(const ModelSpec& spec, std::size_t n,
                           std::uint64_t seed) {
  spec.validate();
  std::vector<Trajectory> paths;
  paths.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng(seed, i);
    paths.push_back(simulate_trajectory(spec, rng));
  }
  return TrajectorySet(std::move(paths));
}

TrajectorySet sim_local_alt(double lambda0, double w, double d, std::size_t n,
                            double horizon, std::uint64_t seed) {
  ModelSpec spec{LocalAlt::from_limit(lambda0, w, d, n), horizon};
  return simulate_set(spec, n, seed);
}

}  // namespace coxtest
