#include "coxtest/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coxtest/error.hpp"

namespace coxtest {

StepFunction::StepFunction(std::vector<double> breakpoints,
                           std::vector<double> values, double horizon)
    : breakpoints_(std::move(breakpoints)),
      values_(std::move(values)),
      horizon_(horizon) {
  if (!(std::isfinite(horizon_) && horizon_ > 0.0)) {
    throw ParameterError("step function horizon must be positive and finite");
  }
  if (breakpoints_.empty() || breakpoints_.size() != values_.size()) {
    throw ParameterError(
        "step function needs one value per breakpoint and at least one piece");
  }
  if (breakpoints_.front() != 0.0) {
    throw ParameterError("step function must start at t = 0");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1])) {
      throw ParameterError("step function breakpoints must strictly increase");
    }
  }
  if (!(breakpoints_.back() <= horizon_)) {
    throw ParameterError("step function breakpoint beyond the horizon");
  }
}

StepFunction StepFunction::constant(double value, double horizon) {
  return StepFunction({0.0}, {value}, horizon);
}

double StepFunction::operator()(double t) const {
  if (!(t >= 0.0 && t <= horizon_)) {
    throw DomainError("step function evaluated at " + std::to_string(t) +
                      " outside [0, T]");
  }
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double step_sup(const StepFunction& f) {
  const auto v = f.values();
  return *std::max_element(v.begin(), v.end());
}

double step_integral(const StepFunction& f) {
  const auto t = f.breakpoints();
  const auto c = f.values();
  double total = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double next = i + 1 < t.size() ? t[i + 1] : f.horizon();
    total += c[i] * (next - t[i]);
  }
  return total;
}

double step_weighted_integral(const StepFunction& f) {
  const auto t = f.breakpoints();
  const auto c = f.values();
  const double horizon = f.horizon();
  double total = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double next = i + 1 < t.size() ? t[i + 1] : horizon;
    const double left = horizon - t[i];
    const double right = horizon - next;
    // (left^2 - right^2)/2 factored to avoid cancellation on short pieces.
    total += c[i] * c[i] * (left - right) * (left + right) * 0.5;
  }
  return total;
}

StepFunction linear_combination(double a, const StepFunction& f, double b,
                                const StepFunction& g) {
  if (f.horizon() != g.horizon()) {
    throw ParameterError("linear_combination: horizons differ");
  }
  const auto tf = f.breakpoints();
  const auto tg = g.breakpoints();
  std::vector<double> merged;
  merged.reserve(tf.size() + tg.size());
  std::set_union(tf.begin(), tf.end(), tg.begin(), tg.end(),
                 std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  std::vector<double> values;
  values.reserve(merged.size());
  std::size_t i = 0;
  std::size_t j = 0;
  for (double t : merged) {
    while (i + 1 < tf.size() && tf[i + 1] <= t) ++i;
    while (j + 1 < tg.size() && tg[j + 1] <= t) ++j;
    values.push_back(a * f.values()[i] + b * g.values()[j]);
  }
  return StepFunction(std::move(merged), std::move(values), f.horizon());
}

}  // namespace coxtest
