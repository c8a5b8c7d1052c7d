#include "coxtest/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "coxtest/error.hpp"

namespace coxtest {

namespace {

struct Jump {
  double time;
  std::uint32_t trajectory;
};

}  // namespace

EmpiricalCurves empirical_curves(const TrajectorySet& set) {
  const std::size_t n = set.size();
  std::vector<Jump> jumps;
  jumps.reserve(set.total_events());
  std::size_t max_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    max_count = std::max(max_count, set[i].size());
    for (double t : set[i].events()) {
      jumps.push_back({t, static_cast<std::uint32_t>(i)});
    }
  }
  // n * sum(count^2) must stay representable in int64.
  const long double bound = static_cast<long double>(n) * n *
                            static_cast<long double>(max_count) * max_count;
  if (bound > static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw InvalidSampleError("sample too large for exact count accumulation");
  }
  std::sort(jumps.begin(), jumps.end(),
            [](const Jump& a, const Jump& b) { return a.time < b.time; });

  const auto ni = static_cast<std::int64_t>(n);
  const long double denom_mean = static_cast<long double>(ni);
  const long double denom_var = static_cast<long double>(ni) * (ni - 1);

  std::vector<double> breakpoints{0.0};
  std::vector<double> mean{0.0};
  std::vector<double> variance{0.0};
  std::vector<double> diff{0.0};
  breakpoints.reserve(jumps.size() + 1);
  mean.reserve(jumps.size() + 1);
  variance.reserve(jumps.size() + 1);
  diff.reserve(jumps.size() + 1);

  std::vector<std::int64_t> counts(n, 0);
  std::int64_t sum = 0;     // sum of counts
  std::int64_t sum_sq = 0;  // sum of squared counts
  std::size_t k = 0;
  while (k < jumps.size()) {
    const double t = jumps[k].time;
    for (; k < jumps.size() && jumps[k].time == t; ++k) {
      auto& c = counts[jumps[k].trajectory];
      sum_sq += 2 * c + 1;
      sum += 1;
      ++c;
    }
    // n * sum((c - mean)^2) = n * sum_sq - sum^2, exactly.
    const std::int64_t centered = ni * sum_sq - sum * sum;
    breakpoints.push_back(t);
    mean.push_back(static_cast<double>(sum / denom_mean));
    variance.push_back(static_cast<double>(centered / denom_var));
    diff.push_back(
        static_cast<double>((centered - (ni - 1) * sum) / denom_var));
  }

  const double horizon = set.horizon();
  return EmpiricalCurves{
      StepFunction(breakpoints, std::move(mean), horizon),
      StepFunction(breakpoints, std::move(variance), horizon),
      StepFunction(std::move(breakpoints), std::move(diff), horizon), n,
      horizon};
}

double i_hat(const EmpiricalCurves& curves) {
  return std::sqrt(step_weighted_integral(curves.mean));
}

double i_hat(const TrajectorySet& set) { return i_hat(empirical_curves(set)); }

}  // namespace coxtest
