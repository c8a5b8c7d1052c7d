#include "coxtest/test_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coxtest/error.hpp"
#include "coxtest/normal.hpp"

namespace coxtest {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("alpha must lie in (0, 1)");
  }
}

}  // namespace

double sup_critical_value(double alpha) {
  check_alpha(alpha);
  return std::numbers::sqrt2 * normal_upper_quantile(alpha / 2.0);
}

double integral_critical_value(double alpha) {
  check_alpha(alpha);
  return 2.0 * normal_upper_quantile(alpha);
}

TestReport run_test(const EmpiricalCurves& curves, double alpha) {
  check_alpha(alpha);
  TestReport r;
  r.n = curves.n;
  r.alpha = alpha;
  r.m_hat_T = curves.mean.values().back();
  r.i_hat = i_hat(curves);
  if (!(r.m_hat_T > 0.0) || !(r.i_hat > 0.0)) {
    throw DegenerateSampleError(
        "sample has no events; the test normalizers vanish");
  }
  r.s1 = step_sup(curves.diff);
  r.s2 = step_integral(curves.diff);

  const double root_n = std::sqrt(static_cast<double>(curves.n));
  r.t1 = root_n * r.s1 / r.m_hat_T;
  r.t2 = root_n * r.s2 / r.i_hat;

  r.crit1 = sup_critical_value(alpha);
  r.crit2 = integral_critical_value(alpha);
  r.reject1 = r.t1 >= r.crit1;
  r.reject2 = r.t2 >= r.crit2;

  // Folded normal tail for t1, one-sided N(0, 4) tail for t2.
  r.p1 = std::clamp(2.0 * normal_sf(r.t1 / std::numbers::sqrt2), 0.0, 1.0);
  r.p2 = normal_sf(r.t2 / 2.0);
  return r;
}

TestReport run_test(const TrajectorySet& set, double alpha) {
  check_alpha(alpha);
  return run_test(empirical_curves(set), alpha);
}

}  // namespace coxtest
