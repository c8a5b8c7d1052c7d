#ifndef COXTEST_EMPIRICAL_HPP_
#define COXTEST_EMPIRICAL_HPP_

#include <cstddef>

#include "coxtest/step_function.hpp"
#include "coxtest/trajectory.hpp"

namespace coxtest {

/// Empirical mean, variance (divisor n - 1) and their difference for a
/// sample, as exact step functions on the merged jump times.
struct EmpiricalCurves {
  StepFunction mean;
  StepFunction variance;
  StepFunction diff;  // variance - mean
  std::size_t n;
  double horizon;
};

/// Breakpoints are 0 followed by the distinct event times of the whole
/// sample. Counts are accumulated as integers and every curve value is the
/// rounded quotient of exact integer sums, so the result does not depend on
/// the order of the trajectories.
EmpiricalCurves empirical_curves(const TrajectorySet& set);

/// sqrt of the integral of (T - t) * mean(t)^2; zero iff the sample has no
/// events.
double i_hat(const EmpiricalCurves& curves);
double i_hat(const TrajectorySet& set);

}  // namespace coxtest

#endif  // COXTEST_EMPIRICAL_HPP_
