#ifndef COXTEST_STEP_FUNCTION_HPP_
#define COXTEST_STEP_FUNCTION_HPP_

#include <span>
#include <vector>

namespace coxtest {

/// Right-continuous piecewise-constant function on [0, T].
///
/// With breakpoints 0 = t_0 < t_1 < ... < t_k <= T and values c_0..c_k the
/// function equals c_i on [t_i, t_{i+1}) and c_k on [t_k, T]. A last
/// breakpoint equal to T gives a zero-length piece whose value is attained
/// only at T.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> values,
               double horizon);

  static StepFunction constant(double value, double horizon);

  /// Evaluates at t in [0, T]; throws DomainError otherwise.
  double operator()(double t) const;

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }
  double horizon() const { return horizon_; }
  std::size_t pieces() const { return values_.size(); }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  double horizon_;
};

/// Exact supremum over [0, T].
double step_sup(const StepFunction& f);

/// Exact integral over [0, T].
double step_integral(const StepFunction& f);

/// Exact value of the integral of (T - t) f(t)^2 over [0, T].
double step_weighted_integral(const StepFunction& f);

/// a*f + b*g on the merged breakpoint set. Both functions must share T.
StepFunction linear_combination(double a, const StepFunction& f, double b,
                                const StepFunction& g);

}  // namespace coxtest

#endif  // COXTEST_STEP_FUNCTION_HPP_
