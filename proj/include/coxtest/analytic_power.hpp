#ifndef COXTEST_ANALYTIC_POWER_HPP_
#define COXTEST_ANALYTIC_POWER_HPP_

namespace coxtest {

/// Local alternative lambda = lambda0 + d_n Z with constant baseline and a
/// time-constant perturbation Z of variance w2, where sqrt(n) d_n^2 -> d.
/// The limiting powers depend on these only through x = d * w2 * T and
/// lambda0.
struct AnalyticPowerParams {
  double lambda0 = 1.0;
  double w2 = 0.0;
  double d = 0.0;
  double horizon = 1.0;
  double alpha = 0.05;

  double x() const { return d * w2 * horizon; }
  /// Throws ParameterError on lambda0 <= 0, negative w2 or d, T <= 0 or
  /// alpha outside (0, 1).
  void validate() const;
};

/// Limiting rejection probability of the supremum test, from the law of the
/// supremum of a drifted Brownian motion:
///   exp(sqrt2 x q / lambda0) (1 - Phi(q + x / (sqrt2 lambda0)))
///     + 1 - Phi(q - x / (sqrt2 lambda0)),   q = q_{1 - alpha/2}.
double analytic_power_g1(const AnalyticPowerParams& p);
double analytic_power_g1(double x, double lambda0, double alpha);

/// Limiting rejection probability of the integral test:
///   1 - Phi(q_{1 - alpha} - x / (sqrt3 lambda0)).
double analytic_power_g2(const AnalyticPowerParams& p);
double analytic_power_g2(double x, double lambda0, double alpha);

}  // namespace coxtest

#endif  // COXTEST_ANALYTIC_POWER_HPP_
