#include "coxtest/analytic_power.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coxtest/error.hpp"
#include "coxtest/normal.hpp"

namespace coxtest {

namespace {

void check(double x, double lambda0, double alpha) {
  if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) {
    throw ParameterError("lambda0 must be positive");
  }
  if (!(x >= 0.0)) throw ParameterError("x = d w^2 T must be non-negative");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("alpha must lie in (0, 1)");
  }
}

// log(1 - Phi(z)); switches to the Mills-ratio expansion once erfc
// underflows.
double log_normal_sf(double z) {
  if (z < 30.0) return std::log(normal_sf(z));
  const double inv2 = 1.0 / (z * z);
  return -0.5 * z * z - std::log(z * std::sqrt(2.0 * std::numbers::pi)) +
         std::log1p(-inv2 + 3.0 * inv2 * inv2);
}

}  // namespace

void AnalyticPowerParams::validate() const {
  if (!(w2 >= 0.0)) throw ParameterError("w2 must be non-negative");
  if (!(d >= 0.0)) throw ParameterError("d must be non-negative");
  if (!(horizon > 0.0)) throw ParameterError("horizon must be positive");
  check(x(), lambda0, alpha);
}

double analytic_power_g1(double x, double lambda0, double alpha) {
  check(x, lambda0, alpha);
  // No departure from the null: the power is the level, without the ulp-level
  // error of quantile(sf(.)) round trips.
  if (x == 0.0) return alpha;
  const double q = normal_upper_quantile(alpha / 2.0);
  const double shift = x / (std::numbers::sqrt2 * lambda0);
  // exp(a) * (1 - Phi(b)) evaluated in log space; the exponential alone
  // overflows for large x while the tail underflows.
  const double reflected = std::exp(std::numbers::sqrt2 * x * q / lambda0 +
                                    log_normal_sf(q + shift));
  return std::clamp(reflected + normal_sf(q - shift), 0.0, 1.0);
}

double analytic_power_g1(const AnalyticPowerParams& p) {
  p.validate();
  return analytic_power_g1(p.x(), p.lambda0, p.alpha);
}

double analytic_power_g2(double x, double lambda0, double alpha) {
  check(x, lambda0, alpha);
  if (x == 0.0) return alpha;
  const double q = normal_upper_quantile(alpha);
  return normal_sf(q - x / (std::numbers::sqrt3 * lambda0));
}

double analytic_power_g2(const AnalyticPowerParams& p) {
  p.validate();
  return analytic_power_g2(p.x(), p.lambda0, p.alpha);
}

}  // namespace coxtest
