#include "coxtest/normal.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "coxtest/error.hpp"

namespace coxtest {

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double normal_quantile(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("normal_quantile: probability " + std::to_string(beta) +
                      " not in (0, 1)");
  }
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * beta);
}

double normal_upper_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal_upper_quantile: probability " +
                      std::to_string(p) + " not in (0, 1)");
  }
  return std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

}  // namespace coxtest
