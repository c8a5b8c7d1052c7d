#ifndef COXTEST_NORMAL_HPP_
#define COXTEST_NORMAL_HPP_

namespace coxtest {

/// Standard normal distribution function.
double normal_cdf(double x);

/// Upper tail 1 - normal_cdf(x), accurate far into the tail.
double normal_sf(double x);

/// Standard normal quantile; throws DomainError unless 0 < beta < 1.
double normal_quantile(double beta);

/// q_{1 - p} computed without forming 1 - p, so small upper-tail
/// probabilities keep full relative precision. Same domain as
/// normal_quantile.
double normal_upper_quantile(double p);

}  // namespace coxtest

#endif  // COXTEST_NORMAL_HPP_
