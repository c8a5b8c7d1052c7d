#ifndef COXTEST_TESTS_FIXTURES_HPP_
#define COXTEST_TESTS_FIXTURES_HPP_

#include <cmath>
#include <random>
#include <vector>

#include "coxtest/trajectory.hpp"

namespace coxtest::fixture {

// T = 1, A = {0.2, 0.3}, B = {0.5}, C = {}.
inline TrajectorySet f1() {
  return TrajectorySet({Trajectory({0.2, 0.3}, 1.0), Trajectory({0.5}, 1.0),
                        Trajectory({}, 1.0)});
}

// n trajectories with Poisson(mean_count) uniformly placed events; event
// times are rounded to a 1/1024 grid when `ties` is set so that tied times
// occur within and across trajectories.
inline TrajectorySet random_set(std::mt19937_64& gen, std::size_t n,
                                double horizon, double mean_count,
                                bool ties = false) {
  std::poisson_distribution<int> count(mean_count);
  std::uniform_real_distribution<double> when(0.0, horizon);
  std::vector<Trajectory> paths;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> events(static_cast<std::size_t>(count(gen)));
    for (auto& t : events) {
      t = when(gen);
      if (ties) t = std::ceil(t / horizon * 1024.0) * horizon / 1024.0;
      if (t <= 0.0) t = horizon;
    }
    paths.push_back(Trajectory::from_unsorted(std::move(events), horizon));
  }
  return TrajectorySet(std::move(paths));
}

}  // namespace coxtest::fixture

#endif  // COXTEST_TESTS_FIXTURES_HPP_
