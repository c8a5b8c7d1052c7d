#include "coxtest/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "coxtest/error.hpp"

namespace coxtest {

Trajectory::Trajectory(std::vector<double> events, double horizon)
    : events_(std::move(events)), horizon_(horizon) {
  if (!(std::isfinite(horizon_) && horizon_ > 0.0)) {
    throw InvalidSampleError("trajectory horizon must be positive and finite");
  }
  if (!std::is_sorted(events_.begin(), events_.end())) {
    throw InvalidSampleError("trajectory events must be sorted");
  }
  if (!events_.empty()) {
    // Sorted, so checking the extremes covers every event (NaN fails both).
    if (!(events_.front() > 0.0)) {
      throw InvalidSampleError("event time " + std::to_string(events_.front()) +
                               " is not in (0, T]");
    }
    if (!(events_.back() <= horizon_)) {
      throw InvalidSampleError("event time " + std::to_string(events_.back()) +
                               " exceeds the horizon " +
                               std::to_string(horizon_));
    }
    for (double t : events_) {
      if (std::isnan(t)) throw InvalidSampleError("event time is NaN");
    }
  }
}

Trajectory Trajectory::from_unsorted(std::vector<double> events,
                                     double horizon) {
  for (double t : events) {
    if (std::isnan(t)) throw InvalidSampleError("event time is NaN");
  }
  std::sort(events.begin(), events.end());
  return Trajectory(std::move(events), horizon);
}

bool Trajectory::has_duplicate_times() const {
  return std::adjacent_find(events_.begin(), events_.end()) != events_.end();
}

std::size_t count_at(const Trajectory& trajectory, double t) {
  if (!(t >= 0.0 && t <= trajectory.horizon())) {
    throw DomainError("count_at: time " + std::to_string(t) +
                      " outside [0, T]");
  }
  const auto events = trajectory.events();
  return static_cast<std::size_t>(
      std::upper_bound(events.begin(), events.end(), t) - events.begin());
}

TrajectorySet::TrajectorySet(std::vector<Trajectory> trajectories)
    : trajectories_(std::move(trajectories)) {
  if (trajectories_.size() < 2) {
    throw InvalidSampleError("a sample needs at least two trajectories, got " +
                             std::to_string(trajectories_.size()));
  }
  const double horizon = trajectories_.front().horizon();
  for (const auto& traj : trajectories_) {
    if (traj.horizon() != horizon) {
      throw InvalidSampleError("trajectories have mismatched horizons");
    }
  }
}

std::size_t TrajectorySet::total_events() const {
  return std::accumulate(
      trajectories_.begin(), trajectories_.end(), std::size_t{0},
      [](std::size_t acc, const Trajectory& t) { return acc + t.size(); });
}

}  // namespace coxtest
