#ifndef COXTEST_TRAJECTORY_HPP_
#define COXTEST_TRAJECTORY_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace coxtest {

/// One observed counting path: its jump times on (0, T].
///
/// Events are stored sorted. Repeated times are kept and each counts as a
/// separate jump; has_duplicate_times() lets loaders warn about them.
class Trajectory {
 public:
  /// Throws InvalidSampleError if `horizon` is not a positive finite number,
  /// if the events are not sorted, or if an event lies outside (0, horizon].
  Trajectory(std::vector<double> events, double horizon);

  /// Same as the constructor but sorts `events` first.
  static Trajectory from_unsorted(std::vector<double> events, double horizon);

  std::span<const double> events() const { return events_; }
  double horizon() const { return horizon_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  bool has_duplicate_times() const;

 private:
  std::vector<double> events_;
  double horizon_;
};

/// N_t: the number of events in [0, t]. Throws DomainError unless
/// 0 <= t <= T.
std::size_t count_at(const Trajectory& trajectory, double t);

/// The sample N^(1), ..., N^(n): at least two trajectories sharing one
/// horizon.
class TrajectorySet {
 public:
  /// Throws InvalidSampleError if fewer than two trajectories are given or
  /// their horizons differ.
  explicit TrajectorySet(std::vector<Trajectory> trajectories);

  std::span<const Trajectory> trajectories() const { return trajectories_; }
  const Trajectory& operator[](std::size_t i) const { return trajectories_[i]; }
  std::size_t size() const { return trajectories_.size(); }
  double horizon() const { return trajectories_.front().horizon(); }
  std::size_t total_events() const;

 private:
  std::vector<Trajectory> trajectories_;
};

}  // namespace coxtest

#endif  // COXTEST_TRAJECTORY_HPP_
