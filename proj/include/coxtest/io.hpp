#ifndef COXTEST_IO_HPP_
#define COXTEST_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxtest/mc_harness.hpp"
#include "coxtest/test_engine.hpp"
#include "coxtest/trajectory.hpp"

namespace coxtest {

struct LoadedSample {
  TrajectorySet set;
  std::vector<std::string> ids;       // ids[i] labels set[i]
  std::vector<std::string> warnings;  // e.g. repeated times in a trajectory
};

/// Reads `traj_id,time` CSV (header required, LF or CRLF). Rows are grouped
/// by id in order of first appearance; ids in `include_empty_ids` that never
/// occur are appended as empty trajectories.
///
/// Throws DataError for unparsable rows (with line number) and for times
/// outside (0, horizon] (naming the trajectory), InvalidSampleError when
/// fewer than two trajectories result.
LoadedSample parse_trajectories(std::istream& in, double horizon,
                                std::span<const std::string> include_empty_ids = {});
LoadedSample load_trajectories(const std::filesystem::path& path, double horizon,
                               std::span<const std::string> include_empty_ids = {});

/// One id per line; blank lines and surrounding whitespace are ignored.
std::vector<std::string> read_id_list(const std::filesystem::path& path);

/// Writes the sample in the `traj_id,time` format with round-trip precision.
/// Ids default to the trajectory index. Empty trajectories produce no rows.
void write_trajectories(std::ostream& out, const TrajectorySet& set,
                        std::span<const std::string> ids = {});

/// Keeps events in (a, b], shifts them by -a and sets the horizon to b - a.
/// Throws ParameterError unless 0 <= a < b <= T.
TrajectorySet window_rescale(const TrajectorySet& set, double a, double b);

/// Formats a number with 9 significant digits.
std::string format_number(double value);

nlohmann::ordered_json to_json(const TestReport& report);
nlohmann::ordered_json to_json(const McResult& result);
nlohmann::ordered_json to_json(const McConfig& config);

void write_report_text(std::ostream& out, const TestReport& report);
void write_report_csv(std::ostream& out, const TestReport& report);

/// Writes the header
///   <param>,n,alpha,<stat>_s1,se_s1,<stat>_s2,se_s2,n_mc,seed
/// and one row per result; params[i] fills the first column of row i.
/// Power curves use ("theta", "power"), level studies ("beta", "freq").
void write_mc_csv_header(std::ostream& out, const std::string& param_name,
                         const std::string& stat_name);
void write_mc_csv_row(std::ostream& out, double param, const McResult& result);

}  // namespace coxtest

#endif  // COXTEST_IO_HPP_
