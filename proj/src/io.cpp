#include "coxtest/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "coxtest/error.hpp"

namespace coxtest {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string line_error(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

double parse_time(std::string_view field, std::size_t line) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty() ||
      !std::isfinite(value)) {
    throw DataError(line_error(line, "cannot parse time '" +
                                         std::string(field) + "'"));
  }
  return value;
}

// Shortest decimal string that reads back to the same double.
std::string round_trip(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace

LoadedSample parse_trajectories(std::istream& in, double horizon,
                                std::span<const std::string> include_empty_ids) {
  if (!(std::isfinite(horizon) && horizon > 0.0)) {
    throw ParameterError("horizon must be positive and finite");
  }
  std::vector<std::string> ids;
  std::vector<std::vector<double>> times;
  std::unordered_map<std::string, std::size_t> index;

  std::string raw;
  std::size_t line = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view row = trim(raw);
    if (line == 1 && row.starts_with("\xEF\xBB\xBF")) row = trim(row.substr(3));
    if (row.empty()) continue;
    if (!header_seen) {
      const auto comma = row.find(',');
      if (comma == std::string_view::npos ||
          trim(row.substr(0, comma)) != "traj_id" ||
          trim(row.substr(comma + 1)) != "time") {
        throw DataError(line_error(line, "expected header 'traj_id,time'"));
      }
      header_seen = true;
      continue;
    }
    const auto comma = row.find(',');
    if (comma == std::string_view::npos ||
        row.find(',', comma + 1) != std::string_view::npos) {
      throw DataError(line_error(line, "expected two fields 'traj_id,time'"));
    }
    const std::string id(trim(row.substr(0, comma)));
    if (id.empty()) throw DataError(line_error(line, "empty traj_id"));
    const double t = parse_time(trim(row.substr(comma + 1)), line);
    if (!(t > 0.0 && t <= horizon)) {
      throw DataError(line_error(line, "time " + round_trip(t) +
                                           " of trajectory '" + id +
                                           "' outside (0, " +
                                           round_trip(horizon) + "]"));
    }
    auto [it, inserted] = index.try_emplace(id, ids.size());
    if (inserted) {
      ids.push_back(id);
      times.emplace_back();
    }
    times[it->second].push_back(t);
  }
  // A file without any content (not even the header) is an empty table.

  for (const auto& id : include_empty_ids) {
    if (index.try_emplace(id, ids.size()).second) {
      ids.push_back(id);
      times.emplace_back();
    }
  }

  std::vector<std::string> warnings;
  std::vector<Trajectory> paths;
  paths.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    paths.push_back(Trajectory::from_unsorted(std::move(times[i]), horizon));
    if (paths.back().has_duplicate_times()) {
      warnings.push_back("trajectory '" + ids[i] +
                         "' has repeated event times; each counts as a jump");
    }
  }
  if (paths.size() < 2) {
    throw InvalidSampleError("need at least two trajectories, found " +
                             std::to_string(paths.size()));
  }
  return LoadedSample{TrajectorySet(std::move(paths)), std::move(ids),
                      std::move(warnings)};
}

LoadedSample load_trajectories(const std::filesystem::path& path, double horizon,
                               std::span<const std::string> include_empty_ids) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_trajectories(in, horizon, include_empty_ids);
}

std::vector<std::string> read_id_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<std::string> ids;
  std::string raw;
  while (std::getline(in, raw)) {
    const auto id = trim(raw);
    if (!id.empty()) ids.emplace_back(id);
  }
  return ids;
}

void write_trajectories(std::ostream& out, const TrajectorySet& set,
                        std::span<const std::string> ids) {
  if (!ids.empty() && ids.size() != set.size()) {
    throw ParameterError("write_trajectories: one id per trajectory required");
  }
  out << "traj_id,time\n";
  for (std::size_t i = 0; i < set.size(); ++i) {
    const std::string id = ids.empty() ? std::to_string(i) : ids[i];
    for (double t : set[i].events()) out << id << ',' << round_trip(t) << '\n';
  }
}

TrajectorySet window_rescale(const TrajectorySet& set, double a, double b) {
  if (!(a >= 0.0 && a < b && b <= set.horizon())) {
    throw ParameterError("window [" + round_trip(a) + ", " + round_trip(b) +
                         "] must satisfy 0 <= a < b <= T");
  }
  const double width = b - a;
  std::vector<Trajectory> paths;
  paths.reserve(set.size());
  for (const auto& traj : set.trajectories()) {
    std::vector<double> kept;
    for (double t : traj.events()) {
      if (t > a && t <= b) kept.push_back(t - a);
    }
    paths.emplace_back(std::move(kept), width);
  }
  return TrajectorySet(std::move(paths));
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

namespace {

// JSON numbers carry the same 9 significant digits as the CSV output.
double nine_digits(double value) { return std::stod(format_number(value)); }

}  // namespace

nlohmann::ordered_json to_json(const TestReport& r) {
  return {{"n", r.n},
          {"alpha", nine_digits(r.alpha)},
          {"s1", nine_digits(r.s1)},
          {"s2", nine_digits(r.s2)},
          {"m_hat_T", nine_digits(r.m_hat_T)},
          {"i_hat", nine_digits(r.i_hat)},
          {"t1", nine_digits(r.t1)},
          {"t2", nine_digits(r.t2)},
          {"crit1", nine_digits(r.crit1)},
          {"crit2", nine_digits(r.crit2)},
          {"p1", nine_digits(r.p1)},
          {"p2", nine_digits(r.p2)},
          {"reject1", r.reject1},
          {"reject2", r.reject2}};
}

nlohmann::ordered_json to_json(const McConfig& c) {
  return {{"model", c.model.name()},
          {"horizon", nine_digits(c.model.horizon)},
          {"n", c.n},
          {"n_mc", c.n_mc},
          {"alpha", nine_digits(c.alpha)},
          {"seed", c.master_seed}};
}

nlohmann::ordered_json to_json(const McResult& r) {
  return {{"config", to_json(r.config)},
          {"valid_trials", r.valid_trials},
          {"degenerate_trials", r.degenerate_trials},
          {"reject_freq_s1", nine_digits(r.reject_freq_s1)},
          {"se_s1", nine_digits(r.se_s1)},
          {"reject_freq_s2", nine_digits(r.reject_freq_s2)},
          {"se_s2", nine_digits(r.se_s2)}};
}

void write_report_text(std::ostream& out, const TestReport& r) {
  out << "n        " << r.n << '\n'
      << "alpha    " << format_number(r.alpha) << '\n'
      << "m_hat_T  " << format_number(r.m_hat_T) << '\n'
      << "i_hat    " << format_number(r.i_hat) << '\n'
      << "S1       " << format_number(r.s1) << "  t1 " << format_number(r.t1)
      << "  p1 " << format_number(r.p1) << "  "
      << (r.reject1 ? "reject" : "do not reject") << '\n'
      << "S2       " << format_number(r.s2) << "  t2 " << format_number(r.t2)
      << "  p2 " << format_number(r.p2) << "  "
      << (r.reject2 ? "reject" : "do not reject") << '\n';
}

void write_report_csv(std::ostream& out, const TestReport& r) {
  out << "n,alpha,s1,s2,m_hat_T,i_hat,t1,t2,p1,p2,reject1,reject2\n"
      << r.n << ',' << format_number(r.alpha) << ',' << format_number(r.s1)
      << ',' << format_number(r.s2) << ',' << format_number(r.m_hat_T) << ','
      << format_number(r.i_hat) << ',' << format_number(r.t1) << ','
      << format_number(r.t2) << ',' << format_number(r.p1) << ','
      << format_number(r.p2) << ',' << (r.reject1 ? 1 : 0) << ','
      << (r.reject2 ? 1 : 0) << '\n';
}

void write_mc_csv_header(std::ostream& out, const std::string& param_name,
                         const std::string& stat_name) {
  out << param_name << ",n,alpha," << stat_name << "_s1,se_s1," << stat_name
      << "_s2,se_s2,n_mc,seed\n";
}

void write_mc_csv_row(std::ostream& out, double param, const McResult& r) {
  out << format_number(param) << ',' << r.config.n << ','
      << format_number(r.config.alpha) << ','
      << format_number(r.reject_freq_s1) << ',' << format_number(r.se_s1)
      << ',' << format_number(r.reject_freq_s2) << ','
      << format_number(r.se_s2) << ',' << r.config.n_mc << ','
      << r.config.master_seed << '\n';
}

}  // namespace coxtest
