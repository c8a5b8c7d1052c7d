// Command-line front end: runs the Poisson-vs-Cox tests on event data,
// simulates samples, and drives the Monte Carlo experiments.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxtest/analytic_power.hpp"
#include "coxtest/error.hpp"
#include "coxtest/io.hpp"
#include "coxtest/mc_harness.hpp"
#include "coxtest/simulate.hpp"
#include "coxtest/test_engine.hpp"

namespace {

using namespace coxtest;

constexpr int kExitUsage = 1;
constexpr int kExitData = 3;
constexpr int kExitDegenerate = 4;

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw ParameterError("grid '" + text + "': cannot parse '" + field + "'");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    throw ParameterError("grid '" + text +
                         "' must be start:stop:step with step > 0");
  }
  const auto count =
      static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
  std::vector<double> grid;
  for (std::size_t k = 0; k < count; ++k) {
    grid.push_back(parts[0] + static_cast<double>(k) * parts[2]);
  }
  return grid;
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParameterError("window '" + text + "' must be 'a,b'");
  }
}

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument(item);
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      out[item.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError("params: expected key=value, got '" + item + "'");
    }
  }
  return out;
}

double take(std::map<std::string, double>& params, const std::string& key,
            std::optional<double> fallback = std::nullopt) {
  const auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw ParameterError("params: missing '" + key + "'");
  }
  const double v = it->second;
  params.erase(it);
  return v;
}

ModelSpec build_model(const std::string& name, const std::string& param_text,
                      double horizon, std::size_t n) {
  auto params = parse_params(param_text);
  ModelSpec spec;
  spec.horizon = horizon;
  if (name == "hompoisson") {
    spec.variant = HomPoisson{take(params, "rate", 1.0)};
  } else if (name == "weibull") {
    spec.variant = Weibull{take(params, "beta")};
  } else if (name == "cox1") {
    spec.variant = CoxModel1{take(params, "theta")};
  } else if (name == "cox2") {
    spec.variant = CoxModel2{take(params, "theta")};
  } else if (name == "localalt") {
    const double lambda0 = take(params, "lambda0");
    const double w = take(params, "w");
    if (params.contains("d_n")) {
      spec.variant = LocalAlt{lambda0, w, take(params, "d_n")};
    } else {
      spec.variant = LocalAlt::from_limit(lambda0, w, take(params, "d"), n);
    }
  } else {
    throw ParameterError("unknown model '" + name + "'");
  }
  if (!params.empty()) {
    throw ParameterError("params: unknown key '" + params.begin()->first +
                         "' for model " + name);
  }
  spec.validate();
  return spec;
}

// Writes to `path`, or stdout when it is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DataError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_json(const std::string& path, const nlohmann::ordered_json& doc) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonparametric Poisson-versus-Cox tests for samples of "
               "counting-process trajectories"};
  app.require_subcommand(1);

  // test
  auto* test_cmd = app.add_subcommand("test", "Run both tests on event data");
  std::string input;
  double horizon = 1.0;
  std::string window;
  double alpha = 0.05;
  std::string include_empty;
  bool as_json = false;
  bool as_csv = false;
  test_cmd->add_option("--input", input, "CSV with header traj_id,time")
      ->required();
  test_cmd->add_option("--horizon", horizon, "Observation horizon T")
      ->required();
  test_cmd->add_option("--window", window,
                       "Keep events in (a,b] and shift them to (0,b-a]");
  test_cmd->add_option("--alpha", alpha, "Test level");
  test_cmd->add_option("--include-empty", include_empty,
                       "File listing trajectory ids that have no events");
  auto* json_flag = test_cmd->add_flag("--json", as_json, "JSON output");
  test_cmd->add_flag("--csv", as_csv, "CSV output")->excludes(json_flag);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate a sample");
  std::string model_name;
  std::string params;
  std::size_t n = 100;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string ids_out;
  sim_cmd->add_option("--model", model_name, "Model")
      ->required()
      ->check(CLI::IsMember(
          {"weibull", "cox1", "cox2", "localalt", "hompoisson"}));
  sim_cmd->add_option("--params", params,
                      "key=value list: beta | theta | rate | lambda0,w,d or "
                      "lambda0,w,d_n");
  sim_cmd->add_option("--n", n, "Number of trajectories")->required();
  sim_cmd->add_option("--horizon", horizon, "Observation horizon T");
  sim_cmd->add_option("--seed", seed, "Master seed");
  sim_cmd->add_option("--out", out_path, "Output CSV (traj_id,time)")
      ->required();
  sim_cmd->add_option("--ids-out", ids_out,
                      "Also write every trajectory id, for --include-empty");

  // mc-level
  auto* level_cmd = app.add_subcommand("mc-level", "Level study under Weibull nulls");
  std::vector<double> betas{1.0};
  std::vector<std::size_t> ns{100};
  std::vector<double> alphas{0.05};
  std::size_t n_mc = 10000;
  unsigned workers = 1;
  std::string json_path;
  level_cmd->add_option("--beta", betas, "Weibull shape(s)")->delimiter(',');
  level_cmd->add_option("--n", ns, "Sample size(s)")->delimiter(',');
  level_cmd->add_option("--alpha", alphas, "Level(s)")->delimiter(',');
  level_cmd->add_option("--nmc", n_mc, "Monte Carlo trials per cell");
  level_cmd->add_option("--seed", seed, "Master seed");
  level_cmd->add_option("--workers", workers, "Worker threads");
  level_cmd->add_option("--horizon", horizon, "Observation horizon T");
  level_cmd->add_option("--out", out_path, "Output CSV (default stdout)");
  level_cmd->add_option("--json", json_path, "JSON summary file");

  // mc-power
  auto* power_cmd = app.add_subcommand("mc-power", "Power curve under a Cox model");
  std::string theta_grid = "0:1:0.1";
  std::optional<std::size_t> power_nmc;
  power_cmd->add_option("--model", model_name, "cox1 or cox2")
      ->required()
      ->check(CLI::IsMember({"cox1", "cox2"}));
  power_cmd->add_option("--theta-grid", theta_grid, "start:stop:step");
  power_cmd->add_option("--n", ns, "Sample size(s)")->delimiter(',');
  power_cmd->add_option("--nmc", power_nmc,
                        "Monte Carlo trials per point (default 10000 for "
                        "cox1, 1000 for cox2)");
  power_cmd->add_option("--alpha", alpha, "Test level");
  power_cmd->add_option("--seed", seed, "Master seed");
  power_cmd->add_option("--workers", workers, "Worker threads");
  power_cmd->add_option("--horizon", horizon, "Observation horizon T");
  power_cmd->add_option("--out", out_path, "Output CSV (default stdout)");
  power_cmd->add_option("--json", json_path, "JSON summary file");

  // power-analytic
  auto* analytic_cmd = app.add_subcommand(
      "power-analytic", "Limiting power of both tests under local alternatives");
  double lambda0 = 1.0;
  std::string x_grid = "0:5:0.05";
  bool mc_check = false;
  std::size_t paths = 100000;
  std::size_t steps = 10000;
  analytic_cmd->add_option("--lambda0", lambda0, "Baseline intensity");
  analytic_cmd->add_option("--alpha", alpha, "Test level");
  analytic_cmd->add_option("--x-grid", x_grid, "start:stop:step");
  analytic_cmd->add_option("--out", out_path, "Output CSV (default stdout)");
  analytic_cmd->add_flag("--mc-check", mc_check,
                         "Add a drifted Brownian motion Monte Carlo column");
  analytic_cmd->add_option("--paths", paths, "Monte Carlo paths");
  analytic_cmd->add_option("--steps", steps, "Grid steps per path");
  analytic_cmd->add_option("--seed", seed, "Master seed");
  analytic_cmd->add_option("--workers", workers, "Worker threads");

  // limit-law
  auto* law_cmd = app.add_subcommand(
      "limit-law", "KS distances of the standardized statistics to their limits");
  double rate = 1.0;
  double threshold = 0.05;
  law_cmd->add_option("--rate", rate, "Homogeneous Poisson rate");
  law_cmd->add_option("--n", n, "Sample size");
  law_cmd->add_option("--nmc", n_mc, "Monte Carlo trials");
  law_cmd->add_option("--seed", seed, "Master seed");
  law_cmd->add_option("--workers", workers, "Worker threads");
  law_cmd->add_option("--horizon", horizon, "Observation horizon T");
  law_cmd->add_option("--threshold", threshold, "KS distance threshold");
  law_cmd->add_option("--json", json_path, "JSON summary file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*test_cmd) {
      std::vector<std::string> empty_ids;
      if (!include_empty.empty()) empty_ids = read_id_list(include_empty);
      auto loaded = load_trajectories(input, horizon, empty_ids);
      for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
      TrajectorySet set = loaded.set;
      if (!window.empty()) {
        const auto [a, b] = parse_window(window);
        set = window_rescale(set, a, b);
      }
      const TestReport report = run_test(set, alpha);
      if (as_json) {
        std::cout << to_json(report).dump(2) << '\n';
      } else if (as_csv) {
        write_report_csv(std::cout, report);
      } else {
        write_report_text(std::cout, report);
      }
    } else if (*sim_cmd) {
      const ModelSpec spec = build_model(model_name, params, horizon, n);
      const TrajectorySet set = simulate_set(spec, n, seed);
      Output out(out_path);
      write_trajectories(out.stream(), set);
      if (!ids_out.empty()) {
        std::ofstream ids(ids_out);
        if (!ids) throw DataError("cannot write " + ids_out);
        for (std::size_t i = 0; i < set.size(); ++i) ids << i << '\n';
      }
    } else if (*level_cmd) {
      Output out(out_path);
      write_mc_csv_header(out.stream(), "beta", "freq");
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (double a : alphas) {
        for (double beta : betas) {
          for (std::size_t size : ns) {
            McConfig cfg{ModelSpec{Weibull{beta}, horizon}, size, n_mc, a, seed,
                         workers};
            const McResult r = level_study(cfg);
            write_mc_csv_row(out.stream(), beta, r);
            doc.push_back(to_json(r));
          }
        }
      }
      write_json(json_path, doc);
    } else if (*power_cmd) {
      const std::vector<double> grid = parse_grid(theta_grid);
      const std::size_t trials =
          power_nmc.value_or(model_name == "cox1" ? 10000 : 1000);
      Output out(out_path);
      write_mc_csv_header(out.stream(), "theta", "power");
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (std::size_t size : ns) {
        McConfig cfg{build_model(model_name, "theta=0", horizon, size), size,
                     trials, alpha, seed, workers};
        const auto curve = power_curve(cfg, grid);
        for (std::size_t k = 0; k < grid.size(); ++k) {
          write_mc_csv_row(out.stream(), grid[k], curve[k]);
          auto row = to_json(curve[k]);
          row["theta"] = std::stod(format_number(grid[k]));
          doc.push_back(row);
        }
      }
      write_json(json_path, doc);
    } else if (*analytic_cmd) {
      const std::vector<double> grid = parse_grid(x_grid);
      std::vector<std::vector<McEstimate>> mc;
      if (mc_check) {
        const double a[] = {alpha};
        mc = drifted_sup_mc_grid(grid, a, lambda0, paths, steps, seed, workers);
      }
      Output out(out_path);
      out.stream() << "x,g1,g2" << (mc_check ? ",mc_g1,mc_se" : "") << '\n';
      for (std::size_t k = 0; k < grid.size(); ++k) {
        out.stream() << format_number(grid[k]) << ','
                     << format_number(analytic_power_g1(grid[k], lambda0, alpha))
                     << ','
                     << format_number(analytic_power_g2(grid[k], lambda0, alpha));
        if (mc_check) {
          out.stream() << ',' << format_number(mc[k][0].p) << ','
                       << format_number(mc[k][0].se);
        }
        out.stream() << '\n';
      }
    } else if (*law_cmd) {
      McConfig cfg{ModelSpec{HomPoisson{rate}, horizon}, n, n_mc, 0.05, seed,
                   workers};
      const KsReport r = limit_law_check(cfg, threshold);
      nlohmann::ordered_json doc{{"config", to_json(cfg)},
                                 {"trials", r.t1.size()},
                                 {"degenerate_trials", r.degenerate_trials},
                                 {"ks_t1", std::stod(format_number(r.ks_t1))},
                                 {"ks_t2", std::stod(format_number(r.ks_t2))},
                                 {"threshold", threshold}};
      if (r.pass_t1) {
        doc["pass_t1"] = *r.pass_t1;
        doc["pass_t2"] = *r.pass_t2;
      } else {
        doc["note"] = "pre-asymptotic sample size: distances are informational";
      }
      std::cout << doc.dump(2) << '\n';
      write_json(json_path, doc);
    }
  } catch (const DegenerateSampleError& e) {
    std::cerr << "error[degenerate]: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const ParameterError& e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error[data]: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error[data]: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
