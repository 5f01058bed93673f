#ifndef CLAW_HARNESS_HPP
#define CLAW_HARNESS_HPP

// Experiment orchestration: config parsing, the solver matrix, pairwise
// L1 agreement reports and convergence-order estimation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "claw/flux.hpp"
#include "claw/grid.hpp"

namespace claw {

// One solver column of the experiment matrix. `params` carries the
// per-method knobs (epsilon, epsilon_over_h, n_v, cfl, e.g.).
struct MethodSpec {
  std::string name;  // viscous | laxoleinik | hopf_lax | characteristics |
                     // kinetic | godunov | upwind | ph
  std::map<std::string, double> params;
};

struct InitialSpec {
  std::string kind = "riemann";  // riemann | fixture
  double u_minus = -1.0;
  double u_plus = 1.0;
  std::string fixture;  // burgers_fan | burgers_shock | exp_pair_riemann |
                        // ph_smooth_monotone
};

struct ExperimentConfig {
  FluxSpec flux;
  InitialSpec initial;
  double x_min = -2.0, x_max = 2.0;
  std::vector<int> ladder = {200, 400, 800};  // strictly refining n_cells
  std::vector<double> record_times = {0.5, 1.0};
  std::vector<MethodSpec> methods;
  double pairwise_l1_tolerance = 0.05;
  double oracle_l1_tolerance = 0.0;  // 0 = not asserted
  std::string out_dir = ".";

  void validate() const;  // throws ConfigError
};

// Flat INI-style parse: [section] headers, key = value lines, '#' comments.
// Method sections are written as [method <name>].
ExperimentConfig parse_experiment_config(const std::string& path);

struct MethodRun {
  std::string method;
  int n_cells = 0;
  std::vector<GridFunction> snapshots;  // one per record time
  std::string error;                    // nonempty if the method failed
};

struct ComparisonReport {
  std::vector<std::string> methods;                  // successful columns
  std::vector<double> times;
  // matrix[t][i][j]: pairwise L1 on the finest rung at times[t]
  std::vector<std::vector<std::vector<double>>> matrix;
  std::vector<double> max_pairwise;                  // per rung, last time
  std::map<std::string, double> oracle_distance;     // finest rung, last time
  std::vector<std::string> failed_methods;
  bool pass = true;
  std::vector<std::string> notes;
};

ComparisonReport run_experiment(const ExperimentConfig& cfg,
                                std::vector<MethodRun>* runs_out = nullptr);

// Least-squares slope of log err against log h; >= 3 pairs, err > 0.
double estimate_order(const std::vector<std::pair<double, double>>& pairs);

// Serialization helpers shared by the CLI.
std::string report_to_json(const ComparisonReport& rep);
void write_snapshot_csv(const std::string& path, const GridFunction& f);
GridFunction read_snapshot_csv(const std::string& path);

}  // namespace claw

#endif  // CLAW_HARNESS_HPP
