// Command-line laboratory: exact discontinuity analysis, the solver
// matrix, entropy certification, cross-method comparison, and convergence
// order estimation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "claw/fixtures.hpp"
#include "claw/harness.hpp"
#include "claw/riemann.hpp"
#include "claw/schemes.hpp"
#include "claw/verify.hpp"

namespace {

using nlohmann::json;

std::string format_h(double h) {
  std::ostringstream s;
  s << h;
  return s.str();
}

void emit(const json& j, const std::string& out_dir, const std::string& name,
          const std::string& format) {
  std::filesystem::create_directories(out_dir);
  const std::string path = out_dir + "/" + name + "." + format;
  std::ofstream out(path);
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else {
    // flat csv: key,value rows for scalar fields
    out << "key,value\n";
    for (const auto& [k, v] : j.items())
      if (!v.is_structured()) out << k << "," << v.dump() << "\n";
  }
  std::cout << "wrote " << path << "\n";
}

claw::FluxSpec flux_spec_from_flags(const std::string& family, double lo,
                                    double hi, double p, double phi0,
                                    double phi1, double mu) {
  claw::FluxSpec spec;
  spec.family = family;
  spec.domain = {lo, hi};
  spec.p = p;
  spec.phi0 = phi0;
  spec.phi1 = phi1;
  spec.mu = mu;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for scalar conservation laws"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  std::string format = "json";
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // shared flux flags
  std::string family = "burgers";
  double dom_lo = -1.5, dom_hi = 1.5, p_exp = 2.0;
  double phi0 = 1.0, phi1 = 1.0, mu = 0.0;
  auto add_flux_flags = [&](CLI::App* cmd) {
    cmd->add_option("--flux", family, "burgers|power|gelfand_q|exp_pair|ph");
    cmd->add_option("--domain-lo", dom_lo, "state interval lower end");
    cmd->add_option("--domain-hi", dom_hi, "state interval upper end");
    cmd->add_option("--p", p_exp, "power family exponent");
    cmd->add_option("--phi0", phi0, "ph family efficiency intercept");
    cmd->add_option("--phi1", phi1, "ph family efficiency slope");
    cmd->add_option("--mu", mu, "ph family attrition");
  };

  // riemann
  auto* cmd_riemann = app.add_subcommand(
      "riemann", "classify a single discontinuity (speed, admissibility)");
  double um = 1.0, up = -1.0;
  add_flux_flags(cmd_riemann);
  cmd_riemann->add_option("--um", um, "left state")->required();
  cmd_riemann->add_option("--up", up, "right state")->required();

  // solve
  auto* cmd_solve = app.add_subcommand(
      "solve", "run one solver on a config and write snapshot csv files");
  std::string config_path, method_name;
  cmd_solve->add_option("--config", config_path, "experiment config")
      ->required();
  cmd_solve->add_option("--method", method_name,
                        "restrict to one method from the config");

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "entropy-certify a snapshot series");
  std::vector<std::string> snapshot_paths;
  int quad_n = 64;
  add_flux_flags(cmd_verify);
  cmd_verify
      ->add_option("--input", snapshot_paths,
                   "two or more snapshot csv files (one per time)")
      ->required()
      ->expected(-2);
  cmd_verify->add_option("--quad", quad_n, "quadrature points per axis");

  // compare
  auto* cmd_compare = app.add_subcommand(
      "compare", "run the full method matrix and report pairwise L1");
  std::string compare_config;
  cmd_compare->add_option("--config", compare_config, "experiment config")
      ->required();

  // order
  auto* cmd_order = app.add_subcommand(
      "order", "empirical convergence order from a run manifest");
  std::string manifest_path, reference_path;
  std::vector<double> shock_xs;
  cmd_order
      ->add_option("--manifest", manifest_path,
                   "text file with lines: <h> <snapshot csv>")
      ->required();
  cmd_order
      ->add_option("--reference", reference_path,
                   "reference snapshot csv (finest / exact)")
      ->required();
  cmd_order->add_option("--shock", shock_xs,
                        "abscissas excluded from the sup norm (radius 3h)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_riemann->parsed()) {
      const claw::FluxPair fp = claw::make_flux_pair(
          flux_spec_from_flags(family, dom_lo, dom_hi, p_exp, phi0, phi1, mu));
      const claw::RiemannProblem rp(fp, um, up);
      const claw::DiscontinuityReport rep = claw::analyze_discontinuity(rp);
      json j;
      j["flux"] = fp.name();
      j["u_minus"] = um;
      j["u_plus"] = up;
      j["speed"] = rep.speed;
      j["satisfies_rh"] = rep.satisfies_rh;
      j["satisfies_e"] = rep.satisfies_e;
      j["satisfies_lax"] = rep.satisfies_lax;
      if (rep.violating_state) j["violating_state"] = *rep.violating_state;
      j["admissible_interval"] = {rep.admissible_interval.lo,
                                  rep.admissible_interval.hi};
      j["pass"] = rep.satisfies_e;
      std::cout << j.dump(2) << "\n";
      emit(j, out_dir, "riemann", format);
      return rep.satisfies_e ? 0 : 1;
    }

    if (cmd_solve->parsed() || cmd_compare->parsed()) {
      const std::string path =
          cmd_solve->parsed() ? config_path : compare_config;
      claw::ExperimentConfig cfg = claw::parse_experiment_config(path);
      if (cmd_solve->parsed() && !method_name.empty()) {
        std::vector<claw::MethodSpec> keep;
        for (const auto& m : cfg.methods)
          if (m.name == method_name) keep.push_back(m);
        if (keep.empty())
          throw claw::ConfigError("method not in config: " + method_name);
        cfg.methods = keep;
      }
      std::vector<claw::MethodRun> runs;
      const claw::ComparisonReport rep = claw::run_experiment(cfg, &runs);
      // --out overrides the config's [output] dir; fall back to the config
      // when --out was left at its default.
      if (out_dir == "." && cfg.out_dir != ".") out_dir = cfg.out_dir;
      std::filesystem::create_directories(out_dir);
      for (const auto& run : runs) {
        if (!run.error.empty()) continue;
        const double h =
            (cfg.x_max - cfg.x_min) / run.n_cells;
        for (const auto& snap : run.snapshots) {
          std::ostringstream name;
          name << "snapshot_" << run.method << "_" << format_h(h) << "_"
               << snap.time << ".csv";
          claw::write_snapshot_csv(out_dir + "/" + name.str(), snap);
        }
      }
      std::ofstream rj(out_dir + "/report.json");
      rj << claw::report_to_json(rep) << "\n";
      std::cout << claw::report_to_json(rep) << "\n";
      return rep.pass ? 0 : 1;
    }

    if (cmd_verify->parsed()) {
      const claw::FluxPair fp = claw::make_flux_pair(
          flux_spec_from_flags(family, dom_lo, dom_hi, p_exp, phi0, phi1, mu));
      std::vector<claw::GridFunction> stack;
      for (const auto& sp : snapshot_paths)
        stack.push_back(claw::read_snapshot_csv(sp));
      const claw::CandidateSolution cand =
          claw::CandidateSolution::from_snapshots(std::move(stack));
      const claw::Certificate cert =
          claw::entropy_certificate(fp, cand, quad_n);
      json j;
      j["weak"] = cert.worst_weak;
      j["kruzhkov"] = {{"k", cert.worst.k},
                       {"t0", cert.worst.tf.t0},
                       {"x0", cert.worst.tf.x0},
                       {"residual", cert.worst.residual},
                       {"budget", cert.worst.budget}};
      j["failures"] = cert.failures.size();
      j["pass"] = cert.pass;
      std::cout << j.dump(2) << "\n";
      emit(j, out_dir, "verify", format);
      return cert.pass ? 0 : 1;
    }

    if (cmd_order->parsed()) {
      std::ifstream mf(manifest_path);
      if (!mf) throw claw::ConfigError("cannot open " + manifest_path);
      std::vector<std::pair<double, claw::GridFunction>> runs;
      double h;
      std::string csv;
      while (mf >> h >> csv) runs.emplace_back(h, claw::read_snapshot_csv(csv));
      const claw::GridFunction ref = claw::read_snapshot_csv(reference_path);
      const claw::ConvergenceReport rep = claw::convergence_report(
          [&ref](double x) { return ref(x); }, runs, shock_xs);
      std::filesystem::create_directories(out_dir);
      {
        std::ofstream csv_out(out_dir + "/order.csv");
        csv_out << "h,sup_err,l1_err\n";
        for (const auto& row : rep.rows)
          csv_out << row.h << "," << row.sup_err << "," << row.l1_err << "\n";
      }
      json j;
      j["order_sup"] = rep.order_sup;
      j["order_l1"] = rep.order_l1;
      std::cout << j.dump(2) << "\n";
      emit(j, out_dir, "order", format);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
