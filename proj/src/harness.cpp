#include "claw/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "claw/fixtures.hpp"
#include "claw/kinetic.hpp"
#include "claw/riemann.hpp"
#include "claw/schemes.hpp"
#include "claw/variational.hpp"
#include "claw/viscous.hpp"

namespace claw {

void ExperimentConfig::validate() const {
  if (methods.empty()) throw ConfigError("config: no methods");
  if (ladder.empty()) throw ConfigError("config: empty ladder");
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1])
      throw ConfigError("config: ladder must be strictly refining");
  if (record_times.empty()) throw ConfigError("config: no record times");
  for (std::size_t i = 1; i < record_times.size(); ++i)
    if (record_times[i] <= record_times[i - 1])
      throw ConfigError("config: record times must increase");
  if (!(x_max > x_min)) throw ConfigError("config: bad window");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  ExperimentConfig cfg;
  cfg.methods.clear();
  cfg.ladder.clear();
  cfg.record_times.clear();

  std::string section;
  MethodSpec* method = nullptr;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("bad section: " + line);
      section = trim(line.substr(1, line.size() - 2));
      if (section.rfind("method", 0) == 0) {
        const auto parts = split_ws(section);
        if (parts.size() != 2) throw ConfigError("bad method section");
        cfg.methods.push_back({parts[1], {}});
        method = &cfg.methods.back();
      } else {
        method = nullptr;
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("bad line: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (method) {
      method->params[key] = std::stod(val);
    } else if (section == "flux") {
      if (key == "family") cfg.flux.family = val;
      else if (key == "domain") {
        const auto p = split_ws(val);
        if (p.size() != 2) throw ConfigError("flux.domain wants two numbers");
        cfg.flux.domain = {std::stod(p[0]), std::stod(p[1])};
      } else if (key == "p") cfg.flux.p = std::stod(val);
      else if (key == "phi0") cfg.flux.phi0 = std::stod(val);
      else if (key == "phi1") cfg.flux.phi1 = std::stod(val);
      else if (key == "mu") cfg.flux.mu = std::stod(val);
      else throw ConfigError("unknown flux key: " + key);
    } else if (section == "initial") {
      if (key == "kind") cfg.initial.kind = val;
      else if (key == "u_minus") cfg.initial.u_minus = std::stod(val);
      else if (key == "u_plus") cfg.initial.u_plus = std::stod(val);
      else if (key == "fixture") cfg.initial.fixture = val;
      else throw ConfigError("unknown initial key: " + key);
    } else if (section == "grid") {
      if (key == "x_min") cfg.x_min = std::stod(val);
      else if (key == "x_max") cfg.x_max = std::stod(val);
      else if (key == "ladder") {
        for (const auto& w : split_ws(val)) cfg.ladder.push_back(std::stoi(w));
      } else throw ConfigError("unknown grid key: " + key);
    } else if (section == "times") {
      if (key == "record")
        for (const auto& w : split_ws(val))
          cfg.record_times.push_back(std::stod(w));
      else throw ConfigError("unknown times key: " + key);
    } else if (section == "tolerance") {
      if (key == "pairwise_l1") cfg.pairwise_l1_tolerance = std::stod(val);
      else if (key == "oracle_l1") cfg.oracle_l1_tolerance = std::stod(val);
      else throw ConfigError("unknown tolerance key: " + key);
    } else if (section == "output") {
      if (key == "dir") cfg.out_dir = val;
      else throw ConfigError("unknown output key: " + key);
    } else {
      throw ConfigError("unknown section: " + section);
    }
  }
  cfg.validate();
  return cfg;
}

namespace {

GridFunction initial_data(const ExperimentConfig& cfg, int n_cells) {
  Grid1D g(cfg.x_min, cfg.x_max, n_cells);
  if (cfg.initial.kind == "riemann")
    return fixtures::riemann_data(cfg.initial.u_minus, cfg.initial.u_plus, g);
  if (cfg.initial.kind != "fixture")
    throw ConfigError("unknown initial kind: " + cfg.initial.kind);
  if (cfg.initial.fixture == "burgers_fan") return fixtures::burgers_fan(g);
  if (cfg.initial.fixture == "burgers_shock")
    return fixtures::burgers_shock(g);
  if (cfg.initial.fixture == "exp_pair_riemann")
    return fixtures::exp_pair_riemann(g);
  if (cfg.initial.fixture == "ph_smooth_monotone")
    return fixtures::ph_smooth_monotone(g);
  throw ConfigError("unknown fixture: " + cfg.initial.fixture);
}

double param(const MethodSpec& m, const std::string& key, double fallback) {
  const auto it = m.params.find(key);
  return it == m.params.end() ? fallback : it->second;
}

std::vector<GridFunction> run_method(const FluxPair& fp,
                                     const ExperimentConfig& cfg,
                                     const MethodSpec& m, int n_cells) {
  const GridFunction u0 = initial_data(cfg, n_cells);
  const double t_last = cfg.record_times.back();
  std::vector<GridFunction> out;

  if (m.name == "viscous") {
    ViscousConfig vc;
    const double eoh = param(m, "epsilon_over_h", 0.0);
    vc.epsilon = eoh > 0.0 ? eoh * u0.grid.dx() : param(m, "epsilon", 1e-2);
    vc.t_final = t_last;
    vc.cfl_safety = param(m, "cfl", 0.45);
    if (param(m, "divergent", 0.0) > 0.5)
      vc.viscosity_form = ViscosityForm::divergent;
    if (param(m, "central", 0.0) > 0.5)
      vc.advection = AdvectionScheme::central;
    auto traj = solve_viscous_trajectory(fp, u0, vc, cfg.record_times);
    for (double t : cfg.record_times) {
      const GridFunction* best = &traj.front();
      for (const auto& s : traj)
        if (std::abs(s.time - t) < std::abs(best->time - t)) best = &s;
      out.push_back(*best);
    }
    return out;
  }

  if (m.name == "kinetic") {
    KineticConfig kc;
    kc.epsilon = param(m, "epsilon", 1e-3);
    kc.n_v = static_cast<int>(param(m, "n_v", 64.0));
    kc.t_final = t_last;
    auto res = kinetic_solve(fp, u0, kc, std::vector<double>(
                                             cfg.record_times.begin(),
                                             cfg.record_times.end() - 1));
    out = res.snapshots;
    out.resize(cfg.record_times.size(), res.u);
    return out;
  }

  if (m.name == "godunov" || m.name == "upwind") {
    SchemeConfig sc;
    sc.cfl_safety = param(m, "cfl", 0.9);
    sc.scheme = m.name == "godunov" ? SchemeKind::godunov : SchemeKind::upwind;
    GridFunction u = u0;
    for (double t : cfg.record_times) {
      u = (m.name == "godunov") ? godunov_solve(fp, u, sc, t)
                                : upwind_solve(fp, u, sc, t);
      out.push_back(u);
    }
    return out;
  }

  if (m.name == "laxoleinik" || m.name == "hopf_lax" ||
      m.name == "characteristics") {
    VariationalSolver vs(fp, u0);
    for (double t : cfg.record_times) {
      std::vector<double> vals(u0.grid.n_nodes());
      for (int i = 0; i < u0.grid.n_nodes(); ++i) {
        const double x = u0.grid.node(i);
        if (m.name == "laxoleinik") {
          vals[i] = vs.lax_oleinik(t, x).first;
        } else if (m.name == "hopf_lax") {
          vals[i] = vs.u_from_potential(
              [&vs](double tt, double xx) {
                return vs.hopf_lax_potential(tt, xx);
              },
              t, x);
        } else {
          vals[i] = vs.u_from_potential(
              [&vs](double tt, double xx) {
                return vs.characteristics_potential(tt, xx);
              },
              t, x);
        }
      }
      out.emplace_back(u0.grid, std::move(vals), t);
    }
    return out;
  }

  throw ConfigError("unknown method: " + m.name);
}

}  // namespace

double estimate_order(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 3) throw DegenerateFit("estimate_order: need >= 3 pairs");
  return log_log_slope(pairs);
}

ComparisonReport run_experiment(const ExperimentConfig& cfg,
                                std::vector<MethodRun>* runs_out) {
  cfg.validate();
  const FluxPair fp = make_flux_pair(cfg.flux);
  ComparisonReport rep;
  rep.times = cfg.record_times;

  // exact self-similar oracle, when available
  std::optional<SelfSimilarSolution> oracle;
  if (cfg.initial.kind == "riemann" &&
      convexity_class(fp).tag == ConvexityTag::strictly_convex) {
    try {
      oracle = solve_riemann_convex(
          RiemannProblem(fp, cfg.initial.u_minus, cfg.initial.u_plus));
    } catch (const Error&) {
    }
  }

  // per rung: run every method, keep per-method snapshot stacks
  std::vector<std::vector<std::vector<GridFunction>>> rung_results;
  std::vector<std::vector<std::string>> rung_ok;
  for (int n_cells : cfg.ladder) {
    std::vector<std::vector<GridFunction>> col;
    std::vector<std::string> ok;
    for (const MethodSpec& m : cfg.methods) {
      try {
        auto snaps = run_method(fp, cfg, m, n_cells);
        if (runs_out) runs_out->push_back({m.name, n_cells, snaps, ""});
        col.push_back(std::move(snaps));
        ok.push_back(m.name);
      } catch (const std::exception& e) {
        if (runs_out) runs_out->push_back({m.name, n_cells, {}, e.what()});
        if (std::find(rep.failed_methods.begin(), rep.failed_methods.end(),
                      m.name) == rep.failed_methods.end())
          rep.failed_methods.push_back(m.name);
        rep.pass = false;
        rep.notes.push_back(m.name + " failed: " + e.what());
      }
    }
    rung_results.push_back(std::move(col));
    rung_ok.push_back(std::move(ok));
  }

  // columns present on every rung
  rep.methods = rung_ok.front();
  for (const auto& ok : rung_ok) {
    std::vector<std::string> keep;
    for (const auto& name : rep.methods)
      if (std::find(ok.begin(), ok.end(), name) != ok.end())
        keep.push_back(name);
    rep.methods = keep;
  }
  if (rep.methods.empty()) {
    rep.pass = false;
    rep.notes.push_back("no method succeeded on every rung");
    return rep;
  }
  auto column = [&](std::size_t rung, const std::string& name)
      -> const std::vector<GridFunction>& {
    const auto& ok = rung_ok[rung];
    const auto it = std::find(ok.begin(), ok.end(), name);
    return rung_results[rung][it - ok.begin()];
  };

  // pairwise L1 per rung at the last time; full matrix on the finest rung
  const std::size_t n_m = rep.methods.size();
  const Grid1D fine(cfg.x_min, cfg.x_max, cfg.ladder.back());
  for (std::size_t r = 0; r < cfg.ladder.size(); ++r) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_m; ++i)
      for (std::size_t j = i + 1; j < n_m; ++j) {
        const GridFunction a =
            resample(column(r, rep.methods[i]).back(), fine);
        const GridFunction b =
            resample(column(r, rep.methods[j]).back(), fine);
        worst = std::max(worst, l1_distance(a, b));
      }
    rep.max_pairwise.push_back(worst);
  }
  for (std::size_t t = 0; t < cfg.record_times.size(); ++t) {
    std::vector<std::vector<double>> mat(n_m, std::vector<double>(n_m, 0.0));
    for (std::size_t i = 0; i < n_m; ++i)
      for (std::size_t j = i + 1; j < n_m; ++j) {
        const GridFunction a = resample(
            column(cfg.ladder.size() - 1, rep.methods[i])[t], fine);
        const GridFunction b = resample(
            column(cfg.ladder.size() - 1, rep.methods[j])[t], fine);
        mat[i][j] = mat[j][i] = l1_distance(a, b);
      }
    rep.matrix.push_back(std::move(mat));
  }

  if (oracle) {
    const double t = cfg.record_times.back();
    const GridFunction exact = GridFunction::sample(
        fine, [&](double x) { return oracle->evaluate(t, x); }, t);
    for (const auto& name : rep.methods) {
      const GridFunction a =
          resample(column(cfg.ladder.size() - 1, name).back(), fine);
      rep.oracle_distance[name] = l1_distance(a, exact);
    }
  }

  if (rep.max_pairwise.back() > cfg.pairwise_l1_tolerance) {
    rep.pass = false;
    rep.notes.push_back("pairwise L1 tolerance exceeded on the finest rung");
  }
  if (cfg.oracle_l1_tolerance > 0.0 && oracle) {
    for (const auto& [name, d] : rep.oracle_distance)
      if (d > cfg.oracle_l1_tolerance) {
        rep.pass = false;
        rep.notes.push_back(name + " exceeds the oracle tolerance");
      }
  }
  return rep;
}

std::string report_to_json(const ComparisonReport& rep) {
  nlohmann::json j;
  j["pass"] = rep.pass;
  j["methods"] = rep.methods;
  j["times"] = rep.times;
  j["max_pairwise_per_rung"] = rep.max_pairwise;
  j["pairwise_l1"] = rep.matrix;
  j["oracle_distance"] = rep.oracle_distance;
  j["failed_methods"] = rep.failed_methods;
  j["notes"] = rep.notes;
  return j.dump(2);
}

void write_snapshot_csv(const std::string& path, const GridFunction& f) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << "# t=" << f.time << "\n";
  out << "x,u\n";
  out.precision(17);
  for (int i = 0; i < f.grid.n_nodes(); ++i)
    out << f.grid.node(i) << "," << f.values[i] << "\n";
}

GridFunction read_snapshot_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::string line;
  double t = 0.0;
  std::vector<double> xs, us;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("# t=", 0) == 0) {
      t = std::stod(line.substr(4));
      continue;
    }
    if (line.front() == '#' || line.rfind("x,", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ConfigError("bad csv row: " + line);
    xs.push_back(std::stod(line.substr(0, comma)));
    us.push_back(std::stod(line.substr(comma + 1)));
  }
  if (xs.size() < 9) throw ConfigError("snapshot too small: " + path);
  Grid1D g(xs.front(), xs.back(), static_cast<int>(xs.size()) - 1);
  return GridFunction(g, std::move(us), t);
}

}  // namespace claw
