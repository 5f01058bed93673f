#include "claw/schemes.hpp"

#include <algorithm>
#include <cmath>

namespace claw {

GridFunction LevelState::as_grid_function(const PHConfig& cfg) const {
  Grid1D g(cfg.n_min * cfg.h, cfg.n_max * cfg.h, cfg.n_max - cfg.n_min);
  return GridFunction(g, values, time);
}

std::vector<double> ph_rhs(const PHConfig& cfg, const LevelState& state) {
  const int n = static_cast<int>(state.values.size());
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    const double u = state.values[i];
    const double ul = (i == 0) ? 0.0 : state.values[i - 1];
    const double ur = (i == n - 1) ? 1.0 : state.values[i + 1];
    d[i] = (-cfg.efficiency(u) * (u - ul) + cfg.mu * (ur - u)) / cfg.h;
  }
  return d;
}

LevelState ph_solve(const PHConfig& cfg, const LevelState& initial) {
  if (!cfg.efficiency) throw ConfigError("ph_solve: missing efficiency");
  if (cfg.h <= 0.0 || cfg.t_final < 0.0 || cfg.mu < 0.0)
    throw ConfigError("ph_solve: bad parameters");
  double phi_max = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double p = cfg.efficiency(i / 100.0);
    if (!(p > 0.0)) throw ConfigError("ph_solve: efficiency must be positive");
    phi_max = std::max(phi_max, p);
  }
  const double dt_max = cfg.h / (4.0 * (phi_max + cfg.mu));

  LevelState s = initial;
  const int n = static_cast<int>(s.values.size());
  auto check = [&]() {
    for (double u : s.values)
      if (u < -1e-8 || u > 1.0 + 1e-8 || !std::isfinite(u))
        throw RangeEscape();
  };
  check();
  double t = s.time;
  std::vector<double> tmp(n);
  while (t < cfg.t_final - 1e-14) {
    const double dt = std::min(dt_max, cfg.t_final - t);
    const std::vector<double> k1 = ph_rhs(cfg, s);
    LevelState stage = s;
    for (int i = 0; i < n; ++i) stage.values[i] = s.values[i] + 0.5 * dt * k1[i];
    const std::vector<double> k2 = ph_rhs(cfg, stage);
    for (int i = 0; i < n; ++i) stage.values[i] = s.values[i] + 0.5 * dt * k2[i];
    const std::vector<double> k3 = ph_rhs(cfg, stage);
    for (int i = 0; i < n; ++i) stage.values[i] = s.values[i] + dt * k3[i];
    const std::vector<double> k4 = ph_rhs(cfg, stage);
    for (int i = 0; i < n; ++i)
      s.values[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    t += dt;
    s.time = t;
    check();
  }
  return s;
}

namespace {

struct StepSetup {
  double dx;
  double tau;
  int n;
  Interval eta_rng;
};

StepSetup setup_step(const FluxPair& fp, const GridFunction& u0,
                     const SchemeConfig& cfg) {
  const Interval dom = fp.domain();
  for (double v : u0.values)
    if (!dom.contains(v, 1e-12)) throw OutOfDomain();
  double a_max = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double u = dom.lo + (dom.hi - dom.lo) * i / 400.0;
    a_max = std::max(a_max, std::abs(fp.characteristic_speed(u)));
  }
  if (a_max == 0.0) a_max = 1e-12;
  StepSetup st;
  st.dx = u0.grid.dx();
  st.n = u0.grid.n_nodes();
  st.tau = cfg.tau > 0.0 ? cfg.tau : cfg.cfl_safety * st.dx / a_max;
  if (st.tau * a_max > st.dx * (1.0 + 1e-12)) throw CflViolated();
  st.eta_rng = fp.eta_range();
  return st;
}

double invert_eta_clamped(const FluxPair& fp, double v, const Interval& rng) {
  return fp.eta_inverse(std::clamp(v, rng.lo, rng.hi));
}

}  // namespace

GridFunction upwind_solve(const FluxPair& fp, const GridFunction& u0,
                          const SchemeConfig& cfg, double t_final) {
  // one-sided stencil is only valid with nonnegative wind over the data
  // range
  const double lo = u0.min_value(), hi = u0.max_value();
  for (int i = 0; i <= 200; ++i) {
    const double u = lo + (hi - lo) * i / 200.0;
    if (fp.characteristic_speed(u) < -1e-12) throw WrongWindDirection();
  }
  const StepSetup st = setup_step(fp, u0, cfg);

  std::vector<double> u = u0.values;
  std::vector<double> eta_new(st.n), phi_cur(st.n);
  double t = u0.time;
  while (t < t_final - 1e-14) {
    const double dt = std::min(st.tau, t_final - t);
    const double lam = dt / st.dx;
    for (int i = 0; i < st.n; ++i) phi_cur[i] = fp.phi(u[i]);
    for (int i = 0; i < st.n; ++i) {
      const double phi_left = (i == 0) ? phi_cur[0] : phi_cur[i - 1];
      eta_new[i] = fp.eta(u[i]) - lam * (phi_cur[i] - phi_left);
    }
    for (int i = 0; i < st.n; ++i)
      u[i] = invert_eta_clamped(fp, eta_new[i], st.eta_rng);
    t += dt;
  }
  return GridFunction(u0.grid, std::move(u), t_final);
}

GridFunction godunov_solve(const FluxPair& fp, const GridFunction& u0,
                           const SchemeConfig& cfg, double t_final) {
  if (convexity_class(fp).tag == ConvexityTag::neither) throw NotConvex();
  const StepSetup st = setup_step(fp, u0, cfg);

  // Godunov interface flux in v = eta(u): for v_t + H(v)_x = 0 the flux is
  // min over [v_l, v_r] of H (v_l <= v_r), max over [v_r, v_l] otherwise.
  // For strictly convex H the extremum is at an endpoint or the sonic
  // point where H' = 0.
  const Interval dom = fp.domain();
  double v_sonic = HUGE_VAL;  // eta(u) with a(u) = 0, if inside the domain
  if (fp.characteristic_speed(dom.lo) * fp.characteristic_speed(dom.hi) <
      0.0) {
    const double u_sonic = invert_monotone(
        [&fp](double u) { return fp.characteristic_speed(u); }, 0.0, dom.lo,
        dom.hi);
    v_sonic = fp.eta(u_sonic);
  }
  // Endpoint Hamiltonian values H(eta(u)) = phi(u) are taken directly from
  // the state so the flux arithmetic coincides with the upwind scheme's
  // when the wind never changes sign.
  auto godunov_flux = [&](double vl, double hl, double vr, double hr) {
    const bool inside = v_sonic > std::min(vl, vr) && v_sonic < std::max(vl, vr);
    // Any interior extremum of H on [min(vl,vr), max(vl,vr)] sits at the
    // unique critical point, so the candidate set is {H(vl), H(vr), H(vs)}.
    if (vl <= vr) {
      double f = std::min(hl, hr);
      if (inside) f = std::min(f, fp.hamiltonian(v_sonic));
      return f;
    }
    double f = std::max(hl, hr);
    if (inside) f = std::max(f, fp.hamiltonian(v_sonic));
    return f;
  };

  std::vector<double> u = u0.values;
  std::vector<double> v(st.n), hv(st.n), flux(st.n + 1);
  double t = u0.time;
  while (t < t_final - 1e-14) {
    const double dt = std::min(st.tau, t_final - t);
    const double lam = dt / st.dx;
    for (int i = 0; i < st.n; ++i) {
      v[i] = fp.eta(u[i]);
      hv[i] = fp.phi(u[i]);
    }
    for (int i = 0; i <= st.n; ++i) {
      const int il = (i == 0) ? 0 : i - 1;
      const int ir = (i == st.n) ? st.n - 1 : i;
      flux[i] = godunov_flux(v[il], hv[il], v[ir], hv[ir]);
    }
    for (int i = 0; i < st.n; ++i)
      u[i] = invert_eta_clamped(fp, v[i] - lam * (flux[i + 1] - flux[i]),
                                st.eta_rng);
    t += dt;
  }
  return GridFunction(u0.grid, std::move(u), t_final);
}

ConvergenceReport convergence_report(
    const std::function<double(double)>& reference,
    const std::vector<std::pair<double, GridFunction>>& runs,
    const std::vector<double>& shock_locations, double exclusion_radius_in_h) {
  if (runs.size() < 3) throw InsufficientRuns();
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (!(runs[i].first < runs[i - 1].first)) throw InsufficientRuns();

  ConvergenceReport rep;
  std::vector<std::pair<double, double>> sup_pairs, l1_pairs;
  for (const auto& [h, f] : runs) {
    ConvergenceRow row;
    row.h = h;
    const double excl = exclusion_radius_in_h * h;
    for (int i = 0; i < f.grid.n_nodes(); ++i) {
      const double x = f.grid.node(i);
      const double e = std::abs(f.values[i] - reference(x));
      row.l1_err += e * f.grid.dx() *
                    ((i == 0 || i == f.grid.n_nodes() - 1) ? 0.5 : 1.0);
      bool excluded = false;
      for (double xs : shock_locations)
        if (std::abs(x - xs) <= excl) excluded = true;
      if (!excluded) row.sup_err = std::max(row.sup_err, e);
    }
    rep.rows.push_back(row);
    sup_pairs.emplace_back(h, std::max(row.sup_err, 1e-300));
    l1_pairs.emplace_back(h, std::max(row.l1_err, 1e-300));
  }
  rep.order_sup = log_log_slope(sup_pairs);
  rep.order_l1 = log_log_slope(l1_pairs);
  return rep;
}

}  // namespace claw
