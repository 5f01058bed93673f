#include "claw/viscous.hpp"

#include <algorithm>
#include <cmath>

namespace claw {

namespace {

struct Workspace {
  std::vector<double> u, eta_u, phi_u, w, flux;  // flux[i] = F_{i+1/2}
};

// One forward-Euler step of the semi-discrete system
//   d eta(u)/dt = eps * D2(w) / dx^2 - D1(phi) / dx.
void step(const FluxPair& fp, const ViscousConfig& cfg, double dx, double dt,
          Workspace& ws) {
  const int n = static_cast<int>(ws.u.size());
  auto& u = ws.u;
  for (int i = 0; i < n; ++i) {
    ws.eta_u[i] = fp.eta(u[i]);
    ws.phi_u[i] = fp.phi(u[i]);
    ws.w[i] = (cfg.viscosity_form == ViscosityForm::plain) ? u[i] : ws.eta_u[i];
  }
  if (cfg.advection == AdvectionScheme::local_lax_friedrichs) {
    for (int i = 0; i + 1 < n; ++i) {
      const double al = std::abs(fp.characteristic_speed(u[i]));
      const double ar = std::abs(fp.characteristic_speed(u[i + 1]));
      const double alpha = std::max(al, ar);
      ws.flux[i] = 0.5 * (ws.phi_u[i] + ws.phi_u[i + 1]) -
                   0.5 * alpha * (ws.eta_u[i + 1] - ws.eta_u[i]);
    }
  }
  // Interior update; boundary nodes stay at the constant extension of u0.
  std::vector<double>& out = ws.eta_u;  // reuse: new eta values
  for (int i = 1; i + 1 < n; ++i) {
    const double diff =
        cfg.epsilon * (ws.w[i + 1] - 2.0 * ws.w[i] + ws.w[i - 1]) / (dx * dx);
    double adv;
    if (cfg.advection == AdvectionScheme::local_lax_friedrichs) {
      adv = (ws.flux[i] - ws.flux[i - 1]) / dx;
    } else {
      adv = (ws.phi_u[i + 1] - ws.phi_u[i - 1]) / (2.0 * dx);
    }
    out[i] = fp.eta(u[i]) + dt * (diff - adv);
  }
  const Interval r = fp.eta_range();
  const Interval d = fp.domain();
  for (int i = 1; i + 1 < n; ++i) {
    const double v = out[i];
    if (!std::isfinite(v)) throw NonFinite();
    if (v < r.lo - 1e-8 * (1.0 + std::abs(r.lo)) ||
        v > r.hi + 1e-8 * (1.0 + std::abs(r.hi)))
      throw DomainEscape();
    u[i] = fp.eta_inverse(std::clamp(v, r.lo, r.hi));
    if (!d.contains(u[i], 1e-8)) throw DomainEscape();
  }
}

double stable_dt(const FluxPair& fp, const ViscousConfig& cfg, double dx) {
  const Interval sr = fp.speed_range();
  const double a_max = std::max(std::abs(sr.lo), std::abs(sr.hi));
  // eta'_min bounds the diffusion coefficient eps / eta'(u) of the plain
  // form; the divergent form diffuses eta directly, where the same bound
  // is conservative.
  double etap_min = HUGE_VAL;
  const Interval d = fp.domain();
  for (int i = 0; i <= 1000; ++i) {
    const double u = d.lo + (d.hi - d.lo) * i / 1000.0;
    etap_min = std::min(etap_min, fp.eta_prime(u));
  }
  const double dt_hyp = (a_max > 0.0) ? dx / a_max : HUGE_VAL;
  const double dt_par = dx * dx * etap_min / (2.0 * cfg.epsilon);
  return cfg.cfl_safety * std::min(dt_hyp, dt_par);
}

}  // namespace

std::vector<GridFunction> solve_viscous_trajectory(
    const FluxPair& fp, const GridFunction& u0, const ViscousConfig& cfg,
    const std::vector<double>& record_times) {
  if (!(cfg.epsilon > 0.0)) throw ConfigError("solve_viscous: epsilon <= 0");
  if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0))
    throw ConfigError("solve_viscous: cfl_safety outside (0, 1]");
  for (double v : u0.values)
    if (!fp.domain().contains(v, 1e-12)) throw OutOfDomain();

  const double dx = u0.grid.dx();
  const double dt0 = stable_dt(fp, cfg, dx);

  Workspace ws;
  ws.u = u0.values;
  ws.eta_u.resize(ws.u.size());
  ws.phi_u.resize(ws.u.size());
  ws.w.resize(ws.u.size());
  ws.flux.resize(ws.u.size());

  std::vector<double> marks = record_times;
  std::sort(marks.begin(), marks.end());
  marks.erase(std::remove_if(marks.begin(), marks.end(),
                             [&](double t) {
                               return t <= 0.0 || t >= cfg.t_final;
                             }),
              marks.end());
  marks.push_back(cfg.t_final);

  std::vector<GridFunction> out;
  out.emplace_back(u0.grid, ws.u, 0.0);
  double t = 0.0;
  for (double mark : marks) {
    while (t < mark - 1e-14) {
      const double dt = std::min(dt0, mark - t);
      step(fp, cfg, dx, dt, ws);
      t += dt;
    }
    out.emplace_back(u0.grid, ws.u, mark);
  }
  return out;
}

GridFunction solve_viscous(const FluxPair& fp, const GridFunction& u0,
                           const ViscousConfig& cfg) {
  if (cfg.t_final == 0.0) return u0;
  return solve_viscous_trajectory(fp, u0, cfg, {}).back();
}

bool check_max_principle(const std::vector<GridFunction>& trajectory,
                         Interval bounds) {
  constexpr double tol = 1e-10;
  for (const auto& snap : trajectory)
    for (double v : snap.values)
      if (v < bounds.lo - tol || v > bounds.hi + tol) return false;
  return true;
}

bool check_one_sided_lipschitz(const std::vector<GridFunction>& trajectory,
                               double t0, double E) {
  constexpr double tol = 1e-6;
  for (const auto& snap : trajectory) {
    if (snap.time < t0) continue;
    const double dx = snap.grid.dx();
    for (std::size_t i = 0; i + 1 < snap.values.size(); ++i) {
      const double slope = (snap.values[i + 1] - snap.values[i]) / dx;
      if (slope > E / snap.time + tol) return false;
    }
  }
  return true;
}

}  // namespace claw
