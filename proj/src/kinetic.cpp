#include "claw/kinetic.hpp"

#include <algorithm>
#include <cmath>

#include "claw/kernels.hpp"

namespace claw {

VelocityGrid make_velocity_cover(Interval states, int n_v) {
  if (n_v < 16) throw UnstableConfig("make_velocity_cover: n_v < 16");
  const double a = states.lo, b = states.hi;
  if (!(b > a)) throw ConfigError("make_velocity_cover: empty state interval");
  const double dv = (b - a) / (n_v - 2);
  // v = 0 must land on a cell edge of the [a, b] tiling (a <= 0 <= b is
  // the generic case; a pure one-signed interval is exempt).
  if (a < 0.0 && b > 0.0) {
    const double k = -a / dv;
    if (std::abs(k - std::round(k)) > 1e-9 * (n_v - 2)) throw GridMismatch();
  }
  return {a - dv, b + dv, n_v};
}

double chi_indicator(double u, double v) {
  if ((u - v) * v >= 0.0 && u != 0.0) return u > 0.0 ? 1.0 : -1.0;
  return 0.0;
}

double chi_cell_average(double u, double v_lo, double v_hi) {
  const double cu = std::clamp(u, v_lo, v_hi);
  const double c0 = std::clamp(0.0, v_lo, v_hi);
  return (cu - c0) / (v_hi - v_lo);
}

KineticDensity::KineticDensity(Grid1D xg, VelocityGrid vg)
    : x_grid(xg), v_grid(vg),
      data(static_cast<std::size_t>(vg.n_cells) * xg.n_nodes(), 0.0) {}

GridFunction KineticDensity::moment() const {
  const int n_x = x_grid.n_nodes();
  std::vector<double> u(n_x, 0.0);
  const double dv = v_grid.dv();
  const auto& k = kernels::active();
  std::vector<double> scaled(n_x);
  for (int j = 0; j < v_grid.n_cells; ++j) {
    const double* f = slice(j);
    for (int i = 0; i < n_x; ++i) scaled[i] = f[i] * dv;
    k.acc_add(u.data(), scaled.data(), n_x);
  }
  return GridFunction(x_grid, std::move(u), time);
}

KineticDensity KineticDensity::equilibrium(const GridFunction& u0,
                                           VelocityGrid vg) {
  KineticDensity f(u0.grid, vg);
  f.time = u0.time;
  const int n_x = u0.grid.n_nodes();
  const double dv = vg.dv();
  for (int j = 0; j < vg.n_cells; ++j) {
    const double v_lo = vg.v_min + j * dv;
    double* s = f.slice(j);
    for (int i = 0; i < n_x; ++i)
      s[i] = chi_cell_average(u0.values[i], v_lo, v_lo + dv);
  }
  return f;
}

KineticResult kinetic_solve(const FluxPair& fp, const GridFunction& u0,
                            const KineticConfig& cfg,
                            const std::vector<double>& record_times) {
  if (!(cfg.epsilon > 0.0) || !(cfg.t_final > 0.0) || cfg.cfl_safety <= 0.0 ||
      cfg.cfl_safety > 1.0)
    throw UnstableConfig("kinetic_solve: bad config");
  const Interval dom = fp.domain();
  for (double v : u0.values)
    if (!dom.contains(v, 1e-12)) throw OutOfDomain();

  const VelocityGrid vg = make_velocity_cover(dom, cfg.n_v);
  KineticDensity f = KineticDensity::equilibrium(u0, vg);
  const int n_x = u0.grid.n_nodes();
  const double dx = u0.grid.dx();

  // Per-slice transport speed a(v) and relaxation scale eps * eta'(v),
  // both evaluated at the cell midpoint clamped into the model domain
  // (the two pad cells sit just outside it and carry chi = 0).
  std::vector<double> speed(vg.n_cells), tau(vg.n_cells);
  double a_max = 0.0;
  for (int j = 0; j < vg.n_cells; ++j) {
    const double v = std::clamp(vg.center(j), dom.lo, dom.hi);
    speed[j] = fp.characteristic_speed(v);
    tau[j] = cfg.epsilon * fp.eta_prime(v);
    a_max = std::max(a_max, std::abs(speed[j]));
  }
  if (a_max == 0.0) a_max = 1e-12;
  const double dt_max = cfg.cfl_safety * dx / a_max;

  std::vector<double> marks(record_times);
  std::sort(marks.begin(), marks.end());
  std::size_t next_mark = 0;

  KineticResult out;
  std::vector<double> transported(n_x);
  const auto& k = kernels::active();
  double t = 0.0;
  while (t < cfg.t_final - 1e-14) {
    double dt = std::min(dt_max, cfg.t_final - t);
    if (next_mark < marks.size() && marks[next_mark] > t + 1e-14)
      dt = std::min(dt, marks[next_mark] - t);

    // transport: first-order upwind per slice
    for (int j = 0; j < vg.n_cells; ++j) {
      const double nu = speed[j] * dt / dx;
      if (std::abs(nu) > 1.0) throw CflViolated();
      k.upwind_step(transported.data(), f.slice(j), n_x, nu);
      std::copy(transported.begin(), transported.end(), f.slice(j));
    }

    // relaxation: exact exponential decay toward chi of the transported
    // moment
    f.time = t + dt;
    GridFunction u = f.moment();
    for (int j = 0; j < vg.n_cells; ++j) {
      const double decay = std::exp(-dt / tau[j]);
      const double v_lo = vg.v_min + j * vg.dv();
      k.relax_to_chi(f.slice(j), u.values.data(), n_x, v_lo, v_lo + vg.dv(),
                     decay);
    }

    t += dt;
    ++out.steps;
    if (next_mark < marks.size() && t >= marks[next_mark] - 1e-12) {
      out.snapshots.push_back(f.moment());
      ++next_mark;
    }
  }
  out.u = f.moment();
  for (double w : out.u.values)
    if (!std::isfinite(w)) throw NonFinite();
  out.snapshots.push_back(out.u);
  return out;
}

GridFunction kinetic_solve(const FluxPair& fp, const GridFunction& u0,
                           double eps, double t_final,
                           const VelocityGrid& vg) {
  KineticConfig cfg;
  cfg.epsilon = eps;
  cfg.t_final = t_final;
  cfg.n_v = vg.n_cells;
  return kinetic_solve(fp, u0, cfg).u;
}

}  // namespace claw
