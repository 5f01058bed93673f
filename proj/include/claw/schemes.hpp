#ifndef CLAW_SCHEMES_HPP
#define CLAW_SCHEMES_HPP

// Discrete approximations: the Polterovich-Henkin difference-differential
// level system, the one-sided upwind scheme, the Godunov finite-volume
// scheme, and convergence reporting across grid ladders.

#include <functional>
#include <vector>

#include "claw/flux.hpp"
#include "claw/grid.hpp"

namespace claw {

// The level system h du^n/dt = -Phi(u^n)(u^n - u^{n-1}) + mu (u^{n+1} - u^n)
// on levels n_min..n_max, with frozen exterior states u = 0 (left) and
// u = 1 (right).
struct PHConfig {
  ScalarFn efficiency;  // Phi > 0 on [0, 1]
  double mu = 0.0;
  double h = 0.02;      // level spacing
  int n_min = 0;
  int n_max = 0;
  double t_final = 1.0;
};

struct LevelState {
  std::vector<double> values;  // u^n, n = n_min .. n_max
  double time = 0.0;

  // View as a grid function on x = n h for comparisons with PDE solvers.
  GridFunction as_grid_function(const PHConfig& cfg) const;
};

// Right-hand side du^n/dt of the level system; boundary levels see the
// frozen exterior neighbors.
std::vector<double> ph_rhs(const PHConfig& cfg, const LevelState& state);

// Classic 4th-order explicit integration with dt <= h / (4 (max Phi + mu));
// throws RangeEscape when any level leaves [-1e-8, 1 + 1e-8] (the scheme
// must preserve [0, 1] without clamping).
LevelState ph_solve(const PHConfig& cfg, const LevelState& initial);

enum class SchemeKind { upwind, godunov };

struct SchemeConfig {
  double tau = 0.0;        // time step; 0 = derive from CFL safety
  double cfl_safety = 0.9;
  SchemeKind scheme = SchemeKind::upwind;
};

// One-sided scheme: eta(u^{m+1}_n) = eta(u^m_n) - (tau/h)(phi(u^m_n) -
// phi(u^m_{n-1})), inverted through eta. Requires phi'/eta' >= 0 on the
// data range and CFL <= 1.
GridFunction upwind_solve(const FluxPair& fp, const GridFunction& u0,
                          const SchemeConfig& cfg, double t_final);

// Finite-volume update of v = eta(u) with the Godunov flux: min (max) of
// H = phi(eta^{-1}) over the interface interval for v_l <= v_r (v_l > v_r).
// Requires strictly convex or concave characteristic speed monotonicity
// only through H; convexity of H is enforced.
GridFunction godunov_solve(const FluxPair& fp, const GridFunction& u0,
                           const SchemeConfig& cfg, double t_final);

struct ConvergenceRow {
  double h = 0.0;
  double sup_err = 0.0;  // sup norm excluding points within 3h of a shock
  double l1_err = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double order_sup = 0.0;
  double order_l1 = 0.0;
};

// Errors of each run against a reference evaluator x -> u(t_final, x).
// shock_locations: abscissas excluded from the sup norm with radius
// exclusion_radius_in_h * h. Requires >= 3 runs with decreasing h.
ConvergenceReport convergence_report(
    const std::function<double(double)>& reference,
    const std::vector<std::pair<double, GridFunction>>& runs,
    const std::vector<double>& shock_locations = {},
    double exclusion_radius_in_h = 3.0);

}  // namespace claw

#endif  // CLAW_SCHEMES_HPP
