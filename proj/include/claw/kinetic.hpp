#ifndef CLAW_KINETIC_HPP
#define CLAW_KINETIC_HPP

// BGK-type kinetic approximation: a density f(t, x, v) transported at the
// v-dependent characteristic speed and relaxed toward the equilibrium
// indicator chi_u, with u recovered as the v-moment of f.

#include <vector>

#include "claw/flux.hpp"
#include "claw/grid.hpp"

namespace claw {

// Uniform velocity grid covering [a, b] with one pad cell on each side and
// cell edges aligned with v = 0 and with both endpoints, so the moment of
// chi_u is exact for u in {a, 0, b}.
struct VelocityGrid {
  double v_min = 0.0;
  double v_max = 0.0;
  int n_cells = 0;

  double dv() const { return (v_max - v_min) / n_cells; }
  // cell midpoints carry the density
  double center(int j) const { return v_min + dv() * (j + 0.5); }
};

// Velocity cover of the state interval [a, b]; n_cells = n_v total cells,
// of which n_v - 2 tile [a, b] exactly. Requires 0 to be an interior grid
// edge, which holds whenever a <= 0 <= b and a, b are edge-aligned; the
// constructor nudges nothing and throws GridMismatch when 0 would fall
// strictly inside a cell.
VelocityGrid make_velocity_cover(Interval states, int n_v);

// chi_u(v): sign(u) where v lies between 0 and u, else 0.
double chi_indicator(double u, double v);

// Exact average of chi_u over the velocity cell [v_lo, v_hi]; makes the
// cell-sum moment of chi_u equal to u for every u inside the cover.
double chi_cell_average(double u, double v_lo, double v_hi);

// f stored as n_v slices of n_x nodal values: slice(j)[i] = f(x_i, v_j).
struct KineticDensity {
  Grid1D x_grid;
  VelocityGrid v_grid;
  std::vector<double> data;  // v-major: data[j * n_x + i]
  double time = 0.0;

  KineticDensity(Grid1D xg, VelocityGrid vg);

  double* slice(int j) { return data.data() + j * x_grid.n_nodes(); }
  const double* slice(int j) const {
    return data.data() + j * x_grid.n_nodes();
  }

  // u(x_i) = integral of f over v (midpoint rule in v).
  GridFunction moment() const;

  // f = cell averages of chi_{u0}.
  static KineticDensity equilibrium(const GridFunction& u0, VelocityGrid vg);
};

struct KineticConfig {
  double epsilon = 1e-3;  // relaxation time
  int n_v = 64;           // velocity cells including the two pad cells
  double t_final = 0.5;
  double cfl_safety = 0.9;
};

struct KineticResult {
  GridFunction u;                      // final moment
  std::vector<GridFunction> snapshots; // moments at requested times + final
  int steps = 0;
};

// Transport-relaxation splitting: each step moves every v-slice upwind by
// its speed phi'(v)/eta'(v), then relaxes f toward chi_u exactly over dt
// with u recomputed from the transported density.
KineticResult kinetic_solve(const FluxPair& fp, const GridFunction& u0,
                            const KineticConfig& cfg,
                            const std::vector<double>& record_times = {});

// Convenience form: equilibrium initialization, moment at t_final.
GridFunction kinetic_solve(const FluxPair& fp, const GridFunction& u0,
                           double eps, double t_final,
                           const VelocityGrid& vg);

}  // namespace claw

#endif  // CLAW_KINETIC_HPP
