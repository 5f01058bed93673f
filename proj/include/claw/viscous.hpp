#ifndef CLAW_VISCOUS_HPP
#define CLAW_VISCOUS_HPP

// Explicit finite-difference integration of the viscous regularization
// eta(u)_t + phi(u)_x = eps * w_xx, w = u (plain) or w = eta(u) (divergent),
// with constant-extension far-field boundaries.

#include <vector>

#include "claw/flux.hpp"
#include "claw/grid.hpp"

namespace claw {

enum class ViscosityForm { plain, divergent };
enum class AdvectionScheme { local_lax_friedrichs, central };

struct ViscousConfig {
  double epsilon = 1e-2;
  ViscosityForm viscosity_form = ViscosityForm::plain;
  double t_final = 1.0;
  double cfl_safety = 0.45;
  // local_lax_friedrichs is monotone and the default; central is second
  // order and only safe when the cell Peclet number stays <= 1 (used for
  // smooth reference runs).
  AdvectionScheme advection = AdvectionScheme::local_lax_friedrichs;
};

GridFunction solve_viscous(const FluxPair& fp, const GridFunction& u0,
                           const ViscousConfig& cfg);

// As solve_viscous, additionally recording snapshots at the requested times
// (plus the initial and final states).
std::vector<GridFunction> solve_viscous_trajectory(
    const FluxPair& fp, const GridFunction& u0, const ViscousConfig& cfg,
    const std::vector<double>& record_times);

bool check_max_principle(const std::vector<GridFunction>& trajectory,
                         Interval bounds);

// One-sided Lipschitz bound: every snapshot with time >= t0 has forward
// difference quotients <= E / time + 1e-6.
bool check_one_sided_lipschitz(const std::vector<GridFunction>& trajectory,
                               double t0, double E);

}  // namespace claw

#endif  // CLAW_VISCOUS_HPP
