#ifndef CLAW_FIXTURES_HPP
#define CLAW_FIXTURES_HPP

// The shared experiment fixtures: model pairs, initial data, and the
// hand-built reference candidates used across tests and configs.

#include <cmath>
#include <functional>
#include <string>

#include "claw/flux.hpp"
#include "claw/grid.hpp"

namespace claw::fixtures {

// Riemann initial data sampled on [x_min, x_max]: u_minus for x < 0.
inline GridFunction riemann_data(double u_minus, double u_plus, Grid1D g) {
  return GridFunction::sample(
      g, [=](double x) { return x < 0.0 ? u_minus : u_plus; });
}

// Rarefaction-producing data (-1, 1) for the quadratic model.
inline GridFunction burgers_fan(Grid1D g = Grid1D(-2.0, 2.0, 400)) {
  return riemann_data(-1.0, 1.0, g);
}

// Stationary-shock data (1, -1).
inline GridFunction burgers_shock(Grid1D g = Grid1D(-2.0, 2.0, 400)) {
  return riemann_data(1.0, -1.0, g);
}

// The four-state self-similar candidate family u_q: piecewise constant
// with outer states 1 / -1 and inner states -q / q separated at x = 0.
// q = 1 collapses to the single stationary admissible shock; q = 2 keeps
// every jump on the jump-speed relation while an inner jump is
// inadmissible.
inline std::function<double(double, double)> oleinik_uq(double q) {
  return [q](double t, double x) {
    const double s = 0.5 * (1.0 - q) * t;  // left inner edge
    if (x <= s) return 1.0;
    if (x <= 0.0) return -q;
    if (x <= -s) return q;
    return -1.0;
  };
}

// Non-entropic stationary jump (-1, 1): balances the jump-speed relation
// for any odd pair but violates the admissibility conditions.
inline std::function<double(double, double)> nonentropic_shock() {
  return [](double, double x) { return x < 0.0 ? -1.0 : 1.0; };
}

// The two divergent forms with the same characteristic field:
// (u, u^2/2) and (u^2/2, u^3/3); their jump speeds differ on (2, 0).
struct GelfandForms {
  FluxPair primary;
  FluxPair q_form;
};

inline GelfandForms gelfand_forms(Interval domain = {-1.0, 2.5}) {
  return {burgers_flux(domain),
          gelfand_q_flux({std::max(domain.lo, 1e-3), domain.hi})};
}

// Exponential pair (eta, phi) = (e^u, e^{2u}/2); in v = e^u the problem is
// the quadratic model, giving an exact cross-check oracle.
inline GridFunction exp_pair_riemann(Grid1D g = Grid1D(-2.0, 2.0, 400)) {
  return riemann_data(-0.5, 0.5, g);
}

// Smooth monotone [0, 1] profile with bounded second derivative (logistic
// CDF), the distribution-function data for the level-system runs.
inline double logistic_cdf(double x, double center = 0.5,
                           double steepness = 10.0) {
  return 1.0 / (1.0 + std::exp(-steepness * (x - center)));
}

inline GridFunction ph_smooth_monotone(Grid1D g) {
  return GridFunction::sample(g, [](double x) { return logistic_cdf(x); });
}

}  // namespace claw::fixtures

#endif  // CLAW_FIXTURES_HPP
