#ifndef CLAW_VARIATIONAL_HPP
#define CLAW_VARIATIONAL_HPP

// Direct evaluation of the solution by variational formulas: the initial
// potential, the Lax-Oleinik minimization, both Hopf formulas, the
// characteristics-based minimal potential, and the monotone-data formula.

#include <optional>
#include <vector>

#include "claw/flux.hpp"
#include "claw/grid.hpp"

namespace claw {

struct MinimizerRecord {
  double t = 0.0;
  double x = 0.0;
  double y_star = 0.0;
  double value = 0.0;          // minimal functional value
  double unique_within = 0.0;  // gap to the second-best local minimum
};

// Which primitive enters the Lax-Oleinik functional: the potential
// integrand eta(u0) (the construction the formula is derived from) or the
// raw u0 printed in the formula itself. Identical when eta(u) = u.
enum class LaxOleinikIntegrand { eta, raw };

// Which variable the monotone-data Hopf formula maximizes over: u-values
// (validated against Lax-Oleinik) or the printed eta(u)-value reading.
enum class MonotoneSupVariable { u_value, eta_value };

// U0(x) = integral of eta(u0) from the grid point nearest 0 (trapezoid).
SampledFunction potential_initial(const FluxPair& fp, const GridFunction& u0);

// Shared precomputation for the variational formulas over one (fp, u0)
// pair: the initial potential, the Legendre conjugate L of the Hamiltonian,
// and the data hull. Queries are pure and cheap after construction.
class VariationalSolver {
 public:
  VariationalSolver(const FluxPair& fp, const GridFunction& u0,
                    LaxOleinikIntegrand integrand = LaxOleinikIntegrand::eta,
                    int scan_points = 512);

  // u(t, x) via the Lax-Oleinik formula; requires t > 0 and strictly
  // convex H.
  std::pair<double, MinimizerRecord> lax_oleinik(double t, double x) const;

  // Potential U(t, x) = min_y [U0(y) + t L((x - y) / t)].
  double hopf_lax_potential(double t, double x) const;

  // Potential by the characteristics system: straight-line launches from
  // the (piecewise-linear) initial data, minimal Phi among characteristics
  // passing near x. Throws NoCharacteristicHits outside the influence cone.
  double characteristics_potential(double t, double x) const;

  // Monotone-data Hopf formula; requires nondecreasing u0.
  double hopf_monotone(double t, double x,
                       MonotoneSupVariable reading =
                           MonotoneSupVariable::u_value) const;

  // u extracted from a potential by the central difference of width dx:
  // u = eta^{-1}((P(x+dx/2) - P(x-dx/2)) / dx), clamped to the data hull.
  double u_from_potential(const std::function<double(double, double)>& pot,
                          double t, double x) const;

  const SampledFunction& initial_potential() const { return potential_; }
  Interval data_hull() const { return {u_lo_, u_hi_}; }

 private:
  FluxPair fp_;
  GridFunction u0_;
  SampledFunction potential_;      // integral of eta(u0)
  SampledFunction raw_potential_;  // integral of u0 (printed-formula mode)
  bool lo_uses_raw_ = false;
  SampledFunction conjugate_;      // L = H* on a padded slope grid
  double u_lo_, u_hi_;             // data hull
  double a_lo_, a_hi_;             // characteristic speeds over the hull
  bool strictly_convex_ = false;   // convexity of H, checked once
  int scan_points_;
  // Characteristic launches: refined launch abscissa, arrival offset
  // per unit time, and the potential rate along the characteristic.
  std::vector<double> launch_x_, launch_speed_, launch_phi0_, launch_rate_;

  double potential_extended(const SampledFunction& p, double y) const;
  double functional(double t, double x, double y) const;  // Lax-Oleinik J
};

// Free-function forms matching the operation contracts (each constructs a
// solver; prefer the class when evaluating many query points).
std::pair<double, MinimizerRecord> lax_oleinik(const FluxPair& fp,
                                               const GridFunction& u0,
                                               double t, double x);
double hopf_lax_convex_h(const FluxPair& fp, const GridFunction& u0, double t,
                         double x);
double characteristics_potential(const FluxPair& fp, const GridFunction& u0,
                                 double t, double x);
double hopf_monotone(const FluxPair& fp, const GridFunction& u0, double t,
                     double x,
                     MonotoneSupVariable reading = MonotoneSupVariable::u_value);

// Hopf formula for convex initial potential:
// U(t, x) = sup_s [s x - H(s) t - U0*(s)], s over eta([a, b]).
// Throws NotConvexInitial when U0 has a negative second difference.
double hopf_convex_initial(const FluxPair& fp, const SampledFunction& U0,
                           double t, double x);

}  // namespace claw

#endif  // CLAW_VARIATIONAL_HPP
