#ifndef CLAW_RIEMANN_HPP
#define CLAW_RIEMANN_HPP

// Exact discontinuity analysis: Rankine-Hugoniot speeds, the Oleinik
// E-condition, the Lax condition, weighted-form speeds, and the exact
// self-similar solution for strictly convex composed flux. Supplies the
// closed-form oracles the other solvers are tested against.

#include <functional>
#include <optional>
#include <vector>

#include "claw/flux.hpp"

namespace claw {

struct RiemannProblem {
  const FluxPair& fp;
  double u_minus;
  double u_plus;

  RiemannProblem(const FluxPair& f, double um, double up);
};

struct DiscontinuityReport {
  double speed = 0.0;
  bool satisfies_rh = true;  // the computed speed satisfies R-H by definition
  bool satisfies_e = false;
  bool satisfies_lax = false;
  std::optional<double> violating_state;
  Interval admissible_interval{0.0, 0.0};  // only when H strictly convex
};

struct Wave {
  enum Kind { shock, rarefaction } kind;
  double speed_lo = 0.0;  // == speed_hi for a shock
  double speed_hi = 0.0;
  double u_left = 0.0;
  double u_right = 0.0;
};

struct SelfSimilarSolution {
  double u_minus = 0.0;
  double u_plus = 0.0;
  std::vector<Wave> waves;
  std::function<double(double, double)> evaluate;  // (t, x) -> u
};

// k = (phi(u+) - phi(u-)) / (eta(u+) - eta(u-)); throws DegenerateStates.
double rh_speed(const RiemannProblem& rp);

// Strict Lax inequality a(u+) < k < a(u-); boundary equality counts as
// failure (tolerance 1e-12 on the comparisons).
bool check_lax(const RiemannProblem& rp);

struct EConditionResult {
  bool satisfied = true;
  std::optional<double> witness;
};

// Oleinik E-condition sampled on n_samples interior states.
EConditionResult check_e_condition(const RiemannProblem& rp,
                                   int n_samples = 101);

// Speeds reachable by multiplying the law by a positive weight psi(u):
// the open interval (a(u+), a(u-)) for strictly convex H.
Interval admissible_speed_interval(const RiemannProblem& rp);

// R-H speed of the multiplied form with weight f' > 0 on the state interval:
// integral of a(u) f'(u) du over [u-, u+] divided by f(u+) - f(u-).
double weighted_form_speed(const RiemannProblem& rp, const ScalarFn& f_prime);

// Single shock or single rarefaction fan; requires strictly convex H.
SelfSimilarSolution solve_riemann_convex(const RiemannProblem& rp);

// Full admissibility verdict for the CLI `riemann` subcommand.
DiscontinuityReport analyze_discontinuity(const RiemannProblem& rp,
                                          int n_samples = 101);

}  // namespace claw

#endif  // CLAW_RIEMANN_HPP
