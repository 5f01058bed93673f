#include "claw/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace claw {

RiemannProblem::RiemannProblem(const FluxPair& f, double um, double up)
    : fp(f), u_minus(um), u_plus(up) {
  if (!f.domain().contains(um, 1e-12) || !f.domain().contains(up, 1e-12))
    throw OutOfDomain();
}

double rh_speed(const RiemannProblem& rp) {
  if (rp.u_minus == rp.u_plus) throw DegenerateStates();
  const double d_eta = rp.fp.eta(rp.u_plus) - rp.fp.eta(rp.u_minus);
  const double d_phi = rp.fp.phi(rp.u_plus) - rp.fp.phi(rp.u_minus);
  return d_phi / d_eta;
}

bool check_lax(const RiemannProblem& rp) {
  const double k = rh_speed(rp);
  const double a_minus = rp.fp.characteristic_speed(rp.u_minus);
  const double a_plus = rp.fp.characteristic_speed(rp.u_plus);
  constexpr double tol = 1e-12;
  return a_plus < k - tol && k < a_minus - tol;
}

EConditionResult check_e_condition(const RiemannProblem& rp, int n_samples) {
  if (n_samples < 3) throw ConfigError("check_e_condition: n_samples < 3");
  const double k = rh_speed(rp);
  const double um = rp.u_minus, up = rp.u_plus;
  constexpr double tol = 1e-10;
  // sigma(u-, u) <=> chord slope from u- to the intermediate state
  for (int i = 1; i <= n_samples; ++i) {
    const double u = um + (up - um) * i / double(n_samples + 1);
    const double sigma =
        (rp.fp.phi(u) - rp.fp.phi(um)) / (rp.fp.eta(u) - rp.fp.eta(um));
    const bool ok = k <= sigma + tol;
    if (!ok) return {false, u};
  }
  return {true, std::nullopt};
}

Interval admissible_speed_interval(const RiemannProblem& rp) {
  if (convexity_class(rp.fp).tag != ConvexityTag::strictly_convex)
    throw NotConvex();
  const double a_plus = rp.fp.characteristic_speed(rp.u_plus);
  const double a_minus = rp.fp.characteristic_speed(rp.u_minus);
  return {std::min(a_plus, a_minus), std::max(a_plus, a_minus)};
}

double weighted_form_speed(const RiemannProblem& rp, const ScalarFn& f_prime) {
  if (rp.u_minus == rp.u_plus) throw DegenerateStates();
  const double lo = std::min(rp.u_minus, rp.u_plus);
  const double hi = std::max(rp.u_minus, rp.u_plus);
  const int kProbe = 101;
  for (int i = 0; i < kProbe; ++i) {
    const double u = lo + (hi - lo) * i / double(kProbe - 1);
    if (!(f_prime(u) > 0.0)) throw NonPositiveWeight();
  }
  auto num = [&](double u) {
    return rp.fp.phi_prime(u) / rp.fp.eta_prime(u) * f_prime(u);
  };
  const double numerator = adaptive_simpson(num, rp.u_minus, rp.u_plus, 1e-10);
  const double denominator =
      adaptive_simpson(f_prime, rp.u_minus, rp.u_plus, 1e-10);
  return numerator / denominator;
}

SelfSimilarSolution solve_riemann_convex(const RiemannProblem& rp) {
  if (convexity_class(rp.fp).tag != ConvexityTag::strictly_convex)
    throw NotConvex();
  SelfSimilarSolution sol;
  sol.u_minus = rp.u_minus;
  sol.u_plus = rp.u_plus;
  const FluxPair fp = rp.fp;  // captured by value: evaluator owns its model
  const double um = rp.u_minus, up = rp.u_plus;

  if (um == up) {
    sol.evaluate = [um](double, double) { return um; };
    return sol;
  }

  if (check_lax(rp)) {
    const double k = rh_speed(rp);
    sol.waves.push_back({Wave::shock, k, k, um, up});
    sol.evaluate = [um, up, k](double t, double x) {
      return (x <= k * t) ? um : up;
    };
    return sol;
  }

  // Strictly convex H and inadmissible shock: u- < u+, rarefaction fan
  // u(t, x) = a^{-1}(x / t) between the two characteristic speeds.
  const double a_lo = fp.characteristic_speed(um);
  const double a_hi = fp.characteristic_speed(up);
  sol.waves.push_back({Wave::rarefaction, a_lo, a_hi, um, up});
  auto speed = [fp](double u) {
    return fp.phi_prime(u) / fp.eta_prime(u);
  };
  sol.evaluate = [um, up, a_lo, a_hi, speed](double t, double x) {
    if (t <= 0.0) return (x <= 0.0) ? um : up;
    const double xi = x / t;
    if (xi <= a_lo) return um;
    if (xi >= a_hi) return up;
    return invert_monotone(speed, xi, um, up);
  };
  return sol;
}

DiscontinuityReport analyze_discontinuity(const RiemannProblem& rp,
                                          int n_samples) {
  DiscontinuityReport rep;
  rep.speed = rh_speed(rp);
  rep.satisfies_lax = check_lax(rp);
  const auto e = check_e_condition(rp, n_samples);
  rep.satisfies_e = e.satisfied;
  rep.violating_state = e.witness;
  if (convexity_class(rp.fp).tag == ConvexityTag::strictly_convex)
    rep.admissible_interval = admissible_speed_interval(rp);
  return rep;
}

}  // namespace claw
