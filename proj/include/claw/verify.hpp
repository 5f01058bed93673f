#ifndef CLAW_VERIFY_HPP
#define CLAW_VERIFY_HPP

// Certification of candidate solutions: weak-form residual, parametric
// entropy residual over a (k, test function) certificate lattice, the
// |u - k| decomposition identity, and the change-of-variables cross-check.

#include <functional>
#include <string>
#include <vector>

#include "claw/flux.hpp"
#include "claw/grid.hpp"

namespace claw {

// Compactly supported nonnegative tensor bump
//   f(t, x) = B((t - t0)/r_t) B((x - x0)/r_x),  B(s) = exp(-1/(1 - s^2))
// with f and both first derivatives vanishing identically off the support.
struct TestFunction {
  double t0 = 0.0, x0 = 0.0;
  double r_t = 1.0, r_x = 1.0;

  double value(double t, double x) const;
  double dt(double t, double x) const;
  double dx(double t, double x) const;
  double support_measure() const { return 4.0 * r_t * r_x; }
};

// A bounded candidate u(t, x) on a declared window.
struct CandidateSolution {
  std::function<double(double, double)> evaluate;
  double t_min = 0.0, t_max = 1.0;
  double x_min = -1.0, x_max = 1.0;
  double u_lo = 0.0, u_hi = 0.0;  // declared value bounds

  // Candidate built from a stack of snapshots: piecewise linear in x,
  // linear in t between snapshot times.
  static CandidateSolution from_snapshots(std::vector<GridFunction> stack);
};

// Tensor midpoint quadrature of  integral of [eta(u) f_t + phi(u) f_x]
// over the bump support; zero (up to quadrature error) for weak solutions
// when the support stays inside the window with t > 0.
double weak_residual(const FluxPair& fp, const CandidateSolution& cand,
                     const TestFunction& tf, int quad_n);

// Quadrature of  |eta(u) - eta(k)| f_t + sign(u - k)(phi(u) - phi(k)) f_x;
// nonnegative (up to the quadrature budget) for entropy solutions, for
// every constant k.
double kruzhkov_residual(const FluxPair& fp, const CandidateSolution& cand,
                         const TestFunction& tf, double entropy_level,
                         int quad_n);

// Quadrature-error allowance paired with the residuals above.
inline double residual_budget(const TestFunction& tf, int quad_n) {
  return 10.0 * tf.support_measure() / quad_n;
}

struct CertificateEntry {
  double k = 0.0;
  TestFunction tf;
  double residual = 0.0;
  double budget = 0.0;
};

struct Certificate {
  bool pass = true;
  double worst_weak = 0.0;        // largest |weak residual| / budget
  CertificateEntry worst;         // most negative normalized entropy entry
  std::vector<CertificateEntry> failures;
};

// Full deterministic sweep: k on a 33-point grid over the candidate's
// value bounds, bumps centered on a 4 x 8 (t, x) lattice of the window at
// two radius scales.
Certificate entropy_certificate(const FluxPair& fp,
                                const CandidateSolution& cand,
                                int quad_n = 256);

// Both sides of the identity
//   Phi(u) = 1/2 int_a^b |u - k| Phi''(k) dk
//            + 1/2 (Phi'(a) + Phi'(b)) u
//            + 1/2 (Phi(a) + Phi(b) - a Phi'(a) - b Phi'(b)).
std::pair<double, double> entropy_decomposition_check(
    const ScalarFn& Phi, const ScalarFn& Phi_second, double a, double b,
    double u);

// Solves the problem in u with fp and in v = eta(u) with the derived pair
// (identity, phi o eta^{-1}); returns the L1 distance between eta(u) and v
// at t_final. `solve` maps (flux pair, initial data) to the solution.
double change_of_variables_check(
    const FluxPair& fp, const GridFunction& u0,
    const std::function<GridFunction(const FluxPair&, const GridFunction&)>&
        solve);

// Derived pair for the v-formulation: eta = identity on eta(domain),
// phi = the Hamiltonian of fp.
FluxPair eta_transformed_pair(const FluxPair& fp);

}  // namespace claw

#endif  // CLAW_VERIFY_HPP
