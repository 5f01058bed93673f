#ifndef CLAW_NUMERICS_HPP
#define CLAW_NUMERICS_HPP

// Small shared numerical utilities: bracketed root finding, adaptive
// quadrature, scalar minimization and a least-squares slope.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "claw/errors.hpp"

namespace claw {

using ScalarFn = std::function<double(double)>;

// Bisection for a strictly monotone f on [lo, hi]; returns x with
// |f(x) - y| <= 1e-12 * (1 + |y|).
double invert_monotone(const ScalarFn& f, double y, double lo, double hi);

// Adaptive Simpson quadrature with relative tolerance tol.
double adaptive_simpson(const ScalarFn& f, double a, double b,
                        double tol = 1e-10);

// Golden-section minimization of a unimodal f on [lo, hi]; returns the
// abscissa of the minimum located to absolute tolerance xtol.
double golden_minimize(const ScalarFn& f, double lo, double hi,
                       double xtol = 1e-10);

// Least-squares slope of log(err) against log(h).
// Throws DegenerateFit if fewer than two distinct h values or err <= 0.
double log_log_slope(const std::vector<std::pair<double, double>>& h_err);

// Monotone piecewise-cubic (Fritsch-Carlson) interpolant for tabulated
// flux pairs; preserves strict monotonicity of the data.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;

 private:
  std::vector<double> x_, y_, m_;  // m_ = node slopes
  std::size_t segment(double x) const;
};

}  // namespace claw

#endif  // CLAW_NUMERICS_HPP
