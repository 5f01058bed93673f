#include <algorithm>
#include <cmath>
#include <cstddef>

#include "claw/kernels.hpp"

namespace claw::kernels {
namespace {

double sum_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

double l1_diff_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double affine_max_scalar(double s, const double* x, const double* f,
                         std::size_t n) {
  double best = s * x[0] - f[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double v = s * x[i] - f[i];
    if (v > best) best = v;
  }
  return best;
}

void acc_add_scalar(double* acc, const double* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += a[i];
}

void upwind_step_scalar(double* out, const double* f, std::size_t n,
                        double nu) {
  if (nu >= 0.0) {
    out[0] = f[0];
    for (std::size_t i = 1; i < n; ++i)
      out[i] = (1.0 - nu) * f[i] + nu * f[i - 1];
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i)
      out[i] = (1.0 + nu) * f[i] - nu * f[i + 1];
    out[n - 1] = f[n - 1];
  }
}

void relax_to_chi_scalar(double* f, const double* u, std::size_t n,
                         double v_lo, double v_hi, double decay) {
  // Cell average of chi_u over [v_lo, v_hi]: signed overlap of (0, u) with
  // the cell, normalized by the cell width. Exact moments for every u.
  const double c0 = std::min(std::max(0.0, v_lo), v_hi);
  const double inv = 1.0 / (v_hi - v_lo);
  for (std::size_t i = 0; i < n; ++i) {
    const double cu = std::min(std::max(u[i], v_lo), v_hi);
    const double c = (cu - c0) * inv;
    f[i] = c + (f[i] - c) * decay;
  }
}

double kruzhkov_accum_scalar(const double* eta_u, const double* phi_u,
                             const double* ft, const double* fx, double eta_k,
                             double phi_k, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = eta_u[i] - eta_k;
    const double sg = (d > 0.0) ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
    s += std::abs(d) * ft[i] + sg * (phi_u[i] - phi_k) * fx[i];
  }
  return s;
}

}  // namespace

const Ops scalar = {
    sum_scalar,       l1_diff_scalar,      affine_max_scalar,
    acc_add_scalar,   upwind_step_scalar,  relax_to_chi_scalar,
    kruzhkov_accum_scalar,
};

}  // namespace claw::kernels
