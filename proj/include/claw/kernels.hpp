#ifndef CLAW_KERNELS_HPP
#define CLAW_KERNELS_HPP

// Data-parallel inner loops used by the solvers and the verifier.
//
// Every kernel has a scalar reference implementation and, on x86-64 with
// AVX2, a vectorized variant. The active set is chosen once at startup by
// CPU probe; kernels_dispatch_name() reports which one runs. The two
// implementations are equivalence-tested against each other.

#include <cstddef>

namespace claw::kernels {

struct Ops {
  // sum_i a[i]
  double (*sum)(const double* a, std::size_t n);
  // sum_i |a[i] - b[i]|
  double (*l1_diff)(const double* a, const double* b, std::size_t n);
  // max_i (s * x[i] - f[i]); n >= 1
  double (*affine_max)(double s, const double* x, const double* f,
                       std::size_t n);
  // acc[i] += a[i]
  void (*acc_add)(double* acc, const double* a, std::size_t n);
  // out[i] = (1 - nu) * f[i] + nu * f[i-1]   (f[-1] := f[0])  for nu >= 0
  // out[i] = (1 + nu) * f[i] - nu * f[i+1]   (f[n] := f[n-1]) for nu < 0
  // i.e. first-order upwind transport by one step of CFL number nu.
  void (*upwind_step)(double* out, const double* f, std::size_t n, double nu);
  // f[i] = chi + (f[i] - chi) * decay with chi the exact average of the
  // indicator chi_{u[i]} over the velocity cell [v_lo, v_hi]:
  // chi = (clamp(u[i], v_lo, v_hi) - clamp(0, v_lo, v_hi)) / (v_hi - v_lo).
  void (*relax_to_chi)(double* f, const double* u, std::size_t n, double v_lo,
                       double v_hi, double decay);
  // sum_i |eta_u[i] - eta_k| * ft[i] + sign(eta_u[i] - eta_k) *
  //       (phi_u[i] - phi_k) * fx[i]
  double (*kruzhkov_accum)(const double* eta_u, const double* phi_u,
                           const double* ft, const double* fx, double eta_k,
                           double phi_k, std::size_t n);
};

extern const Ops scalar;  // always available; the reference semantics
#if defined(__x86_64__)
extern const Ops avx2;    // valid to call only when AVX2 is supported
#endif

// The implementation selected for this machine.
const Ops& active();
const char* dispatch_name();

}  // namespace claw::kernels

#endif  // CLAW_KERNELS_HPP
