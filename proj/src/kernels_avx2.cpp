// AVX2 variants of the kernel set. Compiled with -mavx2; only dispatched
// to when the CPU reports AVX2 support.

#if defined(__x86_64__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "claw/kernels.hpp"

namespace claw::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

const __m256d kAbsMask = _mm256_castsi256_pd(
    _mm256_set1_epi64x(0x7fffffffffffffffLL));

double sum_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

double l1_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_and_pd(d, kAbsMask));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double affine_max_avx2(double s, const double* x, const double* f,
                       std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  __m256d best = _mm256_set1_pd(-HUGE_VAL);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_fmsub_pd(vs, _mm256_loadu_pd(x + i),
                                _mm256_loadu_pd(f + i));
    best = _mm256_max_pd(best, v);
  }
  double m = (i > 0) ? hmax(best) : (s * x[0] - f[0]);
  for (; i < n; ++i) m = std::max(m, s * x[i] - f[i]);
  return m;
}

void acc_add_avx2(double* acc, const double* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(
        acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(a + i)));
  }
  for (; i < n; ++i) acc[i] += a[i];
}

void upwind_step_avx2(double* out, const double* f, std::size_t n, double nu) {
  if (nu >= 0.0) {
    const __m256d a = _mm256_set1_pd(1.0 - nu);
    const __m256d b = _mm256_set1_pd(nu);
    out[0] = f[0];
    std::size_t i = 1;
    for (; i + 4 <= n; i += 4) {
      __m256d v = _mm256_add_pd(_mm256_mul_pd(a, _mm256_loadu_pd(f + i)),
                                _mm256_mul_pd(b, _mm256_loadu_pd(f + i - 1)));
      _mm256_storeu_pd(out + i, v);
    }
    for (; i < n; ++i) out[i] = (1.0 - nu) * f[i] + nu * f[i - 1];
  } else {
    const __m256d a = _mm256_set1_pd(1.0 + nu);
    const __m256d b = _mm256_set1_pd(-nu);
    std::size_t i = 0;
    for (; i + 5 <= n; i += 4) {
      __m256d v = _mm256_add_pd(_mm256_mul_pd(a, _mm256_loadu_pd(f + i)),
                                _mm256_mul_pd(b, _mm256_loadu_pd(f + i + 1)));
      _mm256_storeu_pd(out + i, v);
    }
    for (; i + 1 < n; ++i) out[i] = (1.0 + nu) * f[i] - nu * f[i + 1];
    out[n - 1] = f[n - 1];
  }
}

void relax_to_chi_avx2(double* f, const double* u, std::size_t n, double v_lo,
                       double v_hi, double decay) {
  const double c0s = std::min(std::max(0.0, v_lo), v_hi);
  const double invs = 1.0 / (v_hi - v_lo);
  const __m256d vlo = _mm256_set1_pd(v_lo);
  const __m256d vhi = _mm256_set1_pd(v_hi);
  const __m256d c0 = _mm256_set1_pd(c0s);
  const __m256d inv = _mm256_set1_pd(invs);
  const __m256d vdecay = _mm256_set1_pd(decay);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vu = _mm256_loadu_pd(u + i);
    __m256d cu = _mm256_min_pd(_mm256_max_pd(vu, vlo), vhi);
    __m256d chi = _mm256_mul_pd(_mm256_sub_pd(cu, c0), inv);
    __m256d vf = _mm256_loadu_pd(f + i);
    vf = _mm256_add_pd(chi, _mm256_mul_pd(_mm256_sub_pd(vf, chi), vdecay));
    _mm256_storeu_pd(f + i, vf);
  }
  for (; i < n; ++i) {
    const double cu = std::min(std::max(u[i], v_lo), v_hi);
    const double c = (cu - c0s) * invs;
    f[i] = c + (f[i] - c) * decay;
  }
}

double kruzhkov_accum_avx2(const double* eta_u, const double* phi_u,
                           const double* ft, const double* fx, double eta_k,
                           double phi_k, std::size_t n) {
  const __m256d vek = _mm256_set1_pd(eta_k);
  const __m256d vpk = _mm256_set1_pd(phi_k);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d mone = _mm256_set1_pd(-1.0);
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(eta_u + i), vek);
    __m256d sgn = _mm256_blendv_pd(zero, one, _mm256_cmp_pd(d, zero, _CMP_GT_OQ));
    sgn = _mm256_blendv_pd(sgn, mone, _mm256_cmp_pd(d, zero, _CMP_LT_OQ));
    __m256d term =
        _mm256_mul_pd(_mm256_and_pd(d, kAbsMask), _mm256_loadu_pd(ft + i));
    __m256d dphi = _mm256_sub_pd(_mm256_loadu_pd(phi_u + i), vpk);
    term = _mm256_add_pd(
        term, _mm256_mul_pd(_mm256_mul_pd(sgn, dphi), _mm256_loadu_pd(fx + i)));
    acc = _mm256_add_pd(acc, term);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = eta_u[i] - eta_k;
    const double sg = (d > 0.0) ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
    s += std::abs(d) * ft[i] + sg * (phi_u[i] - phi_k) * fx[i];
  }
  return s;
}

}  // namespace

const Ops avx2 = {
    sum_avx2,       l1_diff_avx2,      affine_max_avx2,
    acc_add_avx2,   upwind_step_avx2,  relax_to_chi_avx2,
    kruzhkov_accum_avx2,
};

}  // namespace claw::kernels

#endif  // __x86_64__
