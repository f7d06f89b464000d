// Built with -mavx2 -mfma; only reached through the runtime dispatch in dispatch.cpp.
#include <immintrin.h>

#include "halfline/simd.hpp"

namespace halfline::simd {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// (a0, a1) * (b0, b1) on interleaved re/im pairs.
inline __m256d mul2(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

double weighted_norm2(const double* w, const cplx* z, std::size_t n) {
  const double* zd = reinterpret_cast<const double*>(z);
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w0 = _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(w + i)), 0x50);
    const __m256d w1 = _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(w + i + 2)), 0x50);
    const __m256d z0 = _mm256_loadu_pd(zd + 2 * i);
    const __m256d z1 = _mm256_loadu_pd(zd + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(w0, _mm256_mul_pd(z0, z0), acc0);
    acc1 = _mm256_fmadd_pd(w1, _mm256_mul_pd(z1, z1), acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += w[i] * std::norm(z[i]);
  return acc;
}

void cmul_inplace(cplx* y, const cplx* a, std::size_t n) {
  double* yd = reinterpret_cast<double*>(y);
  const double* ad = reinterpret_cast<const double*>(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(yd + 2 * i, mul2(_mm256_loadu_pd(yd + 2 * i), _mm256_loadu_pd(ad + 2 * i)));
  }
  for (; i < n; ++i) y[i] *= a[i];
}

void cmul(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
  double* od = reinterpret_cast<double*>(out);
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(od + 2 * i, mul2(_mm256_loadu_pd(ad + 2 * i), _mm256_loadu_pd(bd + 2 * i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d prod = _mm256_fmaddsub_pd(xv, ar, _mm256_mul_pd(_mm256_permute_pd(xv, 0x5), ai));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double pv_sum(double xi2, double centre, const double* eta2, const double* wt, const double* f, std::size_t n) {
  const __m256d vx = _mm256_set1_pd(xi2);
  const __m256d vc = _mm256_set1_pd(centre);
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d num = _mm256_mul_pd(_mm256_loadu_pd(wt + j), _mm256_sub_pd(_mm256_loadu_pd(f + j), vc));
    const __m256d den = _mm256_sub_pd(vx, _mm256_loadu_pd(eta2 + j));
    acc = _mm256_add_pd(acc, _mm256_div_pd(num, den));
  }
  double s = hsum(acc);
  for (; j < n; ++j) s += wt[j] * (f[j] - centre) / (xi2 - eta2[j]);
  return s;
}

}  // namespace

const Kernels& avx2_kernels_table() {
  static const Kernels k{"avx2", weighted_norm2, cmul_inplace, cmul, caxpy, pv_sum};
  return k;
}

}  // namespace halfline::simd
