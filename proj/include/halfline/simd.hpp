#pragma once

#include <complex>
#include <cstddef>

namespace halfline::simd {

using cplx = std::complex<double>;

// Hot loops shared by the norms, the propagators and the kernel quadrature.
// Every variant must agree with the scalar reference to rounding.
struct Kernels {
  const char* name;
  // sum_i w[i] |z[i]|^2
  double (*weighted_norm2)(const double* w, const cplx* z, std::size_t n);
  // y[i] *= a[i]
  void (*cmul_inplace)(cplx* y, const cplx* a, std::size_t n);
  // out[i] = a[i] * b[i]
  void (*cmul)(cplx* out, const cplx* a, const cplx* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*caxpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // sum_j wt[j] (f[j] - centre) / (xi2 - eta2[j])
  double (*pv_sum)(double xi2, double centre, const double* eta2, const double* wt, const double* f,
                   std::size_t n);
};

const Kernels& scalar_kernels();
// nullptr when the AVX2 translation unit was not built or the CPU lacks AVX2/FMA.
const Kernels* avx2_kernels();

// Selected once: the best supported variant unless HALFLINE_SIMD=scalar.
const Kernels& active();

}  // namespace halfline::simd
