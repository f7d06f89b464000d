#include "halfline/simd.hpp"

namespace halfline::simd {
namespace {

double weighted_norm2(const double* w, const cplx* z, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::norm(z[i]);
  return acc;
}

void cmul_inplace(cplx* y, const cplx* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = y[i].real() * a[i].real() - y[i].imag() * a[i].imag();
    const double im = y[i].real() * a[i].imag() + y[i].imag() * a[i].real();
    y[i] = {re, im};
  }
}

void cmul(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    const double im = a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    out[i] = {re, im};
  }
}

void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = {y[i].real() + ar * x[i].real() - ai * x[i].imag(), y[i].imag() + ar * x[i].imag() + ai * x[i].real()};
  }
}

double pv_sum(double xi2, double centre, const double* eta2, const double* wt, const double* f, std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += wt[j] * (f[j] - centre) / (xi2 - eta2[j]);
  return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", weighted_norm2, cmul_inplace, cmul, caxpy, pv_sum};
  return k;
}

}  // namespace halfline::simd
