#pragma once

// Reference computations used by the tests. None of them goes through the
// library's FFT, quadrature or kernel code.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

// O(n^2) transform with the library's continuous convention, frequencies k * 2 pi / (n h)
// for the signed indices k in FFT order.
inline std::vector<cplx> naive_dft(const std::vector<cplx>& f, double h, double origin) {
  const std::size_t n = f.size();
  std::vector<cplx> out(n);
  const double dk = 2.0 * pi / (static_cast<double>(n) * h);
  for (std::size_t m = 0; m < n; ++m) {
    const long k = m < n / 2 ? static_cast<long>(m) : static_cast<long>(m) - static_cast<long>(n);
    const double xi = static_cast<double>(k) * dk;
    cplx acc(0.0);
    for (std::size_t j = 0; j < n; ++j) acc += f[j] * std::polar(1.0, -xi * (origin + static_cast<double>(j) * h));
    out[m] = acc * h;
  }
  return out;
}

// Fourier transform of e^{-a x^2}: sqrt(pi / a) e^{-xi^2 / (4a)}.
inline double gaussian_hat(double xi, double a) { return std::sqrt(pi / a) * std::exp(-xi * xi / (4.0 * a)); }

// ||e^{-a x^2}||_{H^s}^2 = (1 / 2 pi) int <xi>^{2s} pi / a e^{-xi^2 / (2a)} dxi.
inline double gaussian_hs_norm(double a, double s) {
  boost::math::quadrature::exp_sinh<double> q;
  auto f = [&](double xi) { return std::pow(1.0 + xi * xi, s) * (pi / a) * std::exp(-xi * xi / (2.0 * a)); };
  return std::sqrt(2.0 * q.integrate(f) / (2.0 * pi));
}

inline double gk(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-13);
}

inline double tanh_sinh(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate(f, a, b);
}

// int_0^inf by splitting at `split` and mapping the tail.
inline double half_line(const std::function<double(double)>& f, double split) {
  boost::math::quadrature::exp_sinh<double> q;
  return gk(f, 0.0, split) + q.integrate([&](double x) { return f(split + x); });
}

}  // namespace oracle
