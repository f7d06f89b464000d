#pragma once

#include <cstddef>
#include <vector>

#include "halfline/grid.hpp"

namespace halfline {

namespace fft {

// Unnormalized in-place transforms. sign = -1 computes sum_j e^{-2 pi i jm/n} z_j,
// sign = +1 the conjugate kernel. Plans are cached and shared across threads.

// `count` contiguous rows of length n.
void rows(cplx* data, std::size_t count, std::size_t n, int sign);
// Along the leading axis of an (n0 x n1) row-major array.
void columns(cplx* data, std::size_t n0, std::size_t n1, int sign);
void two_d(cplx* data, std::size_t n0, std::size_t n1, int sign);
inline void one_d(cplx* data, std::size_t n, int sign) { rows(data, 1, n, sign); }

}  // namespace fft

// Forward transform with the continuous convention
//   u^(xi, tau) = sum_j sum_k e^{-i(x_j xi + t_k tau)} u(x_j, t_k) dx dt.
Spectrum dft_forward(const Field& u);
// Inverse: (2 pi)^{-2} sum sum e^{i(x xi + t tau)} u^ dxi dtau.
Field dft_inverse(const Spectrum& s);

// One-dimensional versions on a Grid1D; spectra are returned in FFT order.
std::vector<cplx> dft_forward(const LineFunction& f);
LineFunction dft_inverse(const Grid1D& grid, const std::vector<cplx>& spectrum);

}  // namespace halfline
