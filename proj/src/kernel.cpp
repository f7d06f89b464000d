#include "halfline/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "halfline/fft.hpp"
#include "halfline/norms.hpp"
#include "halfline/parallel.hpp"
#include "halfline/quadrature.hpp"
#include "halfline/simd.hpp"

namespace halfline {

namespace {
constexpr double pi = std::numbers::pi;
}

KernelSlice::KernelSlice(double tau, const FrequencyProfile& profile, FKernelOptions opts)
    : cfg_(profile.config()), tau_(tau) {
  if (!(tau >= 1.0)) throw std::invalid_argument("F_kernel: tau must be >= 1");
  rt_ = std::sqrt(tau);
  w_ = profile.w(tau);
  plateau_ = cfg_.delta * rt_;
  support_ = plateau_ + cfg_.ramp_width;

  // Panels on the plateau shrink geometrically towards the ramp, where the
  // difference quotient varies on the ramp scale; the ramp gets uniform panels.
  std::vector<double> breaks{0.0};
  const int levels = std::max(0, static_cast<int>(std::ceil(std::log2(4.0 * plateau_ / cfg_.ramp_width))));
  for (int k = 1; k <= levels; ++k) breaks.push_back(plateau_ * (1.0 - std::ldexp(1.0, -k)));
  breaks.push_back(plateau_);
  for (int k = 1; k <= 8; ++k) breaks.push_back(plateau_ + cfg_.ramp_width * k / 8.0);
  const QuadratureRule rule = composite_gauss(breaks, 16, opts.refine);

  const std::size_t n = rule.size();
  eta2_.resize(n);
  wt_ = rule.weights;
  f_.resize(n);
  g_.resize(n);
  double m2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double eta = rule.nodes[j];
    eta2_[j] = eta * eta;
    f_[j] = density(eta);
    g_[j] = eta2_[j] * f_[j];
    m2 += wt_[j] * g_[j];
  }
  c3_ = -(1.0 + w_) * pi * tau_ / 2.0 + (1.0 - w_) * m2;
}

double KernelSlice::density(double eta) const {
  return rt_ * psi(eta - plateau_, cfg_) / (eta * eta + tau_);
}

double KernelSlice::first_branch(double xi) const {
  if (xi == 0.0) return 0.0;
  const double fx = xi < support_ ? density(xi) : 0.0;
  double pv = simd::active().pv_sum(xi * xi, fx, eta2_.data(), wt_.data(), f_.data(), eta2_.size());
  if (fx != 0.0) pv += fx * std::log((support_ + xi) / std::abs(support_ - xi)) / (2.0 * xi);
  return (1.0 + w_) * pi * xi / (2.0 * (xi * xi + tau_)) + (1.0 - w_) * xi * pv;
}

double KernelSlice::second_branch(double xi) const {
  if (!(xi > support_)) throw std::invalid_argument("F_kernel: second branch needs xi beyond the Theta support");
  const double s = simd::active().pv_sum(xi * xi, 0.0, eta2_.data(), wt_.data(), g_.data(), eta2_.size());
  return -(1.0 + w_) * pi * tau_ / (2.0 * xi * (xi * xi + tau_)) + (1.0 - w_) * s / xi;
}

double KernelSlice::operator()(double xi) const {
  const double a = std::abs(xi);
  const double v = a < 2.0 * rt_ ? first_branch(a) : second_branch(a);
  if (!std::isfinite(v)) {
    throw NumericalError("F_kernel: non-finite value at xi = " + std::to_string(xi) + ", tau = " + std::to_string(tau_));
  }
  return xi < 0.0 ? -v : v;
}

double F_kernel(double xi, double tau, const FrequencyProfile& profile, FKernelOptions opts) {
  return KernelSlice(tau, profile, opts)(xi);
}

I3Kernel i3_kernel_row(const Grid1D& x_grid, double tau, const FrequencyProfile& profile, FKernelOptions opts) {
  const KernelSlice F(tau, profile, opts);
  const double w = F.w();
  I3Kernel row{std::vector<cplx>(x_grid.size()), std::vector<cplx>(x_grid.size())};
  for (std::size_t m = 0; m < x_grid.size(); ++m) {
    const double xi = x_grid.frequency(m);
    const double th = theta_eval(xi, tau, profile.config());
    row.i31[m] = (1.0 - w) * (1.0 - th) * std::sqrt(tau) / (xi * xi + tau);
    row.i32[m] = cplx(0.0, 2.0 / pi) * F(xi);
  }
  return row;
}

std::vector<cplx> i3_profile(const Grid1D& x_grid, double nu, const FrequencyProfile& profile, FKernelOptions opts) {
  if (opts.profile_padding < 1) throw std::invalid_argument("i3_profile: profile_padding must be >= 1");
  const KernelSlice F(nu, profile, opts);
  const double w = F.w();
  const double a = std::sqrt(nu);
  const double a2 = nu;
  const double c3 = F.tail_coefficient();
  const std::size_t n = x_grid.size();
  const std::size_t pad = static_cast<std::size_t>(opts.profile_padding);
  const std::size_t offset = n * (pad - 1) / 2;
  const Grid1D big(n * pad, x_grid.spacing(), x_grid.origin() - static_cast<double>(offset) * x_grid.spacing());

  std::vector<cplx> rem(big.size());
  for (std::size_t m = 0; m < big.size(); ++m) {
    const double xi = big.frequency(m);
    const double d = xi * xi + a2;
    const double th = theta_eval(xi, nu, profile.config());
    rem[m] = cplx(-(1.0 - w) * th * a / d, -(2.0 / pi) * (F(xi) - c3 * xi / (d * d)));
  }
  const LineFunction r = dft_inverse(big, rem);
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = x_grid.node(j);
    const double e = std::exp(-a * std::abs(x));
    out[j] = r.values[offset + j] + 0.5 * (1.0 - w) * e + c3 / (2.0 * pi * a) * x * e;
  }
  return out;
}

BoundarySpectrum BoundarySpectrum::from(const HalfLineFunction& h, const SpaceTimeGrid& grid) {
  const LineFunction hs = zero_extend(h, grid.t);
  return {grid, dft_forward(hs)};
}

I3Spectra i3_spectrum_parts(const BoundarySpectrum& h, const FrequencyProfile& profile, FKernelOptions opts) {
  const SpaceTimeGrid& g = h.grid;
  const std::size_t nx = g.x.size(), nt = g.t.size();
  if (h.h_star_hat.size() != nt) throw std::invalid_argument("i3_spectrum: boundary spectrum does not match the grid");
  I3Spectra out{Spectrum(g), Spectrum(g), Spectrum(g)};
  parallel_for(nt, [&](std::size_t l) {
    const double tau = g.t.frequency(l);
    const double cut = phi2(tau);
    if (cut == 0.0 || h.h_star_hat[l] == cplx(0.0)) return;
    const I3Kernel row = i3_kernel_row(g.x, tau, profile, opts);
    const cplx amp = cut * h.h_star_hat[l];
    for (std::size_t m = 0; m < nx; ++m) {
      out.i31(m, l) = amp * row.i31[m];
      out.i32(m, l) = amp * row.i32[m];
      out.total(m, l) = out.i31(m, l) - out.i32(m, l);
    }
  });
  return out;
}

Spectrum i3_spectrum(const BoundarySpectrum& h, const FrequencyProfile& profile, FKernelOptions opts) {
  return i3_spectrum_parts(h, profile, opts).total;
}

}  // namespace halfline
