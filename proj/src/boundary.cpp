#include "halfline/boundary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "halfline/cutoffs.hpp"
#include "halfline/fft.hpp"
#include "halfline/parallel.hpp"
#include "halfline/quadrature.hpp"
#include "halfline/simd.hpp"

namespace halfline {

namespace {

constexpr double pi = std::numbers::pi;

double near_weight(double nu, const BoundaryOptions& o) {
  return 0.5 * std::erfc((std::abs(nu) - o.split_centre) / o.split_width);
}

double far_weight(double nu, const BoundaryOptions& o) {
  return 0.5 * std::erfc((o.split_centre - std::abs(nu)) / o.split_width);
}

}  // namespace

FrequencyProfile profile_for_grid(const SpaceTimeGrid& grid, const CutoffConfig& cfg) {
  return profile_build(cfg, std::max(16.0, grid.t.nyquist() * (1.0 + 1e-9)));
}

BoundaryPlan::BoundaryPlan(const SpaceTimeGrid& grid, const FrequencyProfile* profile, BoundaryOptions opts,
                           bool direct)
    : grid_(grid), profile_(profile), opts_(opts), direct_(direct) {
  if (opts.time_padding < 1 || (opts.time_padding & (opts.time_padding - 1)) != 0) {
    throw std::invalid_argument("BoundaryPlan: time_padding must be a power of two");
  }
  const auto zero_t = grid.t.index_of(0.0);
  if (!zero_t || !grid.x.index_of(0.0)) throw std::invalid_argument("BoundaryPlan: x = 0 and t = 0 must be grid nodes");
  if (!direct && profile->tau_max() < grid.t.nyquist()) {
    throw std::invalid_argument("BoundaryPlan: frequency profile does not cover the temporal Nyquist frequency");
  }
  k0_ = *zero_t;
  window_ = grid.t.size() - k0_;
  const std::size_t nx = grid.x.size(), nt = grid.t.size();
  n_pad_ = nt * static_cast<std::size_t>(opts.time_padding);
  const Grid1D padded(n_pad_, grid.t.spacing(), grid.t.origin());
  const double dt = grid.t.spacing();

  // Lattice part.
  far_.assign(nx * n_pad_, cplx(0.0));
  const double scale = dt / padded.length();
  parallel_for(n_pad_, [&](std::size_t m) {
    const double nu = padded.frequency(m);
    const double wgt = far_weight(nu, opts_);
    if (wgt < 1e-18) return;
    const auto col = mode_column(nu);
    for (std::size_t ix = 0; ix < nx; ++ix) far_[ix * n_pad_ + m] = (wgt * scale) * col[ix];
  });

  // Quadrature part in rho = sqrt|nu| on both sides of nu = 0.
  const double reach = opts.split_centre + 6.0 * opts.split_width;
  std::vector<double> breaks{0.0};
  for (double b : {1.1, 1.9, 4.0, 8.0, 12.0, 16.0, 24.0, 32.0}) {
    if (b < reach) breaks.push_back(std::sqrt(b));
  }
  breaks.push_back(std::sqrt(reach));
  const QuadratureRule rho = composite_gauss(breaks, 32, opts.near_refine);
  std::vector<double> weights;
  for (int side : {-1, 1}) {
    for (std::size_t i = 0; i < rho.size(); ++i) {
      const double r = rho.nodes[i];
      const double nu = side * r * r;
      near_nu_.push_back(nu);
      weights.push_back(rho.weights[i] * 2.0 * r / (2.0 * pi) * near_weight(nu, opts_));
    }
  }
  const std::size_t q = near_nu_.size();
  near_modes_.assign(nx * q, cplx(0.0));
  parallel_for(q, [&](std::size_t j) {
    const auto col = mode_column(near_nu_[j]);
    for (std::size_t ix = 0; ix < nx; ++ix) near_modes_[ix * q + j] = weights[j] * col[ix];
  });
  near_fwd_.resize(q * window_);
  near_bwd_.resize(q * nt);
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < window_; ++k) {
      near_fwd_[j * window_ + k] = std::polar(dt, -near_nu_[j] * static_cast<double>(k) * dt);
    }
    for (std::size_t k = 0; k < nt; ++k) near_bwd_[j * nt + k] = std::polar(1.0, near_nu_[j] * grid.t.node(k));
  }
}

std::vector<cplx> BoundaryPlan::mode_column(double nu) const {
  const Grid1D& xg = grid_.x;
  const std::size_t nx = xg.size();
  std::vector<cplx> col(nx, cplx(0.0));
  if (direct_) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double x = xg.node(ix);
      if (x < 0.0) continue;
      col[ix] = nu < 0.0 ? std::polar(1.0, std::sqrt(-nu) * x) : cplx(std::exp(-std::sqrt(nu) * x));
    }
    return col;
  }
  const unsigned parts = opts_.components;
  if (nu < 0.0) {
    if (parts & kI1) {
      const double k = std::sqrt(-nu);
      for (std::size_t ix = 0; ix < nx; ++ix) col[ix] = std::polar(1.0, k * xg.node(ix));
    }
    return col;
  }
  const double c1 = phi1(nu), c2 = phi2(nu);
  if ((parts & kI2) && c1 != 0.0) {
    const double a = std::sqrt(nu);
    for (std::size_t ix = 0; ix < nx; ++ix) col[ix] += c1 * std::exp(-a * phi3(xg.node(ix)));
  }
  if ((parts & kI3) && c2 != 0.0) {
    const auto prof = i3_profile(xg, nu, *profile_, opts_.kernel);
    for (std::size_t ix = 0; ix < nx; ++ix) col[ix] += c2 * prof[ix];
  }
  return col;
}

BoundaryPlan BoundaryPlan::direct(const SpaceTimeGrid& grid, BoundaryOptions opts) {
  return BoundaryPlan(grid, nullptr, opts, true);
}

BoundaryPlan BoundaryPlan::extension(const SpaceTimeGrid& grid, const FrequencyProfile& profile, BoundaryOptions opts) {
  return BoundaryPlan(grid, &profile, opts, false);
}

Field BoundaryPlan::apply(const HalfLineFunction& h) const {
  const double dt = grid_.t.spacing();
  if (std::abs(h.spacing - dt) > 1e-12 * dt) throw std::invalid_argument("boundary operator: h spacing differs from dt");
  if (!h.decay_flag()) throw std::invalid_argument("boundary operator: h does not decay at the end of its samples");
  for (std::size_t k = window_; k < h.samples.size(); ++k) {
    if (h.samples[k] != cplx(0.0)) throw std::invalid_argument("boundary operator: h extends beyond the time window");
  }
  const std::size_t nx = grid_.x.size(), nt = grid_.t.size();
  const std::size_t used = std::min(window_, h.samples.size());
  const auto& K = simd::active();

  Field out(grid_);
  bool any = false;
  for (std::size_t k = 0; k < used; ++k) any = any || h.samples[k] != cplx(0.0);
  if (!any) return out;

  std::vector<cplx> g(n_pad_, cplx(0.0));
  for (std::size_t k = 0; k < used; ++k) g[k0_ + k] = h.samples[k];
  fft::one_d(g.data(), n_pad_, -1);
  std::vector<cplx> rows(nx * n_pad_);
  for (std::size_t ix = 0; ix < nx; ++ix) K.cmul(rows.data() + ix * n_pad_, far_.data() + ix * n_pad_, g.data(), n_pad_);
  fft::rows(rows.data(), nx, n_pad_, +1);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t k = 0; k < nt; ++k) out(ix, k) = rows[ix * n_pad_ + k];
  }

  const std::size_t q = near_nu_.size();
  std::vector<cplx> coef(q * nt);
  for (std::size_t j = 0; j < q; ++j) {
    cplx ghat(0.0);
    const cplx* fw = near_fwd_.data() + j * window_;
    for (std::size_t k = 0; k < used; ++k) ghat += fw[k] * h.samples[k];
    for (std::size_t k = 0; k < nt; ++k) coef[j * nt + k] = ghat * near_bwd_[j * nt + k];
  }
  for (std::size_t ix = 0; ix < nx; ++ix) {
    cplx* row = &out(ix, 0);
    const cplx* modes = near_modes_.data() + ix * q;
    for (std::size_t j = 0; j < q; ++j) {
      if (modes[j] != cplx(0.0)) K.caxpy(modes[j], coef.data() + j * nt, row, nt);
    }
  }
  return out;
}

Field w_bdr_direct(const HalfLineFunction& h, const SpaceTimeGrid& grid, BoundaryOptions opts) {
  return BoundaryPlan::direct(grid, opts).apply(h);
}

Field phi_bdr_apply(const HalfLineFunction& h, const SpaceTimeGrid& grid, const FrequencyProfile& profile,
                    BoundaryOptions opts) {
  return BoundaryPlan::extension(grid, profile, opts).apply(h);
}

}  // namespace halfline
