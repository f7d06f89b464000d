#include "halfline/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "halfline/fft.hpp"

namespace halfline {

namespace {

HalfLineFunction sample_half_line(const std::function<cplx(double)>& f, double spacing, std::size_t count,
                                  double scale) {
  HalfLineFunction out;
  out.spacing = spacing;
  out.samples.resize(count);
  for (std::size_t j = 0; j < count; ++j) out.samples[j] = f(scale * static_cast<double>(j) * spacing);
  return out;
}

std::size_t zero_node(const Grid1D& g, const char* what) {
  const auto k = g.index_of(0.0);
  if (!k) throw std::invalid_argument(std::string(what) + ": 0 must be a grid node");
  return *k;
}

HalfLineFunction windowed(HalfLineFunction f) {
  for (std::size_t k = 0; k < f.samples.size(); ++k) f.samples[k] *= boundary_window(static_cast<double>(k) * f.spacing);
  return f;
}

void truncate_two_thirds(Spectrum& s) {
  const SpaceTimeGrid& g = s.grid;
  const long cx = static_cast<long>(g.x.size() / 3), ct = static_cast<long>(g.t.size() / 3);
  for (std::size_t m = 0; m < g.x.size(); ++m) {
    const bool drop_row = std::abs(g.x.signed_index(m)) > cx;
    for (std::size_t l = 0; l < g.t.size(); ++l) {
      if (drop_row || std::abs(g.t.signed_index(l)) > ct) s(m, l) = cplx(0.0);
    }
  }
}

}  // namespace

IBVPData sample_data(const std::function<cplx(double)>& phi, const std::function<cplx(double)>& h,
                     const SpaceTimeGrid& grid, const SobolevParams& params, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("sample_data: lambda must lie in (0, 1]");
  const std::size_t nx = grid.x.size() - zero_node(grid.x, "sample_data");
  const std::size_t nt = grid.t.size() - zero_node(grid.t, "sample_data");
  const double l2 = lambda * lambda;
  IBVPData d;
  d.phi = sample_half_line([&](double x) { return l2 * phi(x); }, grid.x.spacing(), nx, lambda);
  d.h = sample_half_line([&](double t) { return l2 * h(t); }, grid.t.spacing(), nt, l2);
  d.params = params;
  d.lambda = lambda;
  return d;
}

cplx interpolate(const HalfLineFunction& f, double x) {
  if (x < 0.0) throw std::invalid_argument("interpolate: negative abscissa");
  const long n = static_cast<long>(f.samples.size());
  if (n == 0) return cplx(0.0);
  const double u = x / f.spacing;
  const long j = static_cast<long>(std::floor(u));
  if (j >= n - 1) return j == n - 1 && u == static_cast<double>(j) ? f.samples.back() : cplx(0.0);
  if (u == static_cast<double>(j)) return f.samples[static_cast<std::size_t>(j)];
  const long i = std::clamp(j - 1, 0L, std::max(0L, n - 4));
  const long m = std::min(4L, n);
  cplx sum(0.0);
  for (long a = 0; a < m; ++a) {
    double l = 1.0;
    for (long c = 0; c < m; ++c) {
      if (c != a) l *= (u - static_cast<double>(i + c)) / static_cast<double>(a - c);
    }
    sum += l * f.samples[static_cast<std::size_t>(i + a)];
  }
  return sum;
}

HalfLineFunction rescale_exact(const HalfLineFunction& f, double lambda, double time_power) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("rescale: lambda must lie in (0, 1]");
  HalfLineFunction out = f;
  out.spacing = f.spacing / std::pow(lambda, time_power);
  for (auto& z : out.samples) z *= lambda * lambda;
  return out;
}

IBVPData rescale(const IBVPData& data, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("rescale: lambda must lie in (0, 1]");
  IBVPData out = data;
  out.lambda = data.lambda * lambda;
  const double l2 = lambda * lambda;
  for (std::size_t j = 0; j < out.phi.samples.size(); ++j) {
    out.phi.samples[j] = l2 * interpolate(data.phi, lambda * static_cast<double>(j) * data.phi.spacing);
  }
  for (std::size_t k = 0; k < out.h.samples.size(); ++k) {
    out.h.samples[k] = l2 * interpolate(data.h, l2 * static_cast<double>(k) * data.h.spacing);
  }
  return out;
}

double data_norm(const IBVPData& data, const SpaceTimeGrid& grid) {
  const double s = data.params.s;
  return half_line_norm(data.phi, s, grid.x) + half_line_norm(data.h, (2.0 * s + 1.0) / 4.0, grid.t);
}

Field dealiased_square(const Field& u) {
  Spectrum s = dft_forward(u);
  truncate_two_thirds(s);
  Field v = dft_inverse(s);
  for (auto& z : v.values) z *= z;
  Spectrum p = dft_forward(v);
  truncate_two_thirds(p);
  return dft_inverse(p);
}

GammaMap::GammaMap(const IBVPData& data, const SpaceTimeGrid& grid, const CutoffConfig& cfg, BoundaryOptions opts)
    : grid_(grid) {
  const std::size_t k0 = zero_node(grid.t, "GammaMap");
  zero_node(grid.x, "GammaMap");
  profile_ = profile_for_grid(grid, cfg);
  plan_.emplace(BoundaryPlan::extension(grid, profile_, opts));
  theta_.resize(grid.t.size());
  for (std::size_t k = 0; k < grid.t.size(); ++k) theta_[k] = time_cutoff(grid.t.node(k));

  const InitialData init = InitialData::on_grid(data.phi, grid.x);
  Field free = w_r_apply(init.extension, grid);
  const HalfLineFunction p = boundary_column(free);

  // h - p on the nodes t >= 0 of the grid.
  HalfLineFunction hp;
  hp.spacing = grid.t.spacing();
  hp.samples.assign(grid.t.size() - k0, cplx(0.0));
  if (std::abs(data.h.spacing - hp.spacing) > 1e-12 * hp.spacing) {
    throw std::invalid_argument("GammaMap: boundary data spacing differs from dt");
  }
  for (std::size_t k = 0; k < hp.samples.size(); ++k) {
    const cplx hk = k < data.h.samples.size() ? data.h.samples[k] : cplx(0.0);
    hp.samples[k] = hk - p.samples[k];
  }
  const Field bdr = plan_->apply(windowed(hp));

  linear_ = Field(grid);
  linear_.under_resolved = free.under_resolved;
  for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
    for (std::size_t k = 0; k < grid.t.size(); ++k) linear_(ix, k) = theta_[k] * (free(ix, k) + bdr(ix, k));
  }
}

Field GammaMap::nonlinear_part(const Field& u) const {
  if (!u.grid.same_as(grid_)) throw std::invalid_argument("GammaMap: iterate lives on another grid");
  Field src = dealiased_square(u);
  for (auto& z : src.values) z *= cplx(0.0, 1.0);
  Field v = duhamel_apply(src);
  const Field corr = plan_->apply(windowed(boundary_column(v)));
  for (std::size_t ix = 0; ix < grid_.x.size(); ++ix) {
    for (std::size_t k = 0; k < grid_.t.size(); ++k) v(ix, k) = theta_[k] * (v(ix, k) - corr(ix, k));
  }
  return v;
}

Field GammaMap::operator()(const Field& u, bool nonlinear) const {
  if (!nonlinear) return linear_;
  Field out = nonlinear_part(u);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += linear_.values[i];
  out.under_resolved = linear_.under_resolved;
  return out;
}

Field gamma_map(const Field& u, const IBVPData& data, const SpaceTimeGrid& grid, const CutoffConfig& cfg) {
  return GammaMap(data, grid, cfg)(u);
}

double residual_check(const Field& u, bool linear) {
  const SpaceTimeGrid& g = u.grid;
  const double dx = g.x.spacing(), dt = g.t.spacing();
  const std::size_t nx = g.x.size(), nt = g.t.size();
  const double x_max = g.x.node(nx - 1);
  double sum = 0.0;
  for (std::size_t ix = 1; ix + 1 < nx; ++ix) {
    const double x = g.x.node(ix);
    if (x < dx * (1.0 - 1e-9) || x > x_max - dx * (1.0 - 1e-9)) continue;
    for (std::size_t k = 1; k + 1 < nt; ++k) {
      const double t = g.t.node(k);
      if (t < dt * (1.0 - 1e-9) || t > 1.0 - dt * (1.0 - 1e-9)) continue;
      const cplx ut = (u(ix, k + 1) - u(ix, k - 1)) / (2.0 * dt);
      const cplx uxx = (u(ix + 1, k) - 2.0 * u(ix, k) + u(ix - 1, k)) / (dx * dx);
      cplx r = cplx(0.0, 1.0) * ut + uxx;
      if (!linear) r += u(ix, k) * u(ix, k);
      sum += std::norm(r);
    }
  }
  return std::sqrt(sum * dx * dt);
}

SolveResult picard_solve(const IBVPData& data, const SpaceTimeGrid& grid, const SolveOptions& opts) {
  const double s = data.params.s, b = data.params.b;
  SolveResult res;
  res.data_norm = data_norm(data, grid);
  if (res.data_norm > opts.eps0) {
    throw std::invalid_argument("picard_solve: data norm " + std::to_string(res.data_norm) +
                                " exceeds the small-data threshold eps0 = " + std::to_string(opts.eps0));
  }
  const GammaMap gamma(data, grid, opts.cutoff, opts.boundary);

  Field u = opts.initial ? *opts.initial : Field(grid);
  if (!u.grid.same_as(grid)) throw std::invalid_argument("picard_solve: initial iterate lives on another grid");
  for (std::size_t it = 0; it < opts.max_iter; ++it) {
    Field next = gamma(u, !opts.linear);
    Field diff = next;
    for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= u.values[i];
    res.iterate_deltas.push_back(y_norm(diff, s, b));
    res.iterate_norms.push_back(y_norm(next, s, b));
    u = std::move(next);
    if (res.iterate_deltas.back() <= opts.tol) {
      res.converged = true;
      break;
    }
  }
  res.residual_norm = residual_check(u, opts.linear);

  const std::size_t ix0 = zero_node(grid.x, "picard_solve"), k0 = zero_node(grid.t, "picard_solve");
  const double hmax = data.h.max_abs();
  double berr = 0.0;
  for (std::size_t k = k0 + 1; k < grid.t.size() && grid.t.node(k) < 1.0; ++k) {
    const std::size_t j = k - k0;
    const cplx hk = j < data.h.samples.size() ? data.h.samples[j] : cplx(0.0);
    berr = std::max(berr, std::abs(u(ix0, k) - hk));
  }
  res.boundary_error = hmax > 0.0 ? berr / hmax : berr;

  HalfLineFunction init;
  init.spacing = grid.x.spacing();
  for (std::size_t ix = ix0; ix < grid.x.size(); ++ix) {
    const std::size_t j = ix - ix0;
    const cplx pj = j < data.phi.samples.size() ? data.phi.samples[j] : cplx(0.0);
    init.samples.push_back(u(ix, k0) - pj);
  }
  const double pn = half_line_norm(data.phi, s, grid.x);
  const double en = half_line_norm(init, s, grid.x);
  res.initial_error = pn > 0.0 ? en / pn : en;
  res.u = std::move(u);
  return res;
}

}  // namespace halfline
