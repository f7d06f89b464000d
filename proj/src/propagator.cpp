#include "halfline/propagator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "halfline/fft.hpp"
#include "halfline/norms.hpp"
#include "halfline/simd.hpp"

namespace halfline {

InitialData InitialData::on_grid(const HalfLineFunction& phi, const Grid1D& x_grid) {
  return {phi, zero_extend(phi, x_grid)};
}

namespace {

std::size_t zero_index(const Grid1D& g, const char* what) {
  const auto k = g.index_of(0.0);
  if (!k) throw std::invalid_argument(std::string(what) + ": 0 is not a node of the grid");
  return *k;
}

// (nx x nt) <-> (nt x nx)
std::vector<cplx> transpose(const std::vector<cplx>& a, std::size_t rows, std::size_t cols) {
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = a[i * cols + j];
  }
  return out;
}

std::vector<cplx> evolution_factors(const Grid1D& x, double dt) {
  std::vector<cplx> e(x.size());
  for (std::size_t m = 0; m < x.size(); ++m) {
    const double xi = x.frequency(m);
    e[m] = std::polar(1.0, -xi * xi * dt);
  }
  return e;
}

}  // namespace

Field w_r_apply(const LineFunction& phi_star, const SpaceTimeGrid& grid) {
  if (!phi_star.grid.same_as(grid.x)) throw std::invalid_argument("w_r_apply: data grid differs from the x-grid");
  const std::size_t nx = grid.x.size(), nt = grid.t.size();
  std::vector<cplx> spec = phi_star.values;
  fft::one_d(spec.data(), nx, -1);

  Field u(grid);
  double peak = 0.0, tail = 0.0;
  for (std::size_t m = 0; m < nx; ++m) {
    const double a = std::abs(spec[m]);
    peak = std::max(peak, a);
    if (std::abs(grid.x.signed_index(m)) >= static_cast<long>(0.45 * nx)) tail = std::max(tail, a);
  }
  u.under_resolved = peak > 0.0 && tail > 1e-8 * peak;

  const double inv_n = 1.0 / static_cast<double>(nx);
  std::vector<cplx> slices(nt * nx);
  for (std::size_t k = 0; k < nt; ++k) {
    const double t = grid.t.node(k);
    cplx* row = slices.data() + k * nx;
    for (std::size_t m = 0; m < nx; ++m) {
      const double xi = grid.x.frequency(m);
      row[m] = spec[m] * std::polar(inv_n, -xi * xi * t);
    }
  }
  fft::rows(slices.data(), nt, nx, +1);
  u.values = transpose(slices, nt, nx);
  return u;
}

Field duhamel_apply(const Field& f) {
  const SpaceTimeGrid& grid = f.grid;
  if (f.values.size() != grid.size()) throw std::invalid_argument("duhamel_apply: field does not match its grid");
  const std::size_t nx = grid.x.size(), nt = grid.t.size();
  const std::size_t k0 = zero_index(grid.t, "duhamel_apply");
  const double dt = grid.t.spacing();
  const auto& K = simd::active();

  std::vector<cplx> src = transpose(f.values, nx, nt);  // t-major
  fft::rows(src.data(), nt, nx, -1);

  const auto fwd = evolution_factors(grid.x, dt);
  std::vector<cplx> bwd(nx);
  for (std::size_t m = 0; m < nx; ++m) bwd[m] = std::conj(fwd[m]);

  std::vector<cplx> out(nt * nx, cplx(0.0));
  std::vector<cplx> tmp(nx);
  const cplx half(0.5 * dt, 0.0), one(1.0, 0.0);
  // v_k = E v_{k-1} + dt/2 (E f_{k-1} + f_k)
  for (std::size_t k = k0 + 1; k < nt; ++k) {
    cplx* v = out.data() + k * nx;
    const cplx* vp = out.data() + (k - 1) * nx;
    const cplx* fp = src.data() + (k - 1) * nx;
    const cplx* fk = src.data() + k * nx;
    K.cmul(tmp.data(), fp, fwd.data(), nx);
    K.caxpy(one, fk, tmp.data(), nx);
    K.cmul(v, vp, fwd.data(), nx);
    K.caxpy(half, tmp.data(), v, nx);
  }
  // v_k = E^{-1} v_{k+1} - dt/2 (f_k + E^{-1} f_{k+1})
  for (std::size_t k = k0; k-- > 0;) {
    cplx* v = out.data() + k * nx;
    const cplx* vn = out.data() + (k + 1) * nx;
    const cplx* fn = src.data() + (k + 1) * nx;
    const cplx* fk = src.data() + k * nx;
    K.cmul(tmp.data(), fn, bwd.data(), nx);
    K.caxpy(one, fk, tmp.data(), nx);
    K.cmul(v, vn, bwd.data(), nx);
    K.caxpy(-half, tmp.data(), v, nx);
  }
  fft::rows(out.data(), nt, nx, +1);
  const double inv_n = 1.0 / static_cast<double>(nx);
  for (auto& z : out) z *= inv_n;

  Field v(grid);
  v.values = transpose(out, nt, nx);
  return v;
}

HalfLineFunction boundary_column(const Field& u) {
  const std::size_t ix = zero_index(u.grid.x, "boundary_column");
  const std::size_t k0 = zero_index(u.grid.t, "boundary_column");
  HalfLineFunction h;
  h.spacing = u.grid.t.spacing();
  for (std::size_t k = k0; k < u.grid.t.size(); ++k) h.samples.push_back(u(ix, k));
  return h;
}

HalfLineFunction trace_p(const InitialData& phi, const Grid1D& t_grid) {
  SpaceTimeGrid g{phi.extension.grid, t_grid};
  return boundary_column(w_r_apply(phi.extension, g));
}

HalfLineFunction trace_q(const Field& f, const Grid1D& t_grid) {
  if (!f.grid.t.same_as(t_grid)) throw std::invalid_argument("trace_q: t-grid differs from the source grid");
  return boundary_column(duhamel_apply(f));
}

}  // namespace halfline
