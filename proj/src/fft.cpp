#include "halfline/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace halfline {
namespace fft {
namespace {

// FFTW planning is not thread safe; execution through the new-array interface is.
std::mutex plan_mutex;

using PlanKey = std::tuple<int, std::size_t, std::size_t, int>;

fftw_plan lookup(int kind, std::size_t a, std::size_t b, int sign) {
  static std::map<PlanKey, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  const PlanKey key{kind, a, b, sign};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const std::size_t total = a * b;
  auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
  const int fsign = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  fftw_plan p = nullptr;
  if (kind == 0) {  // a rows of length b
    int n = static_cast<int>(b);
    p = fftw_plan_many_dft(1, &n, static_cast<int>(a), buf, nullptr, 1, n, buf, nullptr, 1, n, fsign, flags);
  } else if (kind == 1) {  // transform along axis 0 of a x b
    int n = static_cast<int>(a);
    int stride = static_cast<int>(b);
    p = fftw_plan_many_dft(1, &n, stride, buf, nullptr, stride, 1, buf, nullptr, stride, 1, fsign, flags);
  } else {
    p = fftw_plan_dft_2d(static_cast<int>(a), static_cast<int>(b), buf, buf, fsign, flags);
  }
  fftw_free(buf);
  if (p == nullptr) throw std::runtime_error("fft: planner failed");
  cache.emplace(key, p);
  return p;
}

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

void rows(cplx* data, std::size_t count, std::size_t n, int sign) {
  fftw_execute_dft(lookup(0, count, n, sign), as_fftw(data), as_fftw(data));
}

void columns(cplx* data, std::size_t n0, std::size_t n1, int sign) {
  fftw_execute_dft(lookup(1, n0, n1, sign), as_fftw(data), as_fftw(data));
}

void two_d(cplx* data, std::size_t n0, std::size_t n1, int sign) {
  fftw_execute_dft(lookup(2, n0, n1, sign), as_fftw(data), as_fftw(data));
}

}  // namespace fft

namespace {

// e^{-i origin xi_m} for each dual bin; exactly +-1 on centered grids.
std::vector<cplx> origin_phase(const Grid1D& g, int sign) {
  std::vector<cplx> ph(g.size());
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double a = sign * g.origin() * g.frequency(m);
    ph[m] = cplx(std::cos(a), std::sin(a));
  }
  return ph;
}

void check_layout(const SpaceTimeGrid& g, std::size_t n, const char* what) {
  if (g.x.size() == 0 || g.t.size() == 0 || n != g.size()) {
    throw std::invalid_argument(std::string(what) + ": value count does not match the grid");
  }
}

}  // namespace

Spectrum dft_forward(const Field& u) {
  check_layout(u.grid, u.values.size(), "dft_forward");
  Spectrum s(u.grid);
  s.values = u.values;
  const std::size_t nx = u.grid.x.size(), nt = u.grid.t.size();
  fft::two_d(s.values.data(), nx, nt, -1);
  const auto px = origin_phase(u.grid.x, -1);
  const auto pt = origin_phase(u.grid.t, -1);
  const double scale = u.grid.x.spacing() * u.grid.t.spacing();
  for (std::size_t m = 0; m < nx; ++m) {
    for (std::size_t l = 0; l < nt; ++l) s(m, l) *= scale * px[m] * pt[l];
  }
  return s;
}

Field dft_inverse(const Spectrum& s) {
  check_layout(s.grid, s.values.size(), "dft_inverse");
  Field u(s.grid);
  const std::size_t nx = s.grid.x.size(), nt = s.grid.t.size();
  const auto px = origin_phase(s.grid.x, 1);
  const auto pt = origin_phase(s.grid.t, 1);
  const double scale = 1.0 / (s.grid.x.length() * s.grid.t.length());
  for (std::size_t m = 0; m < nx; ++m) {
    for (std::size_t l = 0; l < nt; ++l) u(m, l) = s(m, l) * (scale * px[m] * pt[l]);
  }
  fft::two_d(u.values.data(), nx, nt, +1);
  return u;
}

std::vector<cplx> dft_forward(const LineFunction& f) {
  if (f.values.size() != f.grid.size()) throw std::invalid_argument("dft_forward: grid mismatch");
  std::vector<cplx> out = f.values;
  fft::one_d(out.data(), out.size(), -1);
  const auto ph = origin_phase(f.grid, -1);
  for (std::size_t m = 0; m < out.size(); ++m) out[m] *= f.grid.spacing() * ph[m];
  return out;
}

LineFunction dft_inverse(const Grid1D& grid, const std::vector<cplx>& spectrum) {
  if (spectrum.size() != grid.size()) throw std::invalid_argument("dft_inverse: grid mismatch");
  LineFunction f{grid, spectrum};
  const auto ph = origin_phase(grid, 1);
  for (std::size_t m = 0; m < grid.size(); ++m) f.values[m] *= ph[m] / grid.length();
  fft::one_d(f.values.data(), grid.size(), +1);
  return f;
}

}  // namespace halfline
