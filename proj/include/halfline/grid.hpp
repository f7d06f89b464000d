#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace halfline {

using cplx = std::complex<double>;

// Uniform lattice x_j = origin + j*spacing, j = 0..n-1. The dual lattice has
// spacing 2*pi/(n*spacing) and is stored in FFT order: bin m carries the
// signed index m for m < n/2 and m - n otherwise.
class Grid1D {
 public:
  Grid1D() = default;
  Grid1D(std::size_t n_points, double spacing, double origin);

  // Lattice of n points covering [-length/2, length/2).
  static Grid1D centered(std::size_t n_points, double length);

  std::size_t size() const { return n_; }
  double spacing() const { return spacing_; }
  double origin() const { return origin_; }
  double length() const { return static_cast<double>(n_) * spacing_; }
  double node(std::size_t j) const { return origin_ + static_cast<double>(j) * spacing_; }

  double dual_spacing() const;
  double nyquist() const;
  long signed_index(std::size_t m) const;
  double frequency(std::size_t m) const { return static_cast<double>(signed_index(m)) * dual_spacing(); }
  std::size_t bin_of(long signed_m) const;

  // Index of the node equal to x (to 1e-9 of a spacing), if any.
  std::optional<std::size_t> index_of(double x) const;

  bool same_as(const Grid1D& other) const;

 private:
  std::size_t n_ = 0;
  double spacing_ = 0.0;
  double origin_ = 0.0;
};

struct SpaceTimeGrid {
  Grid1D x;
  Grid1D t;

  std::size_t size() const { return x.size() * t.size(); }
  bool same_as(const SpaceTimeGrid& o) const { return x.same_as(o.x) && t.same_as(o.t); }
};

// Samples u(x_i, t_k) stored row-major with the t index fastest.
struct Field {
  SpaceTimeGrid grid;
  std::vector<cplx> values;
  bool under_resolved = false;

  Field() = default;
  explicit Field(const SpaceTimeGrid& g) : grid(g), values(g.size()) {}

  cplx& operator()(std::size_t ix, std::size_t it) { return values[ix * grid.t.size() + it]; }
  const cplx& operator()(std::size_t ix, std::size_t it) const { return values[ix * grid.t.size() + it]; }
};

// Transform of a Field on the dual lattice, same layout, (xi, tau) bins in FFT order.
struct Spectrum {
  SpaceTimeGrid grid;
  std::vector<cplx> values;

  Spectrum() = default;
  explicit Spectrum(const SpaceTimeGrid& g) : grid(g), values(g.size()) {}

  cplx& operator()(std::size_t m, std::size_t l) { return values[m * grid.t.size() + l]; }
  const cplx& operator()(std::size_t m, std::size_t l) const { return values[m * grid.t.size() + l]; }
};

struct LineFunction {
  Grid1D grid;
  std::vector<cplx> values;
};

// Samples f(j*spacing), j = 0..n-1, of a function on the closed half line.
struct HalfLineFunction {
  double spacing = 0.0;
  std::vector<cplx> samples;

  // True when the last 10% of samples stay below 1e-8 of the maximum.
  bool decay_flag() const;
  double max_abs() const;
};

void require_power_of_two(std::size_t n, const char* what);

}  // namespace halfline
