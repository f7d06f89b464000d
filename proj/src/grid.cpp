#include "halfline/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace halfline {

void require_power_of_two(std::size_t n, const char* what) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw std::invalid_argument(std::string(what) + ": size " + std::to_string(n) +
                                " must be a power of two >= 8");
  }
}

Grid1D::Grid1D(std::size_t n_points, double spacing, double origin)
    : n_(n_points), spacing_(spacing), origin_(origin) {
  require_power_of_two(n_points, "Grid1D");
  if (!(spacing > 0.0) || !std::isfinite(spacing) || !std::isfinite(origin)) {
    throw std::invalid_argument("Grid1D: spacing must be positive and finite");
  }
}

Grid1D Grid1D::centered(std::size_t n_points, double length) {
  return Grid1D(n_points, length / static_cast<double>(n_points), -0.5 * length);
}

double Grid1D::dual_spacing() const { return 2.0 * std::numbers::pi / length(); }

double Grid1D::nyquist() const { return std::numbers::pi / spacing_; }

long Grid1D::signed_index(std::size_t m) const {
  const long mm = static_cast<long>(m);
  const long n = static_cast<long>(n_);
  return mm < n / 2 ? mm : mm - n;
}

std::size_t Grid1D::bin_of(long signed_m) const {
  const long n = static_cast<long>(n_);
  long m = signed_m % n;
  if (m < 0) m += n;
  return static_cast<std::size_t>(m);
}

std::optional<std::size_t> Grid1D::index_of(double x) const {
  const double r = (x - origin_) / spacing_;
  const double k = std::round(r);
  if (std::abs(r - k) > 1e-9 || k < 0.0 || k >= static_cast<double>(n_)) return std::nullopt;
  return static_cast<std::size_t>(k);
}

bool Grid1D::same_as(const Grid1D& o) const {
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); };
  return n_ == o.n_ && close(spacing_, o.spacing_) && close(origin_, o.origin_);
}

double HalfLineFunction::max_abs() const {
  double m = 0.0;
  for (const auto& z : samples) m = std::max(m, std::abs(z));
  return m;
}

bool HalfLineFunction::decay_flag() const {
  const double peak = max_abs();
  if (peak == 0.0) return true;
  const std::size_t n = samples.size();
  const std::size_t start = n - std::max<std::size_t>(1, n / 10);
  for (std::size_t j = start; j < n; ++j) {
    if (std::abs(samples[j]) > 1e-8 * peak) return false;
  }
  return true;
}

}  // namespace halfline
