#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "halfline/fft.hpp"
#include "halfline/norms.hpp"
#include "oracles.hpp"

using namespace halfline;

namespace {

LineFunction gaussian_line(const Grid1D& g, double a) {
  LineFunction f{g, std::vector<cplx>(g.size())};
  for (std::size_t j = 0; j < g.size(); ++j) f.values[j] = std::exp(-a * g.node(j) * g.node(j));
  return f;
}

// (1 / 4 pi^2) int int lead(xi, tau) <tau + xi^2>^{2b} |u^|^2 for u = e^{-a x^2 - c t^2}.
double gaussian_weighted_norm(double a, double c, double s, double b, bool z_weight) {
  auto inner = [&](double xi) {
    auto f = [&](double tau) {
      const double lead = z_weight ? std::pow(1.0 + tau * tau, s / 2.0) : std::pow(1.0 + xi * xi, s);
      const double mod = tau + xi * xi;
      const double hat = oracle::gaussian_hat(xi, a) * oracle::gaussian_hat(tau, c);
      return lead * std::pow(1.0 + mod * mod, b) * hat * hat;
    };
    // the modulation weight kinks nowhere, but its bulk moves to tau = -xi^2
    return oracle::gk(f, -xi * xi - 40.0, 40.0);
  };
  const double total = oracle::gk(inner, -12.0, 12.0);
  return std::sqrt(total / (4.0 * oracle::pi * oracle::pi));
}

}  // namespace

TEST_CASE("H^s norm of a Gaussian against the closed-form spectrum") {
  const Grid1D g = Grid1D::centered(512, 40.0);
  for (double a : {0.5, 2.0}) {
    for (double s : {-0.75, -0.5, 0.0, 0.7}) {
      CAPTURE(a);
      CAPTURE(s);
      CHECK(hs_norm(gaussian_line(g, a), s) == doctest::Approx(oracle::gaussian_hs_norm(a, s)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(hs_norm(gaussian_line(g, 1.0), 3.0), std::invalid_argument);
}

TEST_CASE("half-line norm is the norm of the zero extension") {
  const Grid1D g = Grid1D::centered(256, 32.0);
  HalfLineFunction h;
  h.spacing = g.spacing();
  double l2 = 0.0;
  for (std::size_t j = 0; j < 100; ++j) {
    const double x = static_cast<double>(j) * h.spacing;
    h.samples.push_back(cplx(x * std::exp(-x), std::sin(x) * std::exp(-x * x)));
    l2 += std::norm(h.samples.back()) * h.spacing;
  }
  // discrete Plancherel
  CHECK(half_line_norm(h, 0.0, g) == doctest::Approx(std::sqrt(l2)).epsilon(1e-13));
  CHECK(half_line_norm(h, -0.5, g) < half_line_norm(h, 0.0, g));

  const LineFunction ext = zero_extend(h, g);
  CHECK(ext.values[*g.index_of(0.0) - 1] == cplx(0.0));
  CHECK(ext.values[*g.index_of(0.0) + 3] == h.samples[3]);

  HalfLineFunction wrong = h;
  wrong.spacing *= 2.0;
  CHECK_THROWS_AS(zero_extend(wrong, g), std::invalid_argument);
  HalfLineFunction too_long = h;
  too_long.samples.assign(200, cplx(1.0));
  CHECK_THROWS_AS(zero_extend(too_long, g), std::invalid_argument);
}

TEST_CASE("X^{s,b} and Z^{s,b} weights against a double integral") {
  const SpaceTimeGrid g{Grid1D::centered(128, 32.0), Grid1D::centered(256, 32.0)};
  const double a = 1.0, c = 0.5;
  Field u(g);
  double l2 = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    for (std::size_t k = 0; k < g.t.size(); ++k) {
      const double x = g.x.node(i), t = g.t.node(k);
      u(i, k) = std::exp(-a * x * x - c * t * t);
      l2 += std::norm(u(i, k)) * g.x.spacing() * g.t.spacing();
    }
  }
  CHECK(xsb_norm(u, 0.0, 0.0) == doctest::Approx(std::sqrt(l2)).epsilon(1e-13));
  CHECK(zsb_norm(u, 0.0, 0.0) == doctest::Approx(std::sqrt(l2)).epsilon(1e-13));
  for (auto [s, b] : {std::pair{-0.5, 0.45}, std::pair{-0.5, -0.49}, std::pair{0.3, 0.2}}) {
    CAPTURE(s);
    CAPTURE(b);
    CHECK(xsb_norm(u, s, b) == doctest::Approx(gaussian_weighted_norm(a, c, s, b, false)).epsilon(1e-8));
    CHECK(zsb_norm(u, s, b) == doctest::Approx(gaussian_weighted_norm(a, c, s, b, true)).epsilon(1e-8));
  }
}

TEST_CASE("time slices and the Y norm") {
  const SpaceTimeGrid g{Grid1D::centered(128, 32.0), Grid1D::centered(32, 4.0)};
  Field u(g);
  const LineFunction prof = gaussian_line(g.x, 0.8);
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    for (std::size_t k = 0; k < g.t.size(); ++k) u(i, k) = prof.values[i] * (2.0 + std::cos(g.t.node(k)));
  }
  // the largest slice is t = 0, where the amplitude is 3
  CHECK(sup_slice_norm(u, -0.5) == doctest::Approx(3.0 * hs_norm(prof, -0.5)).epsilon(1e-13));
  const double x = xsb_norm(u, -0.5, 0.45), y = y_norm(u, -0.5, 0.45);
  CHECK(y * y == doctest::Approx(x * x + std::pow(sup_slice_norm(u, -0.5), 2)).epsilon(1e-13));
}

TEST_CASE("high-frequency fraction") {
  const SpaceTimeGrid g{Grid1D::centered(64, 32.0), Grid1D::centered(64, 32.0)};
  Field smooth(g), spike(g);
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    for (std::size_t k = 0; k < g.t.size(); ++k) smooth(i, k) = std::exp(-0.1 * (g.x.node(i) * g.x.node(i) + g.t.node(k) * g.t.node(k)));
  }
  spike(32, 32) = 1.0;
  CHECK(high_frequency_fraction(dft_forward(smooth)) < 1e-12);
  CHECK(high_frequency_fraction(dft_forward(spike)) > 0.3);
}

TEST_CASE("solver regime") {
  SobolevParams p;
  CHECK(p.sigma0() == doctest::Approx((0.9 - 0.5 + 1.25) / 3.0));
  CHECK_NOTHROW(p.validate_solver_regime());
  CHECK_THROWS_AS((SobolevParams{-0.9, 0.45, 0.51}.validate_solver_regime()), std::invalid_argument);
  CHECK_THROWS_AS((SobolevParams{-0.5, 0.37, 0.51}.validate_solver_regime()), std::invalid_argument);
  CHECK_THROWS_AS((SobolevParams{-0.5, 0.45, 0.6}.validate_solver_regime()), std::invalid_argument);
}
