#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "halfline/propagator.hpp"
#include "oracles.hpp"

using namespace halfline;

namespace {

const cplx I(0.0, 1.0);

// Free evolution of e^{-x^2} for i u_t + u_xx = 0.
cplx free_gaussian(double x, double t) {
  const cplx d = 1.0 + 4.0 * I * t;
  return std::exp(-x * x / d) / std::sqrt(d);
}

// Duhamel term for the time-independent source e^{-x^2}:
// v^(xi, t) = g^(xi) (1 - e^{-i xi^2 t}) / (i xi^2), inverted by quadrature.
cplx duhamel_gaussian(double x, double t) {
  auto part = [&](bool imag) {
    return [=](double xi) {
      const double q = xi * xi;
      const cplx factor = q < 1e-8 ? cplx(t, 0.0) - I * q * t * t / 2.0 : (1.0 - std::polar(1.0, -q * t)) / (I * q);
      const cplx v = oracle::gaussian_hat(xi, 1.0) * factor * std::polar(1.0, xi * x) / (2.0 * oracle::pi);
      return imag ? v.imag() : v.real();
    };
  };
  return {oracle::gk(part(false), -14.0, 14.0), oracle::gk(part(true), -14.0, 14.0)};
}

Field gaussian_source(const SpaceTimeGrid& g) {
  Field f(g);
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    for (std::size_t k = 0; k < g.t.size(); ++k) f(i, k) = std::exp(-g.x.node(i) * g.x.node(i));
  }
  return f;
}

}  // namespace

TEST_CASE("free evolution of a Gaussian") {
  const SpaceTimeGrid g{Grid1D::centered(512, 80.0), Grid1D::centered(64, 4.0)};
  LineFunction phi{g.x, std::vector<cplx>(g.x.size())};
  for (std::size_t i = 0; i < g.x.size(); ++i) phi.values[i] = std::exp(-g.x.node(i) * g.x.node(i));
  const Field u = w_r_apply(phi, g);
  CHECK_FALSE(u.under_resolved);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.x.size(); i += 7) {
    for (std::size_t k = 0; k < g.t.size(); ++k) {
      // beyond |t| = 1 the spreading tail would reach the periodic images
      if (std::abs(g.t.node(k)) > 1.0) continue;
      worst = std::max(worst, std::abs(u(i, k) - free_gaussian(g.x.node(i), g.t.node(k))));
    }
  }
  CHECK(worst < 1e-12);

  // a kink at the sampling scale is flagged
  LineFunction rough{g.x, std::vector<cplx>(g.x.size())};
  rough.values[256] = 1.0;
  CHECK(w_r_apply(rough, g).under_resolved);
}

TEST_CASE("Duhamel term converges at second order in dt") {
  double err[2];
  for (int level = 0; level < 2; ++level) {
    const SpaceTimeGrid g{Grid1D::centered(256, 64.0), Grid1D::centered(64u << level, 4.0)};
    const Field v = duhamel_apply(gaussian_source(g));
    double worst = 0.0;
    for (double x : {0.0, 1.25, -2.5}) {
      for (double t : {0.5, 1.0, -1.0}) {
        const std::size_t i = *g.x.index_of(x), k = *g.t.index_of(t);
        worst = std::max(worst, std::abs(v(i, k) - duhamel_gaussian(x, t)));
      }
    }
    err[level] = worst;
  }
  CHECK(err[0] < 5e-3);
  CHECK(err[0] / err[1] > 3.5);
  CHECK(err[0] / err[1] < 4.5);

  const SpaceTimeGrid g{Grid1D::centered(64, 16.0), Grid1D::centered(32, 4.0)};
  const Field v = duhamel_apply(gaussian_source(g));
  const std::size_t k0 = *g.t.index_of(0.0);
  for (std::size_t i = 0; i < g.x.size(); ++i) CHECK(v(i, k0) == cplx(0.0));
}

TEST_CASE("traces at x = 0") {
  const SpaceTimeGrid g{Grid1D::centered(256, 64.0), Grid1D::centered(64, 4.0)};
  HalfLineFunction phi;
  phi.spacing = g.x.spacing();
  for (int j = 0; j < 40; ++j) {
    const double x = j * phi.spacing;
    phi.samples.push_back(x * x * std::exp(-2.0 * x));
  }
  const InitialData init = InitialData::on_grid(phi, g.x);
  const HalfLineFunction p = trace_p(init, g.t);
  const Field u = w_r_apply(init.extension, g);
  const std::size_t i0 = *g.x.index_of(0.0), k0 = *g.t.index_of(0.0);
  REQUIRE(p.samples.size() == g.t.size() - k0);
  CHECK(p.spacing == doctest::Approx(g.t.spacing()));
  for (std::size_t k = 0; k < p.samples.size(); ++k) CHECK(p.samples[k] == u(i0, k0 + k));
  CHECK(std::abs(p.samples[0]) < 1e-12);

  const Field f = gaussian_source(g);
  const HalfLineFunction q = trace_q(f, g.t);
  CHECK(q.samples[0] == cplx(0.0));
  CHECK(std::abs(q.samples[8] - duhamel_gaussian(0.0, 0.5)) < 5e-3);
  CHECK_THROWS_AS(trace_q(f, Grid1D::centered(32, 4.0)), std::invalid_argument);
}
