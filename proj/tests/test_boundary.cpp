#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "halfline/boundary.hpp"
#include "oracles.hpp"

using namespace halfline;
using oracle::pi;

namespace {

const SpaceTimeGrid kGrid{Grid1D::centered(256, 64.0), Grid1D::centered(256, 4.0)};

HalfLineFunction sample(const SpaceTimeGrid& g, auto&& f) {
  HalfLineFunction h{g.t.spacing(), {}};
  for (std::size_t k = 0; k < g.t.size() / 2; ++k) h.samples.push_back(f(static_cast<double>(k) * g.t.spacing()));
  return h;
}

// Smooth bump on (a, b) with a modulation, vanishing to all orders at both ends.
HalfLineFunction bump(const SpaceTimeGrid& g, double a, double b, double freq) {
  return sample(g, [=](double t) {
    if (t <= a || t >= b) return cplx(0.0);
    const double s = (t - a) / (b - a);
    return cplx(std::exp(-1.0 / (s * (1.0 - s))) * std::cos(freq * t));
  });
}

double rel_l2_positive(const Field& u, const Field& v) {
  double num = 0.0, den = 0.0;
  const auto& g = u.grid;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    for (std::size_t k = 0; k < g.t.size(); ++k) {
      if (g.x.node(i) <= 0.0 || g.t.node(k) <= 0.0) continue;
      num += std::norm(u(i, k) - v(i, k));
      den += std::norm(u(i, k));
    }
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("direct operator against the frequency integral of a Gaussian pulse") {
  // h = e^{-((t - c) / w)^2} has h^(nu) = sqrt(pi) w e^{-nu^2 w^2 / 4 - i nu c}; the
  // solution is (1 / 2 pi) int h^(nu) e^{i nu t} m(nu, x) dnu with m = e^{i sqrt(-nu) x}
  // for nu < 0 and e^{-sqrt(nu) x} for nu > 0, integrated here in r = sqrt|nu|.
  const double c = 0.9, w = 0.15;
  const auto h = sample(kGrid, [&](double t) { return cplx(std::exp(-std::pow((t - c) / w, 2))); });
  const Field u = w_bdr_direct(h, kGrid);
  auto hhat = [&](double nu) { return std::sqrt(pi) * w * std::exp(-nu * nu * w * w / 4.0) * std::polar(1.0, -nu * c); };
  using boost::math::quadrature::gauss;
  for (double x : {0.0, 0.25, 1.0, 3.0}) {
    for (double t : {-0.5, 0.5, 1.0, 1.5}) {
      cplx ref(0.0);
      for (int side : {-1, 1}) {
        auto term = [&](double r) {
          const double nu = side * r * r;
          const cplx m = side < 0 ? std::polar(1.0, r * x) : cplx(std::exp(-r * x));
          return hhat(nu) * std::polar(1.0, nu * t) * m * (2.0 * r / (2.0 * pi));
        };
        for (int p = 0; p < 72; ++p) {
          const double lo = p * 0.125, hi = lo + 0.125;
          ref += cplx(gauss<double, 40>::integrate([&](double r) { return term(r).real(); }, lo, hi),
                      gauss<double, 40>::integrate([&](double r) { return term(r).imag(); }, lo, hi));
        }
      }
      CAPTURE(x);
      CAPTURE(t);
      CHECK(std::abs(u(*kGrid.x.index_of(x), *kGrid.t.index_of(t)) - ref) < 1e-12);
    }
  }
}

TEST_CASE("direct operator recovers the boundary data") {
  const BoundaryPlan plan = BoundaryPlan::direct(kGrid);
  const std::size_t x0 = *kGrid.x.index_of(0.0), t0 = *kGrid.t.index_of(0.0);
  for (int m = 0; m < 4; ++m) {
    const auto h = bump(kGrid, 0.05 + 0.1 * m, 0.7 + 0.1 * m, 2.0 * m);
    const Field u = plan.apply(h);
    double worst = 0.0;
    for (std::size_t k = 0; k < h.samples.size(); ++k) worst = std::max(worst, std::abs(u(x0, t0 + k) - h.samples[k]));
    CHECK(worst / h.max_abs() < 1e-12);
    // zero before the data switches on, up to the spectrum of the bump beyond Nyquist
    CHECK(std::abs(u(x0 + 10, t0 - 5)) < 1e-6 * h.max_abs());
  }
}

TEST_CASE("extension agrees with the direct operator on the quarter plane") {
  const FrequencyProfile p = profile_for_grid(kGrid, CutoffConfig{});
  const BoundaryPlan direct = BoundaryPlan::direct(kGrid);
  const BoundaryPlan ext = BoundaryPlan::extension(kGrid, p);
  for (int m = 0; m < 3; ++m) {
    const auto h = bump(kGrid, 0.1, 0.8 + 0.2 * m, 3.0 * m);
    CHECK(rel_l2_positive(direct.apply(h), ext.apply(h)) < 1e-4);
  }
}

TEST_CASE("extension is the sum of its three components") {
  const FrequencyProfile p = profile_for_grid(kGrid, CutoffConfig{});
  const auto h = bump(kGrid, 0.1, 0.9, 1.0);
  const Field all = phi_bdr_apply(h, kGrid, p);
  Field sum(kGrid);
  for (unsigned c : {kI1, kI2, kI3}) {
    BoundaryOptions o;
    o.components = c;
    const Field part = phi_bdr_apply(h, kGrid, p, o);
    for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += part.values[i];
  }
  double worst = 0.0, size = 0.0;
  for (std::size_t i = 0; i < sum.values.size(); ++i) {
    worst = std::max(worst, std::abs(sum.values[i] - all.values[i]));
    size = std::max(size, std::abs(all.values[i]));
  }
  CHECK(worst < 1e-13 * size);
}

TEST_CASE("plan rejects bad data") {
  const BoundaryPlan plan = BoundaryPlan::direct(kGrid);
  auto h = bump(kGrid, 0.1, 0.9, 0.0);
  h.spacing *= 2.0;
  CHECK_THROWS_AS(plan.apply(h), std::invalid_argument);
  // data still large at the end of its samples
  const auto slow = sample(kGrid, [](double t) { return cplx(std::exp(-0.1 * t)); });
  CHECK_THROWS_AS(plan.apply(slow), std::invalid_argument);
  BoundaryOptions o;
  o.time_padding = 3;
  CHECK_THROWS_AS(BoundaryPlan::direct(kGrid, o), std::invalid_argument);
  const FrequencyProfile small = profile_build(CutoffConfig{}, 10.0);
  CHECK_THROWS_AS(BoundaryPlan::extension(kGrid, small), std::invalid_argument);
  // zero data maps to zero
  const Field z = plan.apply(sample(kGrid, [](double) { return cplx(0.0); }));
  CHECK(std::all_of(z.values.begin(), z.values.end(), [](const cplx& v) { return v == cplx(0.0); }));
}
