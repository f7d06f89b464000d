#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "halfline/kernel.hpp"
#include "halfline/profile.hpp"
#include "oracles.hpp"

using namespace halfline;
using oracle::pi;

namespace {

// f1, f2 by direct quadrature over eta, split at the ramp of Theta.
ProfileIntegrals reference_integrals(double tau, const CutoffConfig& cfg) {
  const double rt = std::sqrt(tau), a = cfg.delta * rt, b = a + cfg.ramp_width;
  auto th = [&](double eta) { return psi(eta - a, cfg); };
  auto k = [&](double eta) { return rt / (eta * eta + tau); };
  const double f2 = oracle::tanh_sinh([&](double e) { return k(e) * th(e); }, 0.0, a) +
                    oracle::tanh_sinh([&](double e) { return k(e) * th(e); }, a, b);
  const double f1 = oracle::tanh_sinh([&](double e) { return k(e) * (1.0 - th(e)); }, a, b) +
                    oracle::half_line([&](double e) { return k(b + e); }, 1.0);
  return {f1, f2};
}

// PV int_0^inf xi / (xi^2 - eta^2) sqrt(tau) / (eta^2 + tau) Theta_1 deta with w from the
// reference integrals. The symmetric excision has I(eps) = PV - 2 eps g'(xi) + O(eps^3) for
// the numerator g, so two Richardson levels on eps, eps / 2, eps / 4 remove both terms.
double reference_F(double xi, double tau, const CutoffConfig& cfg) {
  const auto fi = reference_integrals(tau, cfg);
  const double w = -2.0 * fi.f2 / fi.f1 - 1.0;
  const double rt = std::sqrt(tau), a = cfg.delta * rt;
  auto g = [&](double eta) {
    const double th = psi(eta - a, cfg);
    return xi / (xi * xi - eta * eta) * rt / (eta * eta + tau) * ((1.0 + w) * (1.0 - th) + 2.0 * th);
  };
  auto excised = [&](double eps) {
    double sum = oracle::tanh_sinh(g, 0.0, xi - eps);
    const double hi = std::max(xi + eps, a + cfg.ramp_width) + 1.0;
    sum += oracle::tanh_sinh(g, xi + eps, hi);
    sum += oracle::half_line([&](double e) { return g(hi + e); }, 1.0);
    return sum;
  };
  const double e = 1e-2;
  const double i1 = excised(e), i2 = excised(e / 2.0), i4 = excised(e / 4.0);
  const double r1 = 2.0 * i2 - i1, r2 = 2.0 * i4 - i2;
  return (8.0 * r2 - r1) / 7.0;
}

}  // namespace

TEST_CASE("profile integrals against direct quadrature") {
  const CutoffConfig cfg{0.25, 1.0};
  for (double tau : {0.75, 1.0, 4.0, 100.0, 1e4}) {
    CAPTURE(tau);
    const auto got = profile_integrals(tau, cfg);
    const auto ref = reference_integrals(tau, cfg);
    CHECK(got.f1 == doctest::Approx(ref.f1).epsilon(1e-11));
    CHECK(got.f2 == doctest::Approx(ref.f2).epsilon(1e-11));
    // f1 + f2 = int_0^inf sqrt(tau) / (eta^2 + tau) = pi / 2
    CHECK(got.f1 + got.f2 == doctest::Approx(pi / 2).epsilon(1e-12));
  }
}

TEST_CASE("tabulated profile and the choice of w") {
  const CutoffConfig cfg{0.25, 1.0};
  const FrequencyProfile p = profile_build(cfg, 1e4);
  for (double tau : {1.0, 1.37, 2.0, 10.0, 55.5, 100.0, 9999.0}) {
    CAPTURE(tau);
    const auto ref = profile_integrals(tau, cfg);
    CHECK(p.f1(tau) == doctest::Approx(ref.f1).epsilon(1e-11));
    CHECK(p.f2(tau) == doctest::Approx(ref.f2).epsilon(1e-11));
    CHECK(std::abs(annihilation_residual(tau, p)) < 1e-10);
  }
  CHECK(p.w(0.5) == 0.0);
  CHECK(p.w(0.1) == 0.0);
  CHECK(p.w(1.0) == doctest::Approx(-2.0 * p.f2(1.0) / p.f1(1.0) - 1.0));
  CHECK_THROWS_AS(p.f1(2e4), std::out_of_range);
  CHECK_THROWS_AS(profile_build(cfg, 5.0), std::invalid_argument);
}

TEST_CASE("steep ramp approaches the sharp cutoff") {
  const CutoffConfig cfg{0.25, 1e-3};
  const FrequencyProfile p = profile_build(cfg, 100.0);
  const double f1_sharp = pi / 2 - std::atan(0.25);
  const double w_sharp = -2.0 * std::atan(0.25) / f1_sharp - 1.0;
  CHECK(w_sharp == doctest::Approx(-1.3696).epsilon(1e-4));
  for (double tau : {1.0, 10.0, 100.0}) {
    CHECK(p.w(tau) == doctest::Approx(w_sharp).epsilon(2e-3));
    CHECK(p.f1(tau) == doctest::Approx(f1_sharp).epsilon(2e-3));
  }
}

TEST_CASE("F kernel against an excision-extrapolation principal value") {
  for (double delta : {0.125, 0.25}) {
    const CutoffConfig cfg{delta, 1.0};
    const FrequencyProfile p = profile_build(cfg, 100.0);
    CAPTURE(delta);
    CHECK(F_kernel(1.0, 4.0, p) == doctest::Approx(reference_F(1.0, 4.0, cfg)).epsilon(1e-7));
    // second branch and a point inside the ramp
    CHECK(F_kernel(5.0, 4.0, p) == doctest::Approx(reference_F(5.0, 4.0, cfg)).epsilon(1e-7));
    CHECK(F_kernel(3.1, 36.0, p) == doctest::Approx(reference_F(3.1, 36.0, cfg)).epsilon(1e-7));
  }
}

TEST_CASE("F kernel structure") {
  const FrequencyProfile p = profile_build(CutoffConfig{}, 1e4);
  for (double tau : {1.0, 30.0, 1e4}) {
    const KernelSlice F(tau, p);
    const double seam = 2.0 * std::sqrt(tau);
    CAPTURE(tau);
    CHECK(F.first_branch(seam) == doctest::Approx(F.second_branch(seam)).epsilon(1e-9));
    CHECK(F(-1.3) == -F(1.3));
    CHECK(F(0.0) == 0.0);
    const double far = 1e3 * seam;
    CHECK(std::pow(far, 3) * F(far) == doctest::Approx(F.tail_coefficient()).epsilon(1e-4));
    // refining the panels does not move the value
    const KernelSlice fine(tau, p, FKernelOptions{2, 8});
    CHECK(fine(0.7 * seam) == doctest::Approx(F(0.7 * seam)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(KernelSlice(0.5, p), std::invalid_argument);
}

TEST_CASE("x-profile of the third term against direct Fourier inversion") {
  const FrequencyProfile p = profile_build(CutoffConfig{}, 100.0);
  const double nu = 4.0, a = 2.0;
  const KernelSlice F(nu, p);
  const double w = F.w();
  const Grid1D g = Grid1D::centered(512, 64.0);
  const auto prof = i3_profile(g, nu, p);
  for (double x : {0.5, 2.0, -1.0}) {
    // (1/2 pi) int e^{i x xi} [(1 - w)(1 - Theta) a / (xi^2 + a^2) - (2i / pi) F] dxi, folded onto xi > 0
    const double support = 0.25 * a + 1.0;
    auto theta_part = [&](double xi) {
      return (1.0 - w) * theta_eval(xi, nu, p.config()) * a / (xi * xi + nu) * std::cos(x * xi);
    };
    double odd = 0.0;
    for (int k = 0; k < 600; ++k) odd += oracle::gk([&](double xi) { return F(xi) * std::sin(x * xi); }, k * 0.5, (k + 1) * 0.5);
    const double expect = 0.5 * (1.0 - w) * std::exp(-a * std::abs(x)) - oracle::gk(theta_part, 0.0, support) / pi +
                          2.0 / (pi * pi) * odd;
    CAPTURE(x);
    const cplx got = prof[*g.index_of(x)];
    CHECK(got.real() == doctest::Approx(expect).epsilon(1e-5));
    // the synthesis is real up to FFT roundoff on the padded grid
    CHECK(std::abs(got.imag()) < 1e-8);
  }
}
