#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "halfline/cutoffs.hpp"
#include "halfline/fft.hpp"
#include "halfline/grid.hpp"
#include "halfline/parallel.hpp"
#include "halfline/quadrature.hpp"
#include "halfline/rng.hpp"
#include "oracles.hpp"

using namespace halfline;

TEST_CASE("centered grid and dual lattice") {
  const Grid1D g = Grid1D::centered(16, 8.0);
  CHECK(g.spacing() == doctest::Approx(0.5));
  CHECK(g.node(0) == doctest::Approx(-4.0));
  CHECK(g.index_of(0.0).value() == 8);
  CHECK_FALSE(g.index_of(0.25).has_value());
  CHECK(g.signed_index(7) == 7);
  CHECK(g.signed_index(8) == -8);
  CHECK(g.signed_index(15) == -1);
  CHECK(g.bin_of(-1) == 15);
  CHECK(g.dual_spacing() == doctest::Approx(2.0 * oracle::pi / 8.0));
  CHECK(g.nyquist() == doctest::Approx(8 * g.dual_spacing()));
  CHECK_THROWS_AS(Grid1D::centered(12, 1.0), std::invalid_argument);
}

TEST_CASE("1-D transform agrees with the naive sum") {
  const Grid1D g = Grid1D::centered(64, 12.0);
  LineFunction f{g, std::vector<cplx>(64)};
  for (std::size_t j = 0; j < 64; ++j) {
    const double x = g.node(j);
    f.values[j] = cplx(std::exp(-x * x) * std::cos(3.0 * x), std::sin(x) * std::exp(-0.5 * x * x));
  }
  const auto fast = dft_forward(f);
  const auto ref = oracle::naive_dft(f.values, g.spacing(), g.origin());
  for (std::size_t m = 0; m < 64; ++m) CHECK(std::abs(fast[m] - ref[m]) < 1e-12);
  const LineFunction back = dft_inverse(g, fast);
  for (std::size_t j = 0; j < 64; ++j) CHECK(std::abs(back.values[j] - f.values[j]) < 1e-13);
}

TEST_CASE("Gaussian transform in two dimensions") {
  const SpaceTimeGrid g{Grid1D::centered(128, 24.0), Grid1D::centered(64, 16.0)};
  Field u(g);
  const double a = 0.7, c = 0.6;
  for (std::size_t i = 0; i < 128; ++i) {
    for (std::size_t k = 0; k < 64; ++k) {
      const double x = g.x.node(i), t = g.t.node(k);
      u(i, k) = std::exp(-a * x * x - c * t * t);
    }
  }
  const Spectrum s = dft_forward(u);
  double worst = 0.0;
  for (std::size_t m = 0; m < 128; ++m) {
    for (std::size_t l = 0; l < 64; ++l) {
      const double exact = oracle::gaussian_hat(g.x.frequency(m), a) * oracle::gaussian_hat(g.t.frequency(l), c);
      worst = std::max(worst, std::abs(s(m, l) - exact));
    }
  }
  CHECK(worst < 1e-12);
  const Field back = dft_inverse(s);
  for (std::size_t i = 0; i < u.values.size(); i += 97) CHECK(std::abs(back.values[i] - u.values[i]) < 1e-14);
}

TEST_CASE("smooth step and cutoffs") {
  CHECK(smooth_step(-0.1) == 0.0);
  CHECK(smooth_step(1.2) == 1.0);
  CHECK(smooth_step(0.5) == doctest::Approx(0.5));
  for (double x : {0.01, 0.2, 0.37, 0.49}) CHECK(smooth_step(x) + smooth_step(1.0 - x) == doctest::Approx(1.0).epsilon(1e-15));
  // independent normalisation of the bump integral
  auto bump = [](double t) { return std::exp(-1.0 / (t * (1.0 - t))); };
  const double total = oracle::tanh_sinh(bump, 0.0, 1.0);
  CHECK(smooth_step(0.3) == doctest::Approx(oracle::tanh_sinh(bump, 0.0, 0.3) / total).epsilon(1e-12));

  CHECK(time_cutoff(0.0) == 1.0);
  CHECK(time_cutoff(-1.0) == 1.0);
  CHECK(time_cutoff(2.0) == 0.0);
  CHECK(time_cutoff(1.5) == doctest::Approx(0.5));
  CHECK(psi(-0.1) == 1.0);
  CHECK(psi(1.0) == 0.0);
  for (double mu : {-0.1, 0.5, 1.3, 1.7, 5.0}) CHECK(phi1(mu) + phi2(mu) == doctest::Approx(1.0));
  CHECK(phi1(-1.0) == 0.0);
  CHECK(phi2(1.0) == 0.0);
  CHECK(phi3(2.5) == 2.5);
  CHECK(phi3(-1.5) == 0.0);
  CHECK(boundary_window(1.25) == 1.0);
  CHECK(boundary_window(1.75) == 0.0);
  CHECK(bracket(3.0) == doctest::Approx(std::sqrt(10.0)));
  CHECK_THROWS_AS((CutoffConfig{0.0, 1.0}.validate()), std::invalid_argument);
}

TEST_CASE("adaptive quadrature") {
  CHECK(integrate_adaptive([](double x) { return 1.0 / (1.0 + x * x); }, -1.0, 1.0, 1e-12, "t") ==
        doctest::Approx(oracle::pi / 2).epsilon(1e-13));
  const double tail = integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 2.0, 1e-11, "t");
  CHECK(tail == doctest::Approx(oracle::pi / 2).epsilon(1e-10));
  CHECK_THROWS_AS(integrate_to_infinity([](double) { return 1.0; }, 0.0, 1.0, 1e-8, "t"), NumericalError);

  const QuadratureRule r = composite_gauss({0.0, 1.0, 3.0}, 16, 2);
  CHECK(r.size() == 64);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], 9);
  CHECK(sum == doctest::Approx(std::pow(3.0, 10) / 10.0).epsilon(1e-13));
}

TEST_CASE("counter RNG is a pure function of its key") {
  const CounterRng a{7}, b{7}, c{8};
  CHECK(a.normal(1, 2, -3, 4) == b.normal(1, 2, -3, 4));
  CHECK(a.normal(1, 2, -3, 4) != c.normal(1, 2, -3, 4));
  CHECK(a.normal(1, 2, -3, 4) != a.normal(1, 2, 3, 4));
  double mean = 0.0, var = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const cplx z = a.normal(5, 0, i, 0);
    mean += z.real();
    var += z.real() * z.real();
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::abs(mean) < 0.03);
  CHECK(var == doctest::Approx(1.0).epsilon(0.05));
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform(9, 1, i, -i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("parallel_for visits every index once and rethrows") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 3) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  CHECK(thread_count() >= 1);
}
