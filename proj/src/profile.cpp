#include "halfline/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "halfline/parallel.hpp"
#include "halfline/quadrature.hpp"

namespace halfline {

ProfileIntegrals profile_integrals(double tau, const CutoffConfig& cfg) {
  if (!(tau > 0.0)) throw std::invalid_argument("profile_integrals: tau must be positive");
  const double rt = std::sqrt(tau);
  const double plateau = cfg.delta * rt;
  const double end = plateau + cfg.ramp_width;
  // The ramp integrands are smooth on the scale of the ramp; a fixed composite rule
  // avoids adaptive recursion on their nearly flat ends, where relative error tests
  // chase rounding when the ramp is steep.
  std::vector<double> breaks;
  for (int k = 0; k <= 32; ++k) breaks.push_back(plateau + cfg.ramp_width * k / 32.0);
  const QuadratureRule rule = composite_gauss(breaks, 32);
  double in = 0.0, out = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double eta = rule.nodes[j];
    const double p = psi(eta - plateau, cfg);
    const double k = rt / (eta * eta + tau);
    in += rule.weights[j] * k * p;
    out += rule.weights[j] * k * (1.0 - p);
  }
  const double f2 = std::atan(cfg.delta) + in;
  const double f1 = out + (0.5 * std::numbers::pi - std::atan(end / rt));
  return {f1, f2};
}

FrequencyProfile::FrequencyProfile(const CutoffConfig& cfg, double tau_max, int nodes_per_efold)
    : cfg_(cfg), tau_max_(tau_max) {
  cfg.validate();
  if (!(tau_max >= 10.0)) throw std::invalid_argument("profile_build: tau_max must be >= 10");
  if (nodes_per_efold < 8) throw std::invalid_argument("profile_build: too few nodes per e-fold");
  log_min_ = std::log(tau_min());
  const double span = std::log(tau_max) - log_min_;
  const std::size_t n = static_cast<std::size_t>(std::ceil(span * nodes_per_efold)) + 1;
  step_ = span / static_cast<double>(n - 1);
  tau_.resize(n);
  f1_.resize(n);
  f2_.resize(n);
  for (std::size_t i = 0; i < n; ++i) tau_[i] = std::exp(log_min_ + step_ * static_cast<double>(i));
  tau_.back() = tau_max;
  parallel_for(n, [&](std::size_t i) {
    const auto v = profile_integrals(tau_[i], cfg_);
    f1_[i] = v.f1;
    f2_[i] = v.f2;
  });
}

void FrequencyProfile::check_range(double tau) const {
  if (tau < tau_min() || tau > tau_max_ * (1.0 + 1e-12)) {
    throw std::out_of_range("FrequencyProfile: tau = " + std::to_string(tau) + " outside [1/2, " +
                            std::to_string(tau_max_) + "]");
  }
}

double FrequencyProfile::interpolate(const std::vector<double>& v, double tau) const {
  check_range(tau);
  const double u = (std::log(tau) - log_min_) / step_;
  const long n = static_cast<long>(v.size());
  long i = static_cast<long>(std::floor(u)) - 1;
  i = std::clamp(i, 0L, n - 4);
  double sum = 0.0;
  for (long j = 0; j < 4; ++j) {
    double l = 1.0;
    for (long k = 0; k < 4; ++k) {
      if (k != j) l *= (u - static_cast<double>(i + k)) / static_cast<double>(j - k);
    }
    sum += l * v[static_cast<std::size_t>(i + j)];
  }
  return sum;
}

double FrequencyProfile::f1(double tau) const { return interpolate(f1_, tau); }
double FrequencyProfile::f2(double tau) const { return interpolate(f2_, tau); }

double FrequencyProfile::w(double tau) const {
  if (tau <= 0.5) return 0.0;
  const double full = -2.0 * f2(tau) / f1(tau) - 1.0;
  if (tau >= 1.0) return full;
  return smooth_step((tau - 0.5) / 0.5) * full;
}

FrequencyProfile profile_build(const CutoffConfig& cfg, double tau_max, int nodes_per_efold) {
  return FrequencyProfile(cfg, tau_max, nodes_per_efold);
}

double theta_eval(double xi, double tau, const CutoffConfig& cfg) {
  return psi(std::abs(xi) - cfg.delta * std::sqrt(std::abs(tau)), cfg);
}

double theta1_eval(double xi, double tau, const FrequencyProfile& profile) {
  if (tau > profile.tau_max() * (1.0 + 1e-12)) {
    throw std::out_of_range("theta1_eval: tau beyond the profile range");
  }
  const double th = theta_eval(xi, tau, profile.config());
  return (1.0 + profile.w(tau)) * (1.0 - th) + 2.0 * th;
}

double annihilation_residual(double tau, const FrequencyProfile& profile) {
  const auto v = profile_integrals(tau, profile.config());
  return (1.0 + profile.w(tau)) * v.f1 + 2.0 * v.f2;
}

}  // namespace halfline
