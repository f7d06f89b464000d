#pragma once

#include <vector>

#include "halfline/cutoffs.hpp"

namespace halfline {

struct ProfileIntegrals {
  double f1;  // int sqrt(tau) [1 - Theta] / (eta^2 + tau) over eta > 0
  double f2;  // int sqrt(tau) Theta / (eta^2 + tau) over eta > 0
};

// Direct evaluation by adaptive quadrature over the ramp of Theta, closed form
// on the plateau and the tail.
ProfileIntegrals profile_integrals(double tau, const CutoffConfig& cfg);

// Tabulated f1, f2 on a log-uniform tau grid, cubic interpolation in log tau.
class FrequencyProfile {
 public:
  FrequencyProfile() = default;
  FrequencyProfile(const CutoffConfig& cfg, double tau_max, int nodes_per_efold);

  const CutoffConfig& config() const { return cfg_; }
  double tau_min() const { return 0.5; }
  double tau_max() const { return tau_max_; }
  const std::vector<double>& tau_nodes() const { return tau_; }
  const std::vector<double>& f1_nodes() const { return f1_; }
  const std::vector<double>& f2_nodes() const { return f2_; }

  double f1(double tau) const;
  double f2(double tau) const;
  // -2 f2/f1 - 1 for tau >= 1, 0 for tau <= 1/2, smooth ramp in between.
  double w(double tau) const;

 private:
  double interpolate(const std::vector<double>& v, double tau) const;
  void check_range(double tau) const;

  CutoffConfig cfg_;
  double tau_max_ = 0.0;
  double log_min_ = 0.0, step_ = 0.0;
  std::vector<double> tau_, f1_, f2_;
};

FrequencyProfile profile_build(const CutoffConfig& cfg, double tau_max, int nodes_per_efold = 128);

// Theta(xi, tau) = Psi(|xi| - delta sqrt|tau|)
double theta_eval(double xi, double tau, const CutoffConfig& cfg);
// Theta_1 = [1 + w(tau)][1 - Theta] + 2 Theta
double theta1_eval(double xi, double tau, const FrequencyProfile& profile);

// (1 + w) f1 + 2 f2 with f1, f2 recomputed directly and w taken from the table.
double annihilation_residual(double tau, const FrequencyProfile& profile);

}  // namespace halfline
