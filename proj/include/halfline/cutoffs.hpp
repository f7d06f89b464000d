#pragma once

namespace halfline {

// Parameters of the frequency cutoff Theta(xi, tau) = Psi(|xi| - delta*sqrt|tau|).
// ramp_width is the length of the interval on which Psi falls from 1 to 0;
// small values approach the sharp cutoff.
struct CutoffConfig {
  double delta = 0.25;
  double ramp_width = 1.0;

  void validate() const;
};

enum class Cutoff { theta, psi, phi1, phi2, phi3 };

// <x> = sqrt(1 + x^2)
double bracket(double x);

// C-infinity step: 0 for x <= 0, 1 for x >= 1, S(x) + S(1-x) = 1.
double smooth_step(double x);

double time_cutoff(double t);                              // theta: 1 on [-1,1], 0 off (-2,2)
double psi(double x, const CutoffConfig& cfg = {});        // 1 for x <= 0, 0 for x >= ramp_width
double phi1(double mu);
double phi2(double mu);
double phi3(double x);
double cutoff_eval(Cutoff kind, double x, const CutoffConfig& cfg = {});

// Window applied to boundary data before the boundary operators: 1 on [0, 5/4],
// 0 from 7/4 on, so that the zero-extended data decay well inside [0, 2).
double boundary_window(double t);

}  // namespace halfline
