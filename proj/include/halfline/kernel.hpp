#pragma once

#include <vector>

#include "halfline/grid.hpp"
#include "halfline/profile.hpp"

namespace halfline {

struct FKernelOptions {
  // Every quadrature panel is split into `refine` parts; 2 is used to check convergence.
  int refine = 1;
  // i3_profile is synthesized on a lattice this many times longer (same spacing) and
  // then restricted; on x < 0 the profile decays only algebraically and would
  // otherwise wrap around onto x > 0.
  int profile_padding = 8;
};

// F(., tau) for one tau >= 1:
//   F(xi) = PV int_0^inf (xi / (xi^2 - eta^2)) (sqrt(tau) / (eta^2 + tau)) Theta_1(eta, tau) deta.
// Theta_1 = (1 + w) + (1 - w) Theta and the Theta part lives on [0, A], A = delta sqrt(tau) + ramp
// width, so the (1 + w) part is done in closed form and only a compact integral remains.
// Below xi = 2 sqrt(tau) the principal value is taken by subtracting f(xi) and adding
// f(xi) PV int_0^A deta / (xi^2 - eta^2); above it the integrand is regular.
class KernelSlice {
 public:
  KernelSlice(double tau, const FrequencyProfile& profile, FKernelOptions opts = {});

  double tau() const { return tau_; }
  double w() const { return w_; }
  double operator()(double xi) const;
  // lim xi^3 F(xi, tau) as xi -> infinity
  double tail_coefficient() const { return c3_; }
  // Values of both branches; they coincide at the seam xi = 2 sqrt(tau).
  double first_branch(double xi) const;
  double second_branch(double xi) const;
  std::size_t node_count() const { return eta2_.size(); }

 private:
  double density(double eta) const;

  CutoffConfig cfg_;
  double tau_, rt_, w_, plateau_, support_, c3_;
  std::vector<double> eta2_, wt_, f_, g_;  // g = eta^2 f
};

double F_kernel(double xi, double tau, const FrequencyProfile& profile, FKernelOptions opts = {});

// Frequency-side pieces of the third extension term for one tau bin:
//   I31 = (1 - w)(1 - Theta) sqrt(tau) / (xi^2 + tau),  I32 = (2i/pi) F,
// each to be multiplied by phi2(tau) h^(tau); the term itself is I31 - I32.
struct I3Kernel {
  std::vector<cplx> i31;
  std::vector<cplx> i32;
};
I3Kernel i3_kernel_row(const Grid1D& x_grid, double tau, const FrequencyProfile& profile, FKernelOptions opts = {});

// x-profile (all x nodes) of the third extension term at temporal frequency nu > 1,
// without the phi2(nu) h^(nu) factor. The kinks at x = 0 are carried by the
// closed-form pieces (1 - w)/2 e^{-a|x|} and c3/(2 pi a) x e^{-a|x|}, a = sqrt(nu);
// only the rapidly decaying remainder of the spectrum goes through the DFT.
std::vector<cplx> i3_profile(const Grid1D& x_grid, double nu, const FrequencyProfile& profile,
                             FKernelOptions opts = {});

// h^_*(tau) on the t-lattice of the grid.
struct BoundarySpectrum {
  SpaceTimeGrid grid;
  std::vector<cplx> h_star_hat;

  static BoundarySpectrum from(const HalfLineFunction& h, const SpaceTimeGrid& grid);
};

struct I3Spectra {
  Spectrum i31;
  Spectrum i32;
  Spectrum total;  // i31 - i32
};
I3Spectra i3_spectrum_parts(const BoundarySpectrum& h, const FrequencyProfile& profile, FKernelOptions opts = {});
Spectrum i3_spectrum(const BoundarySpectrum& h, const FrequencyProfile& profile, FKernelOptions opts = {});

}  // namespace halfline
