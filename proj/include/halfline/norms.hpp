#pragma once

#include "halfline/grid.hpp"

namespace halfline {

// Regularity triple. The solver regime is -3/4 < s < 0, max{3/8, 1/8 - s/2} < b < 1/2
// and 1/2 < sigma <= sigma0(s, b).
struct SobolevParams {
  double s = -0.5;
  double b = 0.45;
  double sigma = 0.51;

  // Upper limit for sigma coming from the bilinear estimate.
  double sigma0() const;
  // Throws std::invalid_argument naming the violated hypothesis.
  void validate_solver_regime() const;
};

// Extension of h by zero to the whole line, sampled on `grid`. Requires the grid
// spacing to equal h.spacing and x = 0 to be a node.
LineFunction zero_extend(const HalfLineFunction& h, const Grid1D& grid);

double hs_norm(const LineFunction& f, double s);
// ||h||_{H^s(R+)} computed through the zero extension on `grid`.
double half_line_norm(const HalfLineFunction& h, double s, const Grid1D& grid);

// || <xi>^s <tau + xi^2>^b u^ ||_{L^2}; s = b = 0 gives the space-time L^2 norm.
double xsb_norm(const Field& u, double s, double b);
double xsb_norm(const Spectrum& u, double s, double b);
// || <tau>^{s/2} <tau + xi^2>^b u^ ||_{L^2}
double zsb_norm(const Field& u, double s, double b);
double zsb_norm(const Spectrum& u, double s, double b);
// sup over time slices of ||u(., t)||_{H^s}
double sup_slice_norm(const Field& u, double s);
// (sup_t ||u(t)||_{H^s}^2 + ||u||_{X^{s,b}}^2)^{1/2}
double y_norm(const Field& u, double s, double b);

// Fraction of spectral energy in bins beyond `fraction` of the Nyquist
// frequency in either direction. Callers warn when this is not negligible.
double high_frequency_fraction(const Spectrum& u, double fraction = 0.8);

}  // namespace halfline
