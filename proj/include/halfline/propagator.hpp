#pragma once

#include "halfline/grid.hpp"

namespace halfline {

struct InitialData {
  HalfLineFunction phi;
  LineFunction extension;  // phi_* on the x-grid

  static InitialData on_grid(const HalfLineFunction& phi, const Grid1D& x_grid);
};

// Free Schrodinger evolution u^(xi, t) = e^{-i xi^2 t} phi^(xi) on every t node.
// Sets Field::under_resolved when the top 10% of x-bins carry more than 1e-8 of the peak.
Field w_r_apply(const LineFunction& phi_star, const SpaceTimeGrid& grid);

// v(t) = int_0^t W_R(t - t') f(t') dt' (backwards for t < 0), trapezoidal in t'.
// v solves i v_t + v_xx = i f with v(., 0) = 0.
Field duhamel_apply(const Field& f);

// p(t) = W_R(phi_*)(0, t) on the nodes t >= 0 of t_grid.
HalfLineFunction trace_p(const InitialData& phi, const Grid1D& t_grid);
// q(t) = duhamel_apply(f)(0, t) on the nodes t >= 0.
HalfLineFunction trace_q(const Field& f, const Grid1D& t_grid);

// Column x = 0 restricted to t >= 0.
HalfLineFunction boundary_column(const Field& u);

}  // namespace halfline
