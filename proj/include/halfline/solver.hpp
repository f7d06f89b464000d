#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "halfline/boundary.hpp"
#include "halfline/cutoffs.hpp"
#include "halfline/norms.hpp"
#include "halfline/propagator.hpp"

namespace halfline {

// Data of i u_t + u_xx + u^2 = 0 on x, t > 0 with u(x,0) = phi, u(0,t) = h.
struct IBVPData {
  HalfLineFunction phi;  // samples on x = j dx
  HalfLineFunction h;    // samples on t = k dt
  SobolevParams params;
  double lambda = 1.0;   // scaling already applied to phi and h
};

// Samples lambda^2 phi(lambda x) and lambda^2 h(lambda^2 t) on the nodes x, t >= 0 of the grid.
IBVPData sample_data(const std::function<cplx(double)>& phi, const std::function<cplx(double)>& h,
                     const SpaceTimeGrid& grid, const SobolevParams& params, double lambda = 1.0);

// phi^lambda(x) = lambda^2 phi(lambda x), h^lambda(t) = lambda^2 h(lambda^2 t) on the original
// sample spacing. Nodes lambda x_j between samples are filled by cubic interpolation.
IBVPData rescale(const IBVPData& data, double lambda);

// Same scaling by an exact change of sample spacing (x -> x / lambda, t -> t / lambda^2).
HalfLineFunction rescale_exact(const HalfLineFunction& f, double lambda, double time_power);

// Cubic interpolation of f at arbitrary x >= 0 (0 beyond the last sample).
cplx interpolate(const HalfLineFunction& f, double x);

struct SolveOptions {
  double tol = 1e-10;
  std::size_t max_iter = 20;
  double eps0 = 1e-2;   // small-data threshold on ||phi||_{H^s} + ||h||_{H^{(2s+1)/4}}
  bool linear = false;  // drop the nonlinearity (diagnostic mode)
  std::optional<Field> initial;  // u_0, zero when absent
  CutoffConfig cutoff;
  BoundaryOptions boundary;
};

struct SolveResult {
  Field u;
  std::vector<double> iterate_deltas;  // y-norm distances between successive iterates
  std::vector<double> iterate_norms;   // y-norms of the iterates
  bool converged = false;
  double residual_norm = 0.0;
  double data_norm = 0.0;
  double boundary_error = 0.0;  // sup over t in (0, 1) of |u(0,t) - h(t)| / sup |h|
  double initial_error = 0.0;   // ||u(., 0) - phi||_{H^s(R+)} / ||phi||_{H^s(R+)}
};

// ||phi||_{H^s(R+)} + ||h||_{H^{(2s+1)/4}(R+)} with both norms taken through the zero extension.
double data_norm(const IBVPData& data, const SpaceTimeGrid& grid);

// Gamma(u) = theta W_R(phi*) + theta Phi_bdr(h - p) + theta (D(i u^2) - Phi_bdr(q)),
// D the Duhamel operator with i v_t + v_xx = i f, so the source i u^2 gives
// i v_t + v_xx = -u^2. p = W_R(phi*)(0, .), q = D(i u^2)(0, .). The boundary data
// h - p and q are multiplied by boundary_window before the extension operator.
// The plan and the u-independent part are built once.
class GammaMap {
 public:
  GammaMap(const IBVPData& data, const SpaceTimeGrid& grid, const CutoffConfig& cfg = {}, BoundaryOptions opts = {});

  Field operator()(const Field& u, bool nonlinear = true) const;
  const Field& linear_part() const { return linear_; }
  const SpaceTimeGrid& grid() const { return grid_; }

  // theta D(i u^2) - theta Phi_bdr(q), the nonlinear part of Gamma.
  Field nonlinear_part(const Field& u) const;

 private:
  SpaceTimeGrid grid_;
  FrequencyProfile profile_;
  std::optional<BoundaryPlan> plan_;
  Field linear_;
  std::vector<double> theta_;
};

Field gamma_map(const Field& u, const IBVPData& data, const SpaceTimeGrid& grid, const CutoffConfig& cfg = {});

// u^2 with the 2/3 rule: u and the product are both truncated to |m| <= n/3 in x and t.
Field dealiased_square(const Field& u);

// Picard iteration from u_0 (zero by default). Throws std::invalid_argument when the
// data exceed opts.eps0; returns converged = false when max_iter is reached.
SolveResult picard_solve(const IBVPData& data, const SpaceTimeGrid& grid, const SolveOptions& opts = {});

// Discrete L^2 norm of i u_t + u_xx + u^2 (or i u_t + u_xx when linear) with centred
// second-order differences over nodes with dx <= x <= x_max - dx and dt <= t <= 1 - dt.
double residual_check(const Field& u, bool linear = false);

}  // namespace halfline
