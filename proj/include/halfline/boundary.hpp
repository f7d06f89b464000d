#pragma once

#include <vector>

#include "halfline/grid.hpp"
#include "halfline/kernel.hpp"
#include "halfline/profile.hpp"

namespace halfline {

enum BoundaryComponent : unsigned { kI1 = 1u, kI2 = 2u, kI3 = 4u, kAllComponents = 7u };

struct BoundaryOptions {
  // The temporal-frequency integral is split smoothly at |nu| ~ split_centre with
  // weight chi(nu) = erfc((|nu| - split_centre) / split_width) / 2.
  // The chi part, which contains the sqrt(nu) branch point, is integrated with
  // Gauss rules in rho = sqrt|nu|; the rest is a lattice sum on a t-period
  // enlarged by time_padding, whose images are negligible because the
  // remaining integrand is smooth in nu.
  int time_padding = 4;
  double split_centre = 6.0;
  double split_width = 1.0;
  int near_refine = 1;
  unsigned components = kAllComponents;
  FKernelOptions kernel;
};

// Precomputed linear map h -> field for either the half-line boundary operator
// W_bdr (direct) or its whole-plane extension Phi_bdr = I1* + I2* + I3*.
// Building the plan is the expensive step; apply() is a few transforms and one
// dense product, so one plan serves many boundary data on the same grid.
class BoundaryPlan {
 public:
  static BoundaryPlan direct(const SpaceTimeGrid& grid, BoundaryOptions opts = {});
  static BoundaryPlan extension(const SpaceTimeGrid& grid, const FrequencyProfile& profile, BoundaryOptions opts = {});

  // h: samples on t = k dt, k >= 0, with dt the grid t-spacing.
  Field apply(const HalfLineFunction& h) const;

  const SpaceTimeGrid& grid() const { return grid_; }
  bool is_direct() const { return direct_; }
  std::size_t near_nodes() const { return near_nu_.size(); }

 private:
  BoundaryPlan(const SpaceTimeGrid& grid, const FrequencyProfile* profile, BoundaryOptions opts, bool direct);
  std::vector<cplx> mode_column(double nu) const;

  SpaceTimeGrid grid_;
  const FrequencyProfile* profile_ = nullptr;
  BoundaryOptions opts_;
  bool direct_ = false;
  std::size_t n_pad_ = 0;      // padded t-lattice length
  std::size_t k0_ = 0;         // index of t = 0
  std::size_t window_ = 0;     // nodes with t >= 0
  std::vector<cplx> far_;      // n_x x n_pad, already scaled by dt / period
  std::vector<double> near_nu_;
  std::vector<cplx> near_modes_;  // n_x x q, weights included
  std::vector<cplx> near_fwd_;    // q x window: e^{-i nu t_k} dt
  std::vector<cplx> near_bwd_;    // q x n_t:    e^{i nu t_j}
};

// Convenience wrappers building a one-off plan.
Field w_bdr_direct(const HalfLineFunction& h, const SpaceTimeGrid& grid, BoundaryOptions opts = {});
Field phi_bdr_apply(const HalfLineFunction& h, const SpaceTimeGrid& grid, const FrequencyProfile& profile,
                    BoundaryOptions opts = {});

// Profile covering every temporal frequency of the grid (and its padding).
FrequencyProfile profile_for_grid(const SpaceTimeGrid& grid, const CutoffConfig& cfg);

}  // namespace halfline
