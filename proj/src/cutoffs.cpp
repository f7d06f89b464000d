#include "halfline/cutoffs.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <stdexcept>

namespace halfline {

void CutoffConfig::validate() const {
  if (!(delta > 0.0 && delta <= 0.5)) throw std::invalid_argument("CutoffConfig: delta must lie in (0, 1/2]");
  if (!(ramp_width > 0.0 && ramp_width <= 1.0)) {
    throw std::invalid_argument("CutoffConfig: ramp_width must lie in (0, 1]");
  }
}

double bracket(double x) { return std::sqrt(1.0 + x * x); }

namespace {

double bump(double t) { return t <= 0.0 || t >= 1.0 ? 0.0 : std::exp(-1.0 / (t * (1.0 - t))); }

// Integral of the bump over [0, x], x <= 1/2. The mass sits near the right end,
// so the panels are graded towards x.
double bump_mass(double x) {
  using G = boost::math::quadrature::gauss<double, 32>;
  const double breaks[] = {0.0, 0.125 * x, 0.25 * x, 0.5 * x, 0.75 * x, x};
  double sum = 0.0;
  for (int p = 0; p < 5; ++p) sum += G::integrate(bump, breaks[p], breaks[p + 1]);
  return sum;
}

}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  // Normalized integral of exp(-1/(t(1-t))); the total is taken as twice the
  // half mass so that S(x) + S(1-x) = 1 holds to rounding.
  static const double half = bump_mass(0.5);
  if (x <= 0.5) return 0.5 * bump_mass(x) / half;
  return 1.0 - 0.5 * bump_mass(1.0 - x) / half;
}

double time_cutoff(double t) { return smooth_step(2.0 - std::abs(t)); }

double psi(double x, const CutoffConfig& cfg) { return 1.0 - smooth_step(x / cfg.ramp_width); }

double phi2(double mu) { return smooth_step((mu - 1.1) / 0.8); }

double phi1(double mu) { return smooth_step((mu + 0.9) / 0.8) * (1.0 - phi2(mu)); }

double phi3(double x) { return x * smooth_step(x + 1.0); }

double cutoff_eval(Cutoff kind, double x, const CutoffConfig& cfg) {
  switch (kind) {
    case Cutoff::theta: return time_cutoff(x);
    case Cutoff::psi: return psi(x, cfg);
    case Cutoff::phi1: return phi1(x);
    case Cutoff::phi2: return phi2(x);
    case Cutoff::phi3: return phi3(x);
  }
  throw std::invalid_argument("cutoff_eval: unknown cutoff");
}

double boundary_window(double t) { return smooth_step((1.75 - t) / 0.5); }

}  // namespace halfline
