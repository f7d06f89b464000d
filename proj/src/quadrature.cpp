#include "halfline/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace halfline {

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol,
                          const std::string& what, double abs_floor) {
  if (a == b) return 0.0;
  double err = 0.0, l1 = 0.0;
  const double val =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 18, rel_tol, &err, &l1);
  if (!std::isfinite(val)) throw NumericalError(what + ": non-finite quadrature result");
  const double scale = std::max({std::abs(val), abs_floor, std::numeric_limits<double>::min()});
  // Boost reports an absolute error estimate; allow a small multiple of the request
  // because the estimate is pessimistic for smooth integrands.
  // Deep recursion can inflate the estimate with accumulated roundoff on sharply peaked
  // panels. Fall back to comparing against an independent two-half evaluation.
  if (err > 10.0 * rel_tol * scale + 1e-300) {
    const double m = 0.5 * (a + b);
    double e1 = 0.0, e2 = 0.0;
    const double halves = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, m, 10, rel_tol, &e1) +
                          boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, m, b, 10, rel_tol, &e2);
    err = std::abs(halves - val);
  }
  if (err > 10.0 * rel_tol * scale + 1e-300) {
    std::ostringstream os;
    os << what << ": quadrature did not converge on [" << a << ", " << b << "] (error estimate " << err
       << ", value " << val << ")";
    throw NumericalError(os.str());
  }
  return val;
}

double integrate_to_infinity(const std::function<double(double)>& f, double a, double decay_power,
                             double rel_tol, const std::string& what) {
  if (!(decay_power > 1.0)) throw NumericalError(what + ": integrand does not decay fast enough");
  // Cut at X where X^{1-p} is negligible, capped to stay representable.
  const double y_max = std::min(700.0, std::log(1e16) / (decay_power - 1.0) + 5.0);
  auto g = [&](double y) {
    const double ey = std::exp(y);
    return f(a + ey - 1.0) * ey;
  };
  double sum = 0.0;
  // Split the mapped interval so each piece has O(1) variation.
  const int pieces = static_cast<int>(std::ceil(y_max / 8.0));
  double floor = 0.0;
  for (int k = 0; k < pieces; ++k) {
    const double y0 = y_max * k / pieces, y1 = y_max * (k + 1) / pieces;
    const double part = integrate_adaptive(g, y0, y1, rel_tol, what, floor);
    sum += part;
    floor = std::max(floor, std::abs(sum));
  }
  // Remainder beyond X = a + e^{y_max} - 1, assuming f(x) ~ f(X) (X/x)^p there.
  const double x_end = a + std::exp(y_max) - 1.0;
  sum += f(x_end) * x_end / (decay_power - 1.0);
  return sum;
}

void QuadratureRule::append(const QuadratureRule& other) {
  nodes.insert(nodes.end(), other.nodes.begin(), other.nodes.end());
  weights.insert(weights.end(), other.weights.begin(), other.weights.end());
}

namespace {

template <int N>
void add_panel(QuadratureRule& rule, double a, double b) {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& x = G::abscissa();
  const auto& w = G::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      rule.nodes.push_back(c);
      rule.weights.push_back(h * w[i]);
      continue;
    }
    rule.nodes.push_back(c - h * x[i]);
    rule.weights.push_back(h * w[i]);
    rule.nodes.push_back(c + h * x[i]);
    rule.weights.push_back(h * w[i]);
  }
}

}  // namespace

QuadratureRule composite_gauss(const std::vector<double>& breaks, int order, int refine) {
  if (refine < 1) throw std::invalid_argument("composite_gauss: refine must be >= 1");
  QuadratureRule rule;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (!(b > a)) continue;
    for (int r = 0; r < refine; ++r) {
      const double p0 = a + (b - a) * r / refine, p1 = a + (b - a) * (r + 1) / refine;
      if (order == 16) {
        add_panel<16>(rule, p0, p1);
      } else if (order == 32) {
        add_panel<32>(rule, p0, p1);
      } else {
        throw std::invalid_argument("composite_gauss: order must be 16 or 32");
      }
    }
  }
  return rule;
}

}  // namespace halfline
