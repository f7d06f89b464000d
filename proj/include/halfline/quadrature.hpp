#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace halfline {

// Raised when a numerical routine cannot meet its accuracy target.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod (7/15) on a finite interval. Throws NumericalError
// when the error estimate stays above rel_tol * max(|result|, abs_floor).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol,
                          const std::string& what, double abs_floor = 0.0);

// Integral over [a, +inf) of an integrand decaying at least like |x|^{-p}, p > 1.
// The tail is mapped with x = a + e^y - 1 and closed with the leading power-law remainder.
double integrate_to_infinity(const std::function<double(double)>& f, double a, double decay_power,
                             double rel_tol, const std::string& what);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  void append(const QuadratureRule& other);
  std::size_t size() const { return nodes.size(); }
};

// Composite Gauss-Legendre rule with `order` points per panel (16 or 32) on the
// panels delimited by `breaks` (increasing), each split into `refine` equal parts.
QuadratureRule composite_gauss(const std::vector<double>& breaks, int order, int refine = 1);

}  // namespace halfline
