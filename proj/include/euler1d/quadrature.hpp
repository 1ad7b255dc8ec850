#ifndef EULER1D_QUADRATURE_HPP_
#define EULER1D_QUADRATURE_HPP_

#include <functional>
#include <span>

namespace euler1d {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  unsigned max_depth = 15;
};

struct QuadratureResult {
  double value;
  double error_estimate;
};

//! Adaptive Gauss-Kronrod integration of f over [a, b]. Interior
//! breakpoints split the range so that no panel straddles a registered
//! discontinuity or kink; breakpoints outside (a, b) are ignored.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, std::span<const double> breakpoints = {},
                           const QuadratureConfig& cfg = {});

//! Mean value of f over [a, b] by a fixed Gauss rule; remains accurate as
//! b - a -> 0 (returns f at the midpoint in the collapsed limit).
double interval_mean(const std::function<double(double)>& f, double a,
                     double b);

}  // namespace euler1d

#endif  // EULER1D_QUADRATURE_HPP_
