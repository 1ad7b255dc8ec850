#ifndef EULER1D_PRESSURELESS_HPP_
#define EULER1D_PRESSURELESS_HPP_

#include <array>
#include <functional>

#include "euler1d/model.hpp"
#include "euler1d/quadrature.hpp"
#include "euler1d/test_functions.hpp"

namespace euler1d {

//! Measure-valued solution of the pressureless system for u+ < u-: the
//! background (rho0, u0) jumps across the line x = sigma t, which carries
//! a Dirac mass of weight w(t) = weight_rate * t.
struct DeltaWaveSolution {
  State left;
  State right;
  double sigma;          // (u- + u+) / 2
  double weight_rate;    // dw/dt = sigma [rho] - [rho u] > 0
  double support_speed;  // slope of the support line, equals sigma

  double weight(double t) const { return weight_rate * t; }
};

//! Weighted Dirac measure on the line {(t, speed t) : t >= 0}; pairing with
//! a test function integrates w(t) phi(t, speed t) over t.
struct WeightedDirac {
  double speed;
  std::function<double(double)> weight;
};

//! Closed-form delta wave for u+ < u-. The returned triple satisfies the
//! generalized jump ODEs identically; throws std::domain_error when
//! u+ >= u- (no mass concentration in that case).
DeltaWaveSolution solve_delta(const State& left, const State& right);

//! Defects of the three generalized jump relations at time t:
//!   r_x: support slope minus sigma
//!   r_w: weight_rate minus (sigma [rho] - [rho u])
//!   r_u: sigma [u] - [u^2/2]
std::array<double, 3> grh_residual(const DeltaWaveSolution& d, double t);

WeightedDirac dirac_part(const DeltaWaveSolution& d);

//! <w delta_S, phi> = integral of w(t) phi(t, speed t) over the support of
//! phi intersected with t >= 0.
double pair(const WeightedDirac& d, const TestFunction2D& phi,
            const QuadratureConfig& quad = {});

}  // namespace euler1d

#endif  // EULER1D_PRESSURELESS_HPP_
