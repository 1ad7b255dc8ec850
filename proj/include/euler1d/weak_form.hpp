#ifndef EULER1D_WEAK_FORM_HPP_
#define EULER1D_WEAK_FORM_HPP_

#include <span>
#include <vector>

#include "euler1d/exact_riemann.hpp"
#include "euler1d/gamma_limit.hpp"
#include "euler1d/quadrature.hpp"
#include "euler1d/test_functions.hpp"

namespace euler1d {

//! Values of the individual integral terms of a weak identity together
//! with their defect. `relative()` is the defect measured against the
//! largest term.
struct PairingReport {
  std::vector<double> terms;
  double residual = 0.0;
  double scale = 0.0;
  double quad_error = 0.0;
  double relative() const;
};

//! Defect of the self-similar mass identity
//!   -int rho (u - xi) phi' dxi + int rho phi dxi = 0
//! for an exact fan with representable star density. Quadrature panels
//! never straddle a wave edge.
PairingReport residual_mass(const WaveFan& fan, const TestFunction1D& phi,
                            const QuadratureConfig& cfg = {});

//! Defect of the self-similar velocity identity
//!   int u phi dxi - int (u/2 - xi) u phi' dxi
//!     - ((gamma-1)/4) int rho^(gamma-1) phi' dxi = 0.
PairingReport residual_velocity(const WaveFan& fan, const TestFunction1D& phi,
                                const QuadratureConfig& cfg = {});

struct DeltaPairingRow {
  double gamma;
  double density_pairing;   // I(gamma) = int (rho_gamma - rho_0) phi dxi
  double density_target;    // (sigma [rho] - [rho u]) phi(sigma)
  double velocity_pairing;  // int (u_gamma - u_0) phi dxi
};

//! Convergence table of the concentration pairings for a list of gammas
//! (all must be region IV with u+ < u-). The star-interval mass always
//! enters through StarLog::mass_rate, so the same code path serves
//! moderate and near-limit gammas without overflow.
std::vector<DeltaPairingRow> delta_pairing_limit(
    const State& left, const State& right, std::span<const double> gammas,
    const TestFunction1D& phi, const QuadratureConfig& cfg = {});

//! (t, x)-form of the density pairing,
//!   int_0^inf t ( int (rho_gamma(xi) - rho_0(xi)) phi(t, xi t) dxi ) dt,
//! which reduces to the xi form for separable test functions. Requires
//! phi supported in t > 0.
double pairing_tx_density(const State& left, const State& right, double gamma,
                          const TestFunction2D& phi,
                          const QuadratureConfig& cfg = {});

}  // namespace euler1d

#endif  // EULER1D_WEAK_FORM_HPP_
