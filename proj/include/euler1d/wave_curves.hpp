#ifndef EULER1D_WAVE_CURVES_HPP_
#define EULER1D_WAVE_CURVES_HPP_

#include "euler1d/model.hpp"

namespace euler1d {

enum class WaveKind { R1, R2, S1, S2 };

//! One elementary-wave curve through a fixed anchor (left) state.
struct CurveBranch {
  WaveKind kind;
  State anchor;
  GasModel gas;
};

//! Phase-plane position of the right state relative to the curves through
//! the left state. Each tag names a wave sequence:
//!   I: R1+R2   II: S1+R2   III: R1+S2   IV: S1+S2   V: R1+Vac+R2
enum class Region { I, II, III, IV, V };

const char* region_name(Region r);

//! Magnitude of the shock-curve velocity offset,
//!   sqrt(theta (rho^(g-1) - rho0^(g-1)) (rho - rho0) / (rho + rho0)),
//! symmetric under exchange of rho and rho0. Written so that neither
//! rho^2 nor a 0/0 at rho == rho0 is ever formed; within 1e-8 relative of
//! the anchor the removable singularity is replaced by its limit value 0.
double shock_offset(const GasModel& g, double rho, double rho0);

//! u along the branch at density rho. Branch domains:
//!   R1: 0 <= rho <= anchor.rho     R2: rho >= anchor.rho
//!   S1: rho >= anchor.rho          S2: 0 <= rho <= anchor.rho
//! Throws std::domain_error outside the domain.
double curve_u(const CurveBranch& b, double rho);

//! sigma = [rho u] / [rho]. Throws for equal densities, and when the pair
//! fails the second jump condition beyond 1e-10 relative (with a
//! machine-precision absolute floor for vanishing jumps).
double shock_speed(const GasModel& g, const State& left, const State& right);

//! Composite forward 1-wave curve through `left`: R1 for rho <= left.rho,
//! S1 above. Strictly decreasing in rho.
double forward1_u(const GasModel& g, const State& left, double rho);

//! Backward 2-wave curve through `right`: the set of states connected to
//! `right` on the right by a 2-wave. Strictly increasing in rho.
double backward2_u(const GasModel& g, const State& right, double rho);

//! Region of (right) relative to the curves through (left). Boundary ties
//! resolve toward the shock side (zero-strength wave); the vacuum boundary
//! u+ - u- >= rho-^theta + rho+^theta resolves to V.
Region classify(const GasModel& g, const State& left, const State& right);

}  // namespace euler1d

#endif  // EULER1D_WAVE_CURVES_HPP_
