#include "euler1d/wave_curves.hpp"

#include <algorithm>
#include <cmath>

namespace euler1d {

const char* region_name(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::V: return "V";
  }
  return "?";
}

double shock_offset(const GasModel& g, double rho, double rho0) {
  if (rho < 0.0 || rho0 <= 0.0)
    throw std::domain_error("shock_offset: densities must be positive");
  if (std::abs(rho - rho0) < 1e-8 * rho0) return 0.0;
  const double dp = pow_pos(rho, g.gamma - 1.0) - pow_pos(rho0, g.gamma - 1.0);
  return std::sqrt(g.theta * dp * (rho - rho0) / (rho + rho0));
}

double curve_u(const CurveBranch& b, double rho) {
  if (rho < 0.0) throw std::domain_error("curve_u: rho < 0");
  const State& a = b.anchor;
  const GasModel& g = b.gas;
  const bool below = rho <= a.rho;
  switch (b.kind) {
    case WaveKind::R1:
      if (!below) throw std::domain_error("curve_u: R1 needs rho <= anchor");
      return a.u - (pow_pos(rho, g.theta) - pow_pos(a.rho, g.theta));
    case WaveKind::R2:
      if (rho < a.rho) throw std::domain_error("curve_u: R2 needs rho >= anchor");
      return a.u + (pow_pos(rho, g.theta) - pow_pos(a.rho, g.theta));
    case WaveKind::S1:
      if (rho < a.rho) throw std::domain_error("curve_u: S1 needs rho >= anchor");
      return a.u - shock_offset(g, rho, a.rho);
    case WaveKind::S2:
      if (!below) throw std::domain_error("curve_u: S2 needs rho <= anchor");
      return a.u - shock_offset(g, rho, a.rho);
  }
  throw std::domain_error("curve_u: bad branch kind");
}

double shock_speed(const GasModel& g, const State& l, const State& r) {
  const double drho = r.rho - l.rho;
  if (drho == 0.0)
    throw std::domain_error("shock_speed: equal densities (degenerate jump)");
  const double sigma = (r.rho * r.u - l.rho * l.u) / drho;
  const double lhs = sigma * (r.u - l.u);
  const double rhs = (0.5 * r.u * r.u + pressure(g, r.rho)) -
                     (0.5 * l.u * l.u + pressure(g, l.rho));
  // relative check on the jump scale, floored at the round-off level of
  // forming the flux difference
  const double floor_abs =
      1e-13 * (std::abs(0.5 * r.u * r.u + pressure(g, r.rho)) +
               std::abs(0.5 * l.u * l.u + pressure(g, l.rho)) + 1.0);
  const double tol = 1e-10 * std::max(std::abs(lhs), std::abs(rhs)) + floor_abs;
  if (std::abs(lhs - rhs) > tol)
    throw std::domain_error(
        "shock_speed: states do not satisfy the jump conditions");
  return sigma;
}

double forward1_u(const GasModel& g, const State& left, double rho) {
  if (rho <= left.rho)
    return left.u - (pow_pos(rho, g.theta) - pow_pos(left.rho, g.theta));
  return left.u - shock_offset(g, rho, left.rho);
}

double backward2_u(const GasModel& g, const State& right, double rho) {
  // mirror image (u -> -u) of the forward 1-curve through the reflected
  // right state; keeps the two composite curves bitwise consistent
  return -forward1_u(g, State{right.rho, -right.u}, rho);
}

Region classify(const GasModel& g, const State& l, const State& r) {
  if (!(l.rho > 0.0) || !(r.rho > 0.0))
    throw std::domain_error("classify: densities must be positive");
  const double bl = pow_pos(l.rho, g.theta);
  const double br = pow_pos(r.rho, g.theta);
  if (r.u - l.u >= bl + br) return Region::V;
  // star density vs. the two data densities, read off the monotone
  // composite curves without solving
  const bool one_is_shock = l.u >= backward2_u(g, r, l.rho);   // rho* >= rho-
  const bool two_is_shock = r.u <= forward1_u(g, l, r.rho);    // rho* >= rho+
  if (one_is_shock && two_is_shock) return Region::IV;
  if (one_is_shock) return Region::II;
  if (two_is_shock) return Region::III;
  return Region::I;
}

}  // namespace euler1d
