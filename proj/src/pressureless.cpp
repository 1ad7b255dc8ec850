#include "euler1d/pressureless.hpp"

#include <algorithm>
#include <cmath>

namespace euler1d {

DeltaWaveSolution solve_delta(const State& l, const State& r) {
  if (!(l.rho > 0.0) || !(r.rho > 0.0))
    throw std::domain_error("solve_delta: densities must be positive");
  if (!(r.u < l.u))
    throw std::domain_error(
        "solve_delta: requires u+ < u- (no delta wave otherwise)");
  const double sigma = 0.5 * (l.u + r.u);
  const double rate = 0.5 * (l.rho + r.rho) * (l.u - r.u);
  return {l, r, sigma, rate, sigma};
}

std::array<double, 3> grh_residual(const DeltaWaveSolution& d, double t) {
  if (t < 0.0) throw std::domain_error("grh_residual: t must be >= 0");
  const double drho = d.right.rho - d.left.rho;
  const double drhou = d.right.rho * d.right.u - d.left.rho * d.left.u;
  const double du = d.right.u - d.left.u;
  const double du2 = 0.5 * (d.right.u * d.right.u - d.left.u * d.left.u);
  const double r_x = d.support_speed - d.sigma;
  const double r_w = d.weight_rate - (d.sigma * drho - drhou);
  const double r_u = d.sigma * du - du2;
  return {r_x, r_w, r_u};
}

WeightedDirac dirac_part(const DeltaWaveSolution& d) {
  const double rate = d.weight_rate;
  return {d.support_speed, [rate](double t) { return rate * t; }};
}

double pair(const WeightedDirac& d, const TestFunction2D& phi,
            const QuadratureConfig& quad) {
  if (!std::isfinite(phi.t_lo) || !std::isfinite(phi.t_hi) ||
      !std::isfinite(phi.x_lo) || !std::isfinite(phi.x_hi))
    throw std::domain_error("pair: test function support must be finite");
  const double lo = std::max(phi.t_lo, 0.0);
  const double hi = phi.t_hi;
  if (!(hi > lo)) return 0.0;
  auto integrand = [&](double t) { return d.weight(t) * phi.value(t, d.speed * t); };
  // restrict to times at which the support line meets the x-support
  std::array<double, 2> brk{};
  std::size_t nbrk = 0;
  if (d.speed != 0.0) {
    brk[nbrk++] = phi.x_lo / d.speed;
    brk[nbrk++] = phi.x_hi / d.speed;
  }
  return integrate(integrand, lo, hi, {brk.data(), nbrk}, quad).value;
}

}  // namespace euler1d
