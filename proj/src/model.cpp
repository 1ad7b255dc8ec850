#include "euler1d/model.hpp"

#include <cmath>

namespace euler1d {

double pow_pos(double base, double expo) {
  if (base < 0.0) throw std::domain_error("pow_pos: negative base");
  if (base == 0.0) {
    if (expo <= 0.0) throw std::domain_error("pow_pos: 0^y with y <= 0");
    return 0.0;
  }
  return std::exp(expo * std::log(base));
}

double pressure(const GasModel& g, double rho) {
  if (rho < 0.0) throw std::domain_error("pressure: rho < 0");
  if (rho == 0.0) return 0.0;
  return 0.25 * (g.gamma - 1.0) * pow_pos(rho, g.gamma - 1.0);
}

FluxVector flux(const GasModel& g, const State& s) {
  return {s.rho * s.u, 0.5 * s.u * s.u + pressure(g, s.rho)};
}

double sound_speed(const GasModel& g, double rho) {
  if (rho < 0.0) throw std::domain_error("sound_speed: rho < 0");
  if (rho == 0.0) return 0.0;
  return g.theta * pow_pos(rho, g.theta);
}

Eigenvalues eigenvalues(const GasModel& g, const State& s) {
  if (!(s.rho > 0.0))
    throw std::domain_error("eigenvalues: rho must be positive");
  const double c = sound_speed(g, s.rho);
  return {s.u - c, s.u + c};
}

}  // namespace euler1d
