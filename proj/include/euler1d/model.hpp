#ifndef EULER1D_MODEL_HPP_
#define EULER1D_MODEL_HPP_

#include <stdexcept>

namespace euler1d {

//! Thermodynamic closure p(rho) = ((gamma-1)/4) rho^(gamma-1).
//!
//! The characteristic analysis behind the wave-curve machinery needs
//! gamma in (1, 2); values up to 3 are accepted so that stiffer runs
//! (e.g. gamma = 2.5) remain available.
struct GasModel {
  double gamma;
  double theta;  // (gamma - 1) / 2

  explicit GasModel(double gamma_in)
      : gamma(gamma_in), theta((gamma_in - 1.0) / 2.0) {
    if (!(gamma > 1.0 && gamma < 3.0))
      throw std::domain_error("GasModel: gamma must lie in (1, 3)");
  }
};

//! A (density, velocity) pair. rho == 0 marks vacuum.
struct State {
  double rho;
  double u;
};

//! Flux of the conserved pair (rho, u): (rho u, u^2/2 + p(rho)).
struct FluxVector {
  double f_rho;
  double f_u;
};

struct Eigenvalues {
  double lambda1;
  double lambda2;
};

//! x^y for x >= 0, evaluated as exp(y ln x). Every fractional power in the
//! library goes through here so curve evaluations agree bitwise across
//! modules. For x == 0 requires y > 0 and returns 0.
double pow_pos(double base, double expo);

//! p(rho) = ((gamma-1)/4) rho^(gamma-1). Throws for rho < 0.
double pressure(const GasModel& g, double rho);

FluxVector flux(const GasModel& g, const State& s);

//! c(rho) = theta rho^theta, the offset between u and either eigenvalue.
double sound_speed(const GasModel& g, double rho);

//! lambda_{1,2} = u -+ c(rho). Requires rho > 0 (strict hyperbolicity).
Eigenvalues eigenvalues(const GasModel& g, const State& s);

}  // namespace euler1d

#endif  // EULER1D_MODEL_HPP_
