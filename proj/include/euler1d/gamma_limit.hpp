#ifndef EULER1D_GAMMA_LIMIT_HPP_
#define EULER1D_GAMMA_LIMIT_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "euler1d/model.hpp"

namespace euler1d {

//! Two-shock intermediate state in log-density form. For gamma close to 1
//! the star density itself overflows double precision already around
//! gamma - 1 ~ 1e-3; everything here is assembled from L = ln(rho*)
//! without ever forming rho*.
struct StarLog {
  double gamma;
  double L;          // ln(rho*)
  double a_gamma;    // ((gamma-1)/2) e^{(gamma-1) L} = theta rho*^(gamma-1)
  double u_star;
  double sigma1;
  double sigma2;
  double mass_rate;  // rho* (sigma2 - sigma1), via the jump-condition identity
};

//! One sweep entry: the star data plus distances from the limit values
//! sigma = (u- + u+)/2, a = (u- - u+)^2/4 and sigma [rho] - [rho u].
struct SweepRecord {
  double gamma = 0.0;
  bool ok = false;
  std::string error;
  StarLog star{};
  double dev_u = 0.0;
  double dev_sigma1 = 0.0;
  double dev_sigma2 = 0.0;
  double dev_a = 0.0;
  double dev_mass = 0.0;
};

//! Overflow-free two-shock solve. Requires u+ < u- and region IV data;
//! bisects G(L) = T-(L) + T+(L) = u- - u+ on L to 1e-12 relative.
StarLog solve_star_log(const GasModel& g, const State& left,
                       const State& right);

//! solve_star_log over a list of gammas; per-gamma failures are recorded
//! in the corresponding record and the sweep continues.
std::vector<SweepRecord> sweep(std::span<const double> gammas,
                               const State& left, const State& right);

//! Largest grid gamma for which the two-shock inequality holds (all of the
//! grid when rho+ == rho-). Returns nullopt when no grid point qualifies.
std::optional<double> region_iv_threshold(const State& left,
                                          const State& right,
                                          std::span<const double> gamma_grid);

}  // namespace euler1d

#endif  // EULER1D_GAMMA_LIMIT_HPP_
