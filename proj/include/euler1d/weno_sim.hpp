#ifndef EULER1D_WENO_SIM_HPP_
#define EULER1D_WENO_SIM_HPP_

#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "euler1d/model.hpp"

namespace euler1d {

struct SimConfig {
  GasModel gas;
  State left;
  State right;
  double x_left = -1.0;
  double x_right = 1.0;
  int n_cells = 200;
  double cfl = 0.5;
  double t_end = 0.3;
  void validate() const;  // throws std::invalid_argument
};

struct Field {
  std::vector<double> rho;
  std::vector<double> u;
  double x_left = 0.0;
  double dx = 0.0;
  double time = 0.0;
  int n() const { return static_cast<int>(rho.size()); }
  double x_center(int i) const { return x_left + (i + 0.5) * dx; }
};

//! Raised when a field turns non-finite or non-positive in density; the
//! simulator never clips, it reports where and when the run died.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(double time_in, int cell_in, const std::string& detail);
  double time;
  int cell;
};

//! Bookkeeping for one full RK step: the change of the discrete totals
//! (sum q dx) and the change predicted by the boundary fluxes alone.
//! Their mismatch, scaled by the absolute totals, is the conservation
//! defect of the interior flux differencing.
struct StepReport {
  double dt = 0.0;
  double drho_total = 0.0;
  double drho_boundary = 0.0;
  double du_total = 0.0;
  double du_boundary = 0.0;
  double defect_rho = 0.0;
  double defect_u = 0.0;
};

//! Piecewise-constant initial data with the jump between the two cells
//! adjacent to x = 0.
Field initialize(const SimConfig& cfg);

//! One SSP-RK3 step of the fifth-order WENO scheme with component-wise
//! global Lax-Friedrichs flux splitting and three extrapolation ghost
//! cells per side. dt = cfl dx / max|lambda|, capped by dt_limit.
StepReport step(Field& f, const SimConfig& cfg,
                double dt_limit = std::numeric_limits<double>::infinity());

//! Advance to cfg.t_end, landing exactly on each requested snapshot time
//! (sorted, within [0, t_end]); returns the captured fields. An empty
//! request list yields the final state only.
std::vector<Field> run(const SimConfig& cfg,
                       std::span<const double> snapshot_times = {});

//! Like run(), additionally reporting the worst per-step conservation
//! defect across the whole integration.
std::vector<Field> run_checked(const SimConfig& cfg,
                               std::span<const double> snapshot_times,
                               StepReport& worst);

struct Diagnostics {
  double total_rho = 0.0;  // sum rho dx
  double total_u = 0.0;    // sum u dx
  double max_rho = 0.0;
  double grad_max_x = 0.0;       // steepest density interface
  double shock_pos_left = 0.0;   // gradient maxima either side of the peak,
  double shock_pos_right = 0.0;  // refined to sub-cell position
  double shock_gap() const { return shock_pos_right - shock_pos_left; }
};

Diagnostics diagnostics(const Field& f);

}  // namespace euler1d

#endif  // EULER1D_WENO_SIM_HPP_
