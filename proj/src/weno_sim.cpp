#include "euler1d/weno_sim.hpp"

#include <algorithm>
#include <cmath>

namespace euler1d {
namespace {

constexpr int kGhost = 3;
constexpr double kWenoEps = 1e-6;

//! Fifth-order WENO reconstruction at the right edge of the center cell
//! from the five cell values v_{i-2} .. v_{i+2}.
inline double weno5_edge(double vm2, double vm1, double v0, double vp1,
                         double vp2) {
  const double b0 = (13.0 / 12.0) * (v0 - 2.0 * vp1 + vp2) * (v0 - 2.0 * vp1 + vp2) +
                    0.25 * (3.0 * v0 - 4.0 * vp1 + vp2) * (3.0 * v0 - 4.0 * vp1 + vp2);
  const double b1 = (13.0 / 12.0) * (vm1 - 2.0 * v0 + vp1) * (vm1 - 2.0 * v0 + vp1) +
                    0.25 * (vm1 - vp1) * (vm1 - vp1);
  const double b2 = (13.0 / 12.0) * (vm2 - 2.0 * vm1 + v0) * (vm2 - 2.0 * vm1 + v0) +
                    0.25 * (vm2 - 4.0 * vm1 + 3.0 * v0) * (vm2 - 4.0 * vm1 + 3.0 * v0);
  const double a0 = (3.0 / 10.0) / ((kWenoEps + b0) * (kWenoEps + b0));
  const double a1 = (6.0 / 10.0) / ((kWenoEps + b1) * (kWenoEps + b1));
  const double a2 = (1.0 / 10.0) / ((kWenoEps + b2) * (kWenoEps + b2));
  const double q0 = 2.0 * v0 + 5.0 * vp1 - vp2;
  const double q1 = -vm1 + 5.0 * v0 + 2.0 * vp1;
  const double q2 = 2.0 * vm2 - 7.0 * vm1 + 11.0 * v0;
  return (a0 * q0 + a1 * q1 + a2 * q2) / (6.0 * (a0 + a1 + a2));
}

struct Rhs {
  std::vector<double> d_rho, d_u;
  double f_left_rho = 0.0, f_left_u = 0.0;
  double f_right_rho = 0.0, f_right_u = 0.0;
};

void check_field(const std::vector<double>& rho, const std::vector<double>& u,
                 double tnow) {
  const int n = static_cast<int>(rho.size());
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(rho[i]) || !std::isfinite(u[i]))
      throw BlowupError(tnow, i, "non-finite value");
    if (rho[i] <= 0.0) throw BlowupError(tnow, i, "non-positive density");
  }
}

//! Spatial operator L(U) = -d/dx fhat, with component-wise global
//! Lax-Friedrichs splitting F± = (F ± alpha U)/2 and zero-order
//! extrapolation ghosts.
void compute_rhs(const GasModel& g, const std::vector<double>& rho,
                 const std::vector<double>& u, double dx, double tnow,
                 Rhs& out) {
  const int n = static_cast<int>(rho.size());
  check_field(rho, u, tnow);
  const int np = n + 2 * kGhost;
  std::vector<double> pr(np), pu(np);
  for (int j = 0; j < np; ++j) {
    const int i = std::clamp(j - kGhost, 0, n - 1);
    pr[j] = rho[i];
    pu[j] = u[i];
  }

  double alpha = 0.0;
  for (int j = 0; j < np; ++j)
    alpha = std::max(alpha, std::abs(pu[j]) + sound_speed(g, pr[j]));

  std::vector<double> fp_r(np), fp_u(np), fm_r(np), fm_u(np);
  for (int j = 0; j < np; ++j) {
    const double fr = pr[j] * pu[j];
    const double fu = 0.5 * pu[j] * pu[j] + pressure(g, pr[j]);
    fp_r[j] = 0.5 * (fr + alpha * pr[j]);
    fm_r[j] = 0.5 * (fr - alpha * pr[j]);
    fp_u[j] = 0.5 * (fu + alpha * pu[j]);
    fm_u[j] = 0.5 * (fu - alpha * pu[j]);
  }

  // interface k sits at the left edge of interior cell k, k = 0..n
  std::vector<double> fh_r(n + 1), fh_u(n + 1);
  for (int k = 0; k <= n; ++k) {
    fh_r[k] = weno5_edge(fp_r[k], fp_r[k + 1], fp_r[k + 2], fp_r[k + 3],
                         fp_r[k + 4]) +
              weno5_edge(fm_r[k + 5], fm_r[k + 4], fm_r[k + 3], fm_r[k + 2],
                         fm_r[k + 1]);
    fh_u[k] = weno5_edge(fp_u[k], fp_u[k + 1], fp_u[k + 2], fp_u[k + 3],
                         fp_u[k + 4]) +
              weno5_edge(fm_u[k + 5], fm_u[k + 4], fm_u[k + 3], fm_u[k + 2],
                         fm_u[k + 1]);
  }

  out.d_rho.resize(n);
  out.d_u.resize(n);
  const double inv_dx = 1.0 / dx;
  for (int i = 0; i < n; ++i) {
    out.d_rho[i] = -(fh_r[i + 1] - fh_r[i]) * inv_dx;
    out.d_u[i] = -(fh_u[i + 1] - fh_u[i]) * inv_dx;
  }
  out.f_left_rho = fh_r[0];
  out.f_left_u = fh_u[0];
  out.f_right_rho = fh_r[n];
  out.f_right_u = fh_u[n];
}

double max_char_speed(const GasModel& g, const Field& f) {
  double alpha = 0.0;
  for (int i = 0; i < f.n(); ++i)
    alpha = std::max(alpha, std::abs(f.u[i]) + sound_speed(g, f.rho[i]));
  return alpha;
}

double total(const std::vector<double>& q, double dx) {
  double s = 0.0;
  for (double v : q) s += v;
  return s * dx;
}

double total_abs(const std::vector<double>& q, double dx) {
  double s = 0.0;
  for (double v : q) s += std::abs(v);
  return s * dx;
}

}  // namespace

BlowupError::BlowupError(double time_in, int cell_in,
                         const std::string& detail)
    : std::runtime_error("blow-up at t = " + std::to_string(time_in) +
                         ", cell " + std::to_string(cell_in) + ": " + detail),
      time(time_in),
      cell(cell_in) {}

void SimConfig::validate() const {
  if (!(x_left < 0.0 && 0.0 < x_right))
    throw std::invalid_argument("SimConfig: domain must contain x = 0");
  if (n_cells < 20) throw std::invalid_argument("SimConfig: need >= 20 cells");
  if (!(cfl > 0.0 && cfl <= 0.6))
    throw std::invalid_argument("SimConfig: CFL must lie in (0, 0.6]");
  if (!(t_end >= 0.0) || !std::isfinite(t_end))
    throw std::invalid_argument("SimConfig: bad end time");
  if (!(left.rho > 0.0) || !(right.rho > 0.0))
    throw std::invalid_argument("SimConfig: data densities must be positive");
  if (!std::isfinite(left.u) || !std::isfinite(right.u))
    throw std::invalid_argument("SimConfig: data velocities must be finite");
}

Field initialize(const SimConfig& cfg) {
  cfg.validate();
  Field f;
  f.x_left = cfg.x_left;
  f.dx = (cfg.x_right - cfg.x_left) / cfg.n_cells;
  f.time = 0.0;
  f.rho.resize(cfg.n_cells);
  f.u.resize(cfg.n_cells);
  for (int i = 0; i < cfg.n_cells; ++i) {
    const State& s = f.x_center(i) < 0.0 ? cfg.left : cfg.right;
    f.rho[i] = s.rho;
    f.u[i] = s.u;
  }
  return f;
}

StepReport step(Field& f, const SimConfig& cfg, double dt_limit) {
  const GasModel& g = cfg.gas;
  const int n = f.n();
  check_field(f.rho, f.u, f.time);
  const double alpha = max_char_speed(g, f);
  const double dt = std::min(cfg.cfl * f.dx / alpha, dt_limit);
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::runtime_error("step: non-positive time step");

  StepReport rep;
  rep.dt = dt;
  const double rho0_total = total(f.rho, f.dx);
  const double u0_total = total(f.u, f.dx);

  Rhs rhs;
  std::vector<double> r1(n), u1(n), r2(n), u2(n);

  compute_rhs(g, f.rho, f.u, f.dx, f.time, rhs);
  double brho = (rhs.f_left_rho - rhs.f_right_rho) / 6.0;
  double bu = (rhs.f_left_u - rhs.f_right_u) / 6.0;
  for (int i = 0; i < n; ++i) {
    r1[i] = f.rho[i] + dt * rhs.d_rho[i];
    u1[i] = f.u[i] + dt * rhs.d_u[i];
  }

  compute_rhs(g, r1, u1, f.dx, f.time, rhs);
  brho += (rhs.f_left_rho - rhs.f_right_rho) / 6.0;
  bu += (rhs.f_left_u - rhs.f_right_u) / 6.0;
  for (int i = 0; i < n; ++i) {
    r2[i] = 0.75 * f.rho[i] + 0.25 * (r1[i] + dt * rhs.d_rho[i]);
    u2[i] = 0.75 * f.u[i] + 0.25 * (u1[i] + dt * rhs.d_u[i]);
  }

  compute_rhs(g, r2, u2, f.dx, f.time, rhs);
  brho += (rhs.f_left_rho - rhs.f_right_rho) * (2.0 / 3.0);
  bu += (rhs.f_left_u - rhs.f_right_u) * (2.0 / 3.0);
  for (int i = 0; i < n; ++i) {
    f.rho[i] = f.rho[i] / 3.0 + (2.0 / 3.0) * (r2[i] + dt * rhs.d_rho[i]);
    f.u[i] = f.u[i] / 3.0 + (2.0 / 3.0) * (u2[i] + dt * rhs.d_u[i]);
  }
  f.time += dt;
  check_field(f.rho, f.u, f.time);

  rep.drho_total = total(f.rho, f.dx) - rho0_total;
  rep.du_total = total(f.u, f.dx) - u0_total;
  rep.drho_boundary = dt * brho;
  rep.du_boundary = dt * bu;
  rep.defect_rho = std::abs(rep.drho_total - rep.drho_boundary) /
                   std::max(total_abs(f.rho, f.dx), 1e-300);
  rep.defect_u = std::abs(rep.du_total - rep.du_boundary) /
                 std::max(total_abs(f.u, f.dx), 1e-300);
  return rep;
}

std::vector<Field> run_checked(const SimConfig& cfg,
                               std::span<const double> snapshot_times,
                               StepReport& worst) {
  cfg.validate();
  std::vector<double> stops(snapshot_times.begin(), snapshot_times.end());
  if (stops.empty()) stops.push_back(cfg.t_end);
  if (!std::is_sorted(stops.begin(), stops.end()) || stops.front() < 0.0 ||
      stops.back() > cfg.t_end)
    throw std::invalid_argument("run: snapshot times must be sorted in [0, t_end]");

  Field f = initialize(cfg);
  worst = StepReport{};
  std::vector<Field> out;
  for (double stop : stops) {
    while (f.time < stop * (1.0 - 1e-14) && stop - f.time > 1e-15) {
      const StepReport rep = step(f, cfg, stop - f.time);
      worst.defect_rho = std::max(worst.defect_rho, rep.defect_rho);
      worst.defect_u = std::max(worst.defect_u, rep.defect_u);
    }
    f.time = stop;  // absorb terminal round-off
    out.push_back(f);
  }
  return out;
}

std::vector<Field> run(const SimConfig& cfg,
                       std::span<const double> snapshot_times) {
  StepReport worst;
  return run_checked(cfg, snapshot_times, worst);
}

Diagnostics diagnostics(const Field& f) {
  Diagnostics d;
  const int n = f.n();
  d.total_rho = total(f.rho, f.dx);
  d.total_u = total(f.u, f.dx);
  d.max_rho = *std::max_element(f.rho.begin(), f.rho.end());

  if (n < 3) return d;
  // centered-difference density gradient at cell centers
  std::vector<double> grad(n, 0.0);
  for (int i = 1; i + 1 < n; ++i)
    grad[i] = std::abs(f.rho[i + 1] - f.rho[i - 1]) / (2.0 * f.dx);

  // sub-cell refinement: vertex of the parabola through the three
  // gradient samples around a discrete maximum
  auto refined = [&](int i) {
    if (i <= 0 || i + 1 >= n) return f.x_center(i);
    const double ym = grad[i - 1], y0 = grad[i], yp = grad[i + 1];
    const double den = ym - 2.0 * y0 + yp;
    if (den == 0.0) return f.x_center(i);
    const double delta = std::clamp(0.5 * (ym - yp) / den, -0.5, 0.5);
    return f.x_center(i) + delta * f.dx;
  };

  const int imax = static_cast<int>(
      std::max_element(grad.begin(), grad.end()) - grad.begin());
  d.grad_max_x = refined(imax);

  // steepest gradient on each side of the density peak
  const int peak = static_cast<int>(
      std::max_element(f.rho.begin(), f.rho.end()) - f.rho.begin());
  int il = 1;
  for (int i = 1; i <= std::max(peak, 1) && i + 1 < n; ++i)
    if (grad[i] > grad[il]) il = i;
  int ir = std::clamp(peak, 1, n - 2);
  for (int i = ir; i + 1 < n; ++i)
    if (grad[i] > grad[ir]) ir = i;
  d.shock_pos_left = refined(il);
  d.shock_pos_right = refined(ir);
  return d;
}

}  // namespace euler1d
