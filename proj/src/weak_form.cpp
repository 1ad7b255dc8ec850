#include "euler1d/weak_form.hpp"

#include <algorithm>
#include <cmath>

namespace euler1d {
namespace {

std::vector<double> wave_breakpoints(const WaveFan& fan) {
  return {fan.wave1.head, fan.wave1.tail, fan.wave2.head, fan.wave2.tail};
}

//! xi-space density pairing against a generic smooth phi on [lo, hi]:
//! the star interval enters through mass_rate, the rest is the background
//! mismatch against (rho0, u0).
double density_pairing_xi(const StarLog& st, const State& l, const State& r,
                          const std::function<double(double)>& phi, double lo,
                          double hi, const QuadratureConfig& cfg) {
  const double sigma = 0.5 * (l.u + r.u);
  double val = st.mass_rate * interval_mean(phi, st.sigma1, st.sigma2);
  auto bg_mismatch = [&](double xi) {
    const double rho_g =
        xi < st.sigma1 ? l.rho : (xi > st.sigma2 ? r.rho : 0.0);
    const double rho_0 = xi < sigma ? l.rho : r.rho;
    return (rho_g - rho_0) * phi(xi);
  };
  const std::array<double, 3> brk{st.sigma1, st.sigma2, sigma};
  val += integrate(bg_mismatch, lo, hi, brk, cfg).value;
  return val;
}

double velocity_pairing_xi(const StarLog& st, const State& l, const State& r,
                           const std::function<double(double)>& phi, double lo,
                           double hi, const QuadratureConfig& cfg) {
  const double sigma = 0.5 * (l.u + r.u);
  auto mismatch = [&](double xi) {
    const double u_g =
        xi < st.sigma1 ? l.u : (xi > st.sigma2 ? r.u : st.u_star);
    const double u_0 = xi < sigma ? l.u : r.u;
    return (u_g - u_0) * phi(xi);
  };
  const std::array<double, 3> brk{st.sigma1, st.sigma2, sigma};
  return integrate(mismatch, lo, hi, brk, cfg).value;
}

}  // namespace

double PairingReport::relative() const {
  return std::abs(residual) / std::max(scale, 1e-300);
}

PairingReport residual_mass(const WaveFan& fan, const TestFunction1D& phi,
                            const QuadratureConfig& cfg) {
  const auto brk = wave_breakpoints(fan);
  auto t1_f = [&](double xi) {
    const Sample s = sample(fan, xi);
    return -s.rho * (s.u - xi) * phi.deriv(xi);
  };
  auto t2_f = [&](double xi) { return sample(fan, xi).rho * phi.value(xi); };
  const auto t1 = integrate(t1_f, phi.lo(), phi.hi(), brk, cfg);
  const auto t2 = integrate(t2_f, phi.lo(), phi.hi(), brk, cfg);
  PairingReport rep;
  rep.terms = {t1.value, t2.value};
  rep.residual = t1.value + t2.value;
  rep.scale = std::max(std::abs(t1.value), std::abs(t2.value));
  rep.quad_error = t1.error_estimate + t2.error_estimate;
  return rep;
}

PairingReport residual_velocity(const WaveFan& fan, const TestFunction1D& phi,
                                const QuadratureConfig& cfg) {
  const auto brk = wave_breakpoints(fan);
  const double quarter = 0.25 * (fan.gas.gamma - 1.0);
  auto t1_f = [&](double xi) { return sample(fan, xi).u * phi.value(xi); };
  auto t2_f = [&](double xi) {
    const Sample s = sample(fan, xi);
    return -(0.5 * s.u - xi) * s.u * phi.deriv(xi);
  };
  auto t3_f = [&](double xi) {
    const Sample s = sample(fan, xi);
    return -quarter * pow_pos(s.rho, fan.gas.gamma - 1.0) * phi.deriv(xi);
  };
  const auto t1 = integrate(t1_f, phi.lo(), phi.hi(), brk, cfg);
  const auto t2 = integrate(t2_f, phi.lo(), phi.hi(), brk, cfg);
  const auto t3 = integrate(t3_f, phi.lo(), phi.hi(), brk, cfg);
  PairingReport rep;
  rep.terms = {t1.value, t2.value, t3.value};
  rep.residual = t1.value + t2.value + t3.value;
  rep.scale = std::max({std::abs(t1.value), std::abs(t2.value),
                        std::abs(t3.value)});
  rep.quad_error = t1.error_estimate + t2.error_estimate + t3.error_estimate;
  return rep;
}

std::vector<DeltaPairingRow> delta_pairing_limit(
    const State& l, const State& r, std::span<const double> gammas,
    const TestFunction1D& phi, const QuadratureConfig& cfg) {
  if (!(r.u < l.u))
    throw std::domain_error("delta_pairing_limit: requires u+ < u-");
  const double sigma = 0.5 * (l.u + r.u);
  const double mass_lim =
      sigma * (r.rho - l.rho) - (r.rho * r.u - l.rho * l.u);
  auto phi_val = [&phi](double xi) { return phi.value(xi); };
  std::vector<DeltaPairingRow> rows;
  rows.reserve(gammas.size());
  for (double gamma : gammas) {
    GasModel g(gamma);
    const StarLog st = solve_star_log(g, l, r);
    DeltaPairingRow row;
    row.gamma = gamma;
    row.density_pairing =
        density_pairing_xi(st, l, r, phi_val, phi.lo(), phi.hi(), cfg);
    row.density_target = mass_lim * phi.value(sigma);
    row.velocity_pairing =
        velocity_pairing_xi(st, l, r, phi_val, phi.lo(), phi.hi(), cfg);
    rows.push_back(row);
  }
  return rows;
}

double pairing_tx_density(const State& l, const State& r, double gamma,
                          const TestFunction2D& phi,
                          const QuadratureConfig& cfg) {
  if (!(phi.t_lo > 0.0))
    throw std::domain_error("pairing_tx_density: phi must be supported in t > 0");
  GasModel g(gamma);
  const StarLog st = solve_star_log(g, l, r);
  const double sigma = 0.5 * (l.u + r.u);

  // the inner integrals must be resolved well below the outer tolerance,
  // otherwise the outer rule chases their noise floor
  QuadratureConfig inner_cfg = cfg;
  inner_cfg.rel_tol = 1e-3 * cfg.rel_tol;

  auto inner = [&](double t) {
    auto phi_t = [&](double xi) { return phi.value(t, xi * t); };
    return density_pairing_xi(st, l, r, phi_t, phi.x_lo / t, phi.x_hi / t,
                              inner_cfg);
  };
  auto outer = [&](double t) { return t * inner(t); };

  // times at which one of the lines xi = const crosses the x-support edge
  std::vector<double> brk;
  for (double s : {st.sigma1, st.sigma2, sigma}) {
    if (s == 0.0) continue;
    brk.push_back(phi.x_lo / s);
    brk.push_back(phi.x_hi / s);
  }
  return integrate(outer, phi.t_lo, phi.t_hi, brk, cfg).value;
}

}  // namespace euler1d
