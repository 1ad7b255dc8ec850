#include "euler1d/gamma_limit.hpp"

#include <algorithm>
#include <cmath>

#include "euler1d/wave_curves.hpp"

namespace euler1d {
namespace {

constexpr double kLogRelTol = 1e-12;
constexpr int kMaxBisect = 200;

//! One term of the star equation rewritten in L = ln(rho*):
//!   T = sqrt(a_gamma - theta rho0^(gamma-1))
//!       * sqrt((1 - rho0 e^{-L}) / (1 + rho0 e^{-L})).
//! The e^{-L} underflow to zero at large L is benign (factor -> 1).
double term(const GasModel& g, double L, double rho0, double p0) {
  const double ag = g.theta * std::exp((g.gamma - 1.0) * L);
  const double e = rho0 * std::exp(-L);
  return std::sqrt(std::max(ag - p0, 0.0)) * std::sqrt((1.0 - e) / (1.0 + e));
}

}  // namespace

StarLog solve_star_log(const GasModel& g, const State& l, const State& r) {
  if (!(r.u < l.u))
    throw std::domain_error("solve_star_log: requires u+ < u-");
  if (classify(g, l, r) != Region::IV)
    throw std::domain_error("solve_star_log: data not in region IV");

  const double du = l.u - r.u;
  const double pl = g.theta * pow_pos(l.rho, g.gamma - 1.0);
  const double pr = g.theta * pow_pos(r.rho, g.gamma - 1.0);
  auto G = [&](double L) {
    return term(g, L, l.rho, pl) + term(g, L, r.rho, pr);
  };

  double lo = std::log(std::max(l.rho, r.rho)) + 1e-9;
  double hi = std::max(1.0, 2.0 * std::abs(lo));
  int guard = 0;
  while (G(hi) < du) {
    hi *= 2.0;
    if (++guard > 1100 || !std::isfinite(hi))
      throw std::runtime_error("solve_star_log: bracket search failed");
  }
  if (G(lo) >= du) {
    // boundary tie: star sits at the larger data density (zero-strength wave)
    hi = lo;
  }
  const double tol = kLogRelTol * std::max({std::abs(lo), std::abs(hi), 1.0});
  int it = 0;
  while (hi - lo > tol) {
    if (++it > kMaxBisect)
      throw std::runtime_error("solve_star_log: bisection did not converge");
    const double mid = 0.5 * (lo + hi);
    if (G(mid) < du)
      lo = mid;
    else
      hi = mid;
  }

  StarLog out;
  out.gamma = g.gamma;
  out.L = 0.5 * (lo + hi);
  out.a_gamma = g.theta * std::exp((g.gamma - 1.0) * out.L);
  out.u_star = l.u - term(g, out.L, l.rho, pl);
  const double el = l.rho * std::exp(-out.L);
  const double er = r.rho * std::exp(-out.L);
  out.sigma1 = l.u + (out.u_star - l.u) / (1.0 - el);
  out.sigma2 = r.u + (out.u_star - r.u) / (1.0 - er);
  // rho* (sigma2 - sigma1) rearranged through the mass jump conditions so
  // that only data-scale quantities appear
  out.mass_rate = l.rho * l.u - out.sigma1 * l.rho + out.sigma2 * r.rho -
                  r.rho * r.u;
  return out;
}

std::vector<SweepRecord> sweep(std::span<const double> gammas, const State& l,
                               const State& r) {
  std::vector<SweepRecord> out;
  out.reserve(gammas.size());
  const double sigma = 0.5 * (l.u + r.u);
  const double a_lim = 0.25 * (l.u - r.u) * (l.u - r.u);
  const double mass_lim =
      sigma * (r.rho - l.rho) - (r.rho * r.u - l.rho * l.u);
  for (double gamma : gammas) {
    SweepRecord rec;
    rec.gamma = gamma;
    try {
      GasModel g(gamma);
      rec.star = solve_star_log(g, l, r);
      rec.ok = true;
      rec.dev_u = std::abs(rec.star.u_star - sigma);
      rec.dev_sigma1 = std::abs(rec.star.sigma1 - sigma);
      rec.dev_sigma2 = std::abs(rec.star.sigma2 - sigma);
      rec.dev_a = std::abs(rec.star.a_gamma - a_lim);
      rec.dev_mass = std::abs(rec.star.mass_rate - mass_lim);
    } catch (const std::exception& e) {
      rec.ok = false;
      rec.error = e.what();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::optional<double> region_iv_threshold(const State& l, const State& r,
                                          std::span<const double> gamma_grid) {
  if (!(r.u < l.u))
    throw std::domain_error("region_iv_threshold: requires u+ < u-");
  std::optional<double> best;
  for (double gamma : gamma_grid) {
    if (!(gamma > 1.0)) continue;
    bool qualifies;
    if (l.rho == r.rho) {
      qualifies = true;  // two-shock configuration for the whole range
    } else {
      const double theta = 0.5 * (gamma - 1.0);
      const double dp =
          pow_pos(r.rho, gamma - 1.0) - pow_pos(l.rho, gamma - 1.0);
      const double lhs =
          std::sqrt(theta * dp / ((r.rho + l.rho) * (r.rho - l.rho)));
      const double rhs = (l.u - r.u) / std::abs(r.rho - l.rho);
      qualifies = lhs < rhs;
    }
    if (qualifies && (!best || gamma > *best)) best = gamma;
  }
  return best;
}

}  // namespace euler1d
