#include "euler1d/exact_riemann.hpp"

#include <algorithm>
#include <cmath>

namespace euler1d {
namespace {

constexpr double kStarRelTol = 1e-13;
constexpr int kMaxBisect = 200;
// density jumps below this (relative to the anchor) count as zero-strength
constexpr double kZeroStrength = 1e-11;

double composite_gap(const GasModel& g, const State& l, const State& r,
                     double rho) {
  return forward1_u(g, l, rho) - backward2_u(g, r, rho);
}

//! Bisection for the star density: D(rho) = W1(rho) - W2b(rho) is strictly
//! decreasing, positive below the root.
double bisect_star(const GasModel& g, const State& l, const State& r,
                   double lo, double hi) {
  int it = 0;
  while (hi - lo > kStarRelTol * hi) {
    if (++it > kMaxBisect)
      throw std::runtime_error("solve: star bisection did not converge");
    const double mid = 0.5 * (lo + hi);
    if (composite_gap(g, l, r, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Wave make_wave1(const GasModel& g, const State& l, const State& star) {
  if (star.rho > l.rho * (1.0 + kZeroStrength)) {
    const double s = (star.rho * star.u - l.rho * l.u) / (star.rho - l.rho);
    return {WaveKind::S1, s, s};
  }
  if (star.rho < l.rho * (1.0 - kZeroStrength)) {
    const double head = l.u - sound_speed(g, l.rho);
    const double tail = star.u - sound_speed(g, star.rho);
    return {WaveKind::R1, head, tail};
  }
  const double s = l.u - sound_speed(g, l.rho);  // weak-wave limit
  return {WaveKind::S1, s, s};
}

Wave make_wave2(const GasModel& g, const State& star, const State& r) {
  if (star.rho > r.rho * (1.0 + kZeroStrength)) {
    const double s = (r.rho * r.u - star.rho * star.u) / (r.rho - star.rho);
    return {WaveKind::S2, s, s};
  }
  if (star.rho < r.rho * (1.0 - kZeroStrength)) {
    const double head = star.u + sound_speed(g, star.rho);
    const double tail = r.u + sound_speed(g, r.rho);
    return {WaveKind::R2, head, tail};
  }
  const double s = r.u + sound_speed(g, r.rho);
  return {WaveKind::S2, s, s};
}

bool wave_has_strength(const Wave& w, const State& a, const State& b) {
  (void)w;
  return std::abs(a.rho - b.rho) > kZeroStrength * std::max(a.rho, b.rho);
}

void validate_shock(const GasModel& g, const State& pre, const State& post,
                    const Wave& w) {
  const auto [r1, r2] = rh_residual(g, pre, post, w.sigma());
  const double s1 = std::abs(w.sigma() * (post.rho - pre.rho)) +
                    std::abs(post.rho * post.u - pre.rho * pre.u);
  const double s2 = std::abs(w.sigma() * (post.u - pre.u)) +
                    std::abs(0.5 * post.u * post.u + pressure(g, post.rho)) +
                    std::abs(0.5 * pre.u * pre.u + pressure(g, pre.rho));
  if (std::abs(r1) > 1e-10 * std::max(s1, 1e-30) + 1e-13 * s1 ||
      std::abs(r2) > 1e-10 * std::max(s2, 1e-30) + 1e-13 * s2)
    throw std::runtime_error("solve: jump-condition residual out of range");
  const double slack = 1e-12 * (std::abs(w.sigma()) + 1.0);
  if (w.kind == WaveKind::S1) {
    const auto lam_pre = eigenvalues(g, pre);
    const auto lam_post = eigenvalues(g, post);
    if (!(w.sigma() < lam_pre.lambda1 + slack &&
          lam_post.lambda1 - slack < w.sigma() &&
          w.sigma() < lam_post.lambda2 + slack))
      throw std::runtime_error("solve: 1-shock violates the Lax conditions");
  } else {
    const auto lam_pre = eigenvalues(g, pre);
    const auto lam_post = eigenvalues(g, post);
    if (!(lam_pre.lambda1 - slack < w.sigma() &&
          w.sigma() < lam_pre.lambda2 + slack &&
          lam_post.lambda2 - slack < w.sigma()))
      throw std::runtime_error("solve: 2-shock violates the Lax conditions");
  }
}

Sample fan1_interior(const GasModel& g, const State& l, double xi) {
  const double beta =
      std::max((l.u + pow_pos(l.rho, g.theta) - xi) / (1.0 + g.theta), 0.0);
  return {pow_pos(beta, 1.0 / g.theta), xi + g.theta * beta, false};
}

Sample fan2_interior(const GasModel& g, const State& r, double xi) {
  const double beta =
      std::max((xi - r.u + pow_pos(r.rho, g.theta)) / (1.0 + g.theta), 0.0);
  return {pow_pos(beta, 1.0 / g.theta), xi - g.theta * beta, false};
}

}  // namespace

std::pair<double, double> rh_residual(const GasModel& g, const State& l,
                                      const State& r, double sigma) {
  const double r1 = sigma * (r.rho - l.rho) - (r.rho * r.u - l.rho * l.u);
  const double r2 = sigma * (r.u - l.u) -
                    ((0.5 * r.u * r.u + pressure(g, r.rho)) -
                     (0.5 * l.u * l.u + pressure(g, l.rho)));
  return {r1, r2};
}

WaveFan solve(const RiemannProblem& p) {
  const GasModel& g = p.gas;
  const State l = p.left;
  const State r = p.right;
  if (!(l.rho > 0.0) || !(r.rho > 0.0))
    throw std::domain_error("solve: data densities must be positive");

  const Region cfg = classify(g, l, r);

  if (l.rho == r.rho && l.u == r.u) {  // constant solution
    const auto lam = eigenvalues(g, l);
    Wave w1{WaveKind::S1, lam.lambda1, lam.lambda1};
    Wave w2{WaveKind::S2, lam.lambda2, lam.lambda2};
    return {g, l, r, cfg, l, w1, w2};
  }

  if (cfg == Region::V) {
    const double bl = pow_pos(l.rho, g.theta);
    const double br = pow_pos(r.rho, g.theta);
    Wave w1{WaveKind::R1, l.u - sound_speed(g, l.rho), l.u + bl};
    Wave w2{WaveKind::R2, r.u - br, r.u + sound_speed(g, r.rho)};
    return {g, l, r, cfg, std::nullopt, w1, w2};
  }

  double lo = 0.0, hi = 0.0;
  switch (cfg) {
    case Region::I: {
      // both branches are rarefaction curves on (0, min(rho-, rho+)], so
      // the root has the closed form rho*^theta = margin / 2; bracket it
      const double margin = (l.u + pow_pos(l.rho, g.theta)) -
                            (r.u - pow_pos(r.rho, g.theta));
      const double root = pow_pos(0.5 * margin, 1.0 / g.theta);
      if (root < 5e-308)
        throw std::runtime_error(
            "solve: star density underflows (data is numerically at the "
            "vacuum boundary)");
      lo = 0.9 * root;
      hi = std::min(1.1 * root, std::min(l.rho, r.rho));
      if (!(hi > lo)) {  // root within a hair of the smaller data density
        lo = 0.9 * std::min(l.rho, r.rho);
        hi = std::min(l.rho, r.rho);
      }
      break;
    }
    case Region::II:
      lo = l.rho;
      hi = r.rho;
      break;
    case Region::III:
      lo = r.rho;
      hi = l.rho;
      break;
    default: {  // Region::IV
      lo = std::max(l.rho, r.rho);
      hi = 2.0 * lo;
      while (composite_gap(g, l, r, hi) > 0.0) {
        if (hi > 1e300)
          throw std::runtime_error(
              "solve: star density exceeds the representable range "
              "(gamma too close to 1); use the log-space solver");
        hi *= 2.0;
      }
      break;
    }
  }

  const double rho_star = bisect_star(g, l, r, lo, hi);
  const double u_star =
      0.5 * (forward1_u(g, l, rho_star) + backward2_u(g, r, rho_star));
  const State star{rho_star, u_star};

  WaveFan fan{g, l, r, cfg, star, make_wave1(g, l, star),
              make_wave2(g, star, r)};

  if (fan.wave1.is_shock() && wave_has_strength(fan.wave1, l, star))
    validate_shock(g, l, star, fan.wave1);
  if (fan.wave2.is_shock() && wave_has_strength(fan.wave2, star, r))
    validate_shock(g, star, r, fan.wave2);
  if (!(fan.wave1.head <= fan.wave1.tail + 1e-12 &&
        fan.wave1.tail <= fan.wave2.head + 1e-12 &&
        fan.wave2.head <= fan.wave2.tail + 1e-12))
    throw std::runtime_error("solve: wave speeds out of order");
  return fan;
}

Sample sample(const WaveFan& fan, double xi) {
  const Wave& w1 = fan.wave1;
  const Wave& w2 = fan.wave2;
  if (xi < w1.head) return {fan.left.rho, fan.left.u, false};
  if (!w1.is_shock() && xi < w1.tail)
    return fan1_interior(fan.gas, fan.left, xi);
  if (xi < w2.head) {
    if (fan.config == Region::V) return {0.0, xi, true};
    return {fan.star->rho, fan.star->u, false};
  }
  if (!w2.is_shock() && xi < w2.tail)
    return fan2_interior(fan.gas, fan.right, xi);
  return {fan.right.rho, fan.right.u, false};
}

}  // namespace euler1d
