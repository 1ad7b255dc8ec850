#include "euler1d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace euler1d {

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, std::span<const double> breakpoints,
                           const QuadratureConfig& cfg) {
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> pts;
  pts.push_back(a);
  for (double p : breakpoints)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  using rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  using fixed = boost::math::quadrature::gauss<double, 15>;
  const double range = b - a;
  double total = 0.0, err_total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i], hi = pts[i + 1];
    if (hi <= lo) continue;
    // panels are smooth between registered breakpoints; on slivers the
    // adaptive rule's error floor stalls below tight tolerances, while the
    // fixed rule is already exact there
    if (hi - lo < 1e-5 * range) {
      total += fixed::integrate(f, lo, hi);
      err_total += 1e-15 * std::abs(total);
      continue;
    }
    double err = 0.0;
    total += rule::integrate(f, lo, hi, cfg.max_depth, cfg.rel_tol, &err);
    err_total += err;
  }
  return {sign * total, err_total};
}

double interval_mean(const std::function<double(double)>& f, double a,
                     double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  if (!(half > 0.0)) return f(mid);
  using rule = boost::math::quadrature::gauss<double, 15>;
  const auto& x = rule::abscissa();  // non-negative half, x[0] == 0
  const auto& w = rule::weights();
  double acc = w[0] * f(mid);
  for (std::size_t i = 1; i < x.size(); ++i)
    acc += w[i] * (f(mid + half * x[i]) + f(mid - half * x[i]));
  return 0.5 * acc;  // weights sum to 2 on [-1, 1]
}

}  // namespace euler1d
