#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "euler1d/pressureless.hpp"
#include "euler1d/quadrature.hpp"

using namespace euler1d;

namespace {

// C-infinity step 0 -> 1 over [0, 1]
double smoothstep(double x) {
  auto h = [](double y) { return y > 0.0 ? std::exp(-1.0 / y) : 0.0; };
  const double a = h(x), b = h(1.0 - x);
  return a + b > 0.0 ? a / (a + b) : 0.0;
}

// ~1 on [lo + r, hi - r], smoothly cut to 0 at lo and hi
double plateau(double t, double lo, double hi, double r) {
  return smoothstep((t - lo) / r) * smoothstep((hi - t) / r);
}

// independent composite-Simpson oracle
template <typename F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("closed form for the reference data") {
  const DeltaWaveSolution d = solve_delta({1.5, 1.5}, {2.0, -0.5});
  CHECK(d.sigma == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.weight_rate == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(d.weight(0.3) == doctest::Approx(1.05).epsilon(1e-15));
  // general form sigma [rho] - [rho u] agrees with the closed form
  const double general = d.sigma * (2.0 - 1.5) - (2.0 * -0.5 - 1.5 * 1.5);
  CHECK(d.weight_rate == doctest::Approx(general).epsilon(1e-12));
}

TEST_CASE("symmetric data center the delta") {
  const DeltaWaveSolution d = solve_delta({1.0, 1.0}, {1.0, -1.0});
  CHECK(d.sigma == 0.0);
  CHECK(d.weight_rate == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("vanishing jump limit") {
  const DeltaWaveSolution d =
      solve_delta({1.2, 0.7 + 1e-9}, {0.8, 0.7 - 1e-9});
  CHECK(d.sigma == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(d.weight_rate < 1e-8);
  CHECK(d.weight_rate > 0.0);
}

TEST_CASE("rejects data without mass concentration") {
  CHECK_THROWS_AS(solve_delta({1.0, 0.0}, {1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(solve_delta({1.0, 1.0}, {1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(solve_delta({0.0, 1.0}, {1.0, 0.0}), std::domain_error);
}

TEST_CASE("generalized jump relations hold identically") {
  const DeltaWaveSolution d = solve_delta({1.5, 1.5}, {2.0, -0.5});
  const auto [rx, rw, ru] = grh_residual(d, 1.0);
  CHECK(rx == 0.0);
  CHECK(rw == 0.0);
  CHECK(std::abs(ru) < 1e-15);

  // perturbation responses are linear with unit slope
  DeltaWaveSolution p = d;
  p.sigma += 1e-4;
  const auto [px, pw, pu] = grh_residual(p, 1.0);
  CHECK(pu - ru == doctest::Approx(1e-4 * (-0.5 - 1.5)).epsilon(1e-9));
  CHECK(px == doctest::Approx(-1e-4).epsilon(1e-9));

  DeltaWaveSolution q = d;
  q.weight_rate += 1e-4;
  const auto [qx, qw, qu] = grh_residual(q, 1.0);
  CHECK(qw - rw == doctest::Approx(1e-4).epsilon(1e-9));

  CHECK_THROWS_AS(grh_residual(d, -1.0), std::domain_error);
}

TEST_CASE("overcompressive for every admissible input") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> rho_d(0.05, 8.0), u_d(-4.0, 4.0);
  for (int it = 0; it < 500; ++it) {
    const double ua = u_d(rng), ub = u_d(rng);
    if (ua == ub) continue;
    const State l{rho_d(rng), std::max(ua, ub)};
    const State r{rho_d(rng), std::min(ua, ub)};
    const DeltaWaveSolution d = solve_delta(l, r);
    CHECK(r.u < d.sigma);
    CHECK(d.sigma < l.u);
    CHECK(d.weight_rate > 0.0);
  }
}

TEST_CASE("velocity shift moves the delta, not its weight") {
  const DeltaWaveSolution d = solve_delta({1.5, 1.5}, {2.0, -0.5});
  for (double c : {-2.0, 0.4, 11.0}) {
    const DeltaWaveSolution s = solve_delta({1.5, 1.5 + c}, {2.0, -0.5 + c});
    CHECK(s.sigma == doctest::Approx(d.sigma + c).epsilon(1e-14));
    CHECK(s.weight_rate == doctest::Approx(d.weight_rate).epsilon(1e-14));
  }
}

TEST_CASE("pairing against an independent Simpson oracle") {
  const DeltaWaveSolution d = solve_delta({1.5, 1.5}, {2.0, -0.5});
  const WeightedDirac w = dirac_part(d);

  // ~1 on [0,1] x R around the support line, smoothly cut beyond
  TestFunction2D phi{
      [](double t, double x) {
        return plateau(t, 0.0, 1.0, 0.1) * plateau(x, -10.0, 10.0, 1.0);
      },
      0.0, 1.0, -10.0, 10.0};
  const double got = pair(w, phi);
  const double oracle = simpson(
      [&](double t) { return 3.5 * t * phi.value(t, 0.5 * t); }, 0.0, 1.0,
      200000);
  CHECK(got == doctest::Approx(oracle).epsilon(1e-8));
  CHECK(got == doctest::Approx(1.575).epsilon(1e-8));  // 3.5 * 0.45
}

TEST_CASE("pairing edge cases") {
  const DeltaWaveSolution d = solve_delta({1.5, 1.5}, {2.0, -0.5});
  WeightedDirac w = dirac_part(d);

  // zero weight pairs to zero
  w.weight = [](double) { return 0.0; };
  TestFunction2D phi = TestFunction2D::tensor({0.5, 0.4}, {0.25, 0.2});
  CHECK(pair(w, phi) == 0.0);

  // support away from the line x = sigma t pairs to zero
  const WeightedDirac w2 = dirac_part(d);
  TestFunction2D far = TestFunction2D::tensor({0.5, 0.4}, {5.0, 0.5});
  CHECK(pair(w2, far) == 0.0);

  TestFunction2D bad = phi;
  bad.x_hi = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(pair(w2, bad), std::domain_error);
}

TEST_CASE("distributional conservation of both equations") {
  const DeltaWaveSolution d = solve_delta({1.5, 1.5}, {2.0, -0.5});
  const WeightedDirac w = dirac_part(d);
  const TestFunction1D pt(0.6, 0.35);  // t-support [0.25, 0.95]
  const TestFunction1D px(0.3, 1.5);   // x-support [-1.2, 1.8]
  const double sig = d.sigma;

  auto inner_x = [&](double t, auto fx) {
    const double brk[] = {sig * t};
    return integrate(fx, px.lo(), px.hi(), brk).value;
  };

  // <rho, phi_t> + <rho u, phi_x>
  auto rho0 = [&](double t, double x) {
    return x < sig * t ? d.left.rho : d.right.rho;
  };
  auto u0 = [&](double t, double x) {
    return x < sig * t ? d.left.u : d.right.u;
  };
  const double term_bg_t =
      integrate(
          [&](double t) {
            return inner_x(t, [&](double x) {
              return rho0(t, x) * pt.deriv(t) * px.value(x);
            });
          },
          pt.lo(), pt.hi())
          .value;
  const double term_delta_t =
      integrate([&](double t) { return w.weight(t) * pt.deriv(t) * px.value(sig * t); },
                pt.lo(), pt.hi())
          .value;
  const double term_bg_x =
      integrate(
          [&](double t) {
            return inner_x(t, [&](double x) {
              return rho0(t, x) * u0(t, x) * pt.value(t) * px.deriv(x);
            });
          },
          pt.lo(), pt.hi())
          .value;
  const double term_delta_x =
      integrate([&](double t) { return sig * w.weight(t) * pt.value(t) * px.deriv(sig * t); },
                pt.lo(), pt.hi())
          .value;
  const double mass_res = term_bg_t + term_delta_t + term_bg_x + term_delta_x;
  const double mass_scale =
      std::max({std::abs(term_bg_t), std::abs(term_delta_t),
                std::abs(term_bg_x), std::abs(term_delta_x)});
  CHECK(std::abs(mass_res) < 1e-6 * mass_scale);

  // <u, phi_t> + <u^2/2, phi_x>  (no delta in the velocity)
  const double vterm_t =
      integrate(
          [&](double t) {
            return inner_x(t, [&](double x) {
              return u0(t, x) * pt.deriv(t) * px.value(x);
            });
          },
          pt.lo(), pt.hi())
          .value;
  const double vterm_x =
      integrate(
          [&](double t) {
            return inner_x(t, [&](double x) {
              return 0.5 * u0(t, x) * u0(t, x) * pt.value(t) * px.deriv(x);
            });
          },
          pt.lo(), pt.hi())
          .value;
  const double vel_res = vterm_t + vterm_x;
  CHECK(std::abs(vel_res) <
        1e-6 * std::max(std::abs(vterm_t), std::abs(vterm_x)));
}
