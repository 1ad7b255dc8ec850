// Acceptance suite: one binary, one pass/fail line per criterion.
// Usage: acceptance [criterion-numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "euler1d/exact_riemann.hpp"
#include "euler1d/gamma_limit.hpp"
#include "euler1d/weak_form.hpp"
#include "euler1d/weno_sim.hpp"

using namespace euler1d;

namespace {

const State kLeft{1.5, 1.5};
const State kRight{2.0, -0.5};

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------- 1
Check criterion1() {
  Check c;
  std::mt19937_64 rng(20240131);
  std::uniform_real_distribution<double> rho_d(0.1, 5.0), u_d(-3.0, 3.0),
      gamma_d(1.05, 1.9);
  int shocks = 0, fans = 0;
  double worst_rh = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const GasModel g(gamma_d(rng));
    const State l{rho_d(rng), u_d(rng)};
    const State r{rho_d(rng), u_d(rng)};
    const WaveFan fan = solve({g, l, r});

    const Sample sl = sample(fan, -1e12);
    const Sample sr = sample(fan, 1e12);
    c.require(sl.rho == l.rho && sl.u == l.u && sr.rho == r.rho &&
                  sr.u == r.u,
              "far-field sampling is not exact");

    auto check_shock = [&](const Wave& w, const State& pre,
                           const State& post) {
      if (std::abs(pre.rho - post.rho) < 1e-9 * std::max(pre.rho, post.rho))
        return;  // zero-strength
      ++shocks;
      const auto [r1, r2] = rh_residual(g, pre, post, w.sigma());
      const double s1 = std::abs(w.sigma() * (post.rho - pre.rho)) +
                        std::abs(post.rho * post.u - pre.rho * pre.u);
      const double s2 =
          std::abs(w.sigma() * (post.u - pre.u)) +
          std::abs((0.5 * post.u * post.u + pressure(g, post.rho)) -
                   (0.5 * pre.u * pre.u + pressure(g, pre.rho)));
      const double rel =
          std::max(std::abs(r1) / std::max(s1, 1e-300),
                   std::abs(r2) / std::max(s2, 1e-300));
      worst_rh = std::max(worst_rh, rel);
      c.require(rel < 1e-10, "jump-condition residual " + num(rel));
      const auto lam_pre = eigenvalues(g, pre);
      const auto lam_post = eigenvalues(g, post);
      if (w.kind == WaveKind::S1)
        c.require(w.sigma() < lam_pre.lambda1 &&
                      lam_post.lambda1 < w.sigma() &&
                      w.sigma() < lam_post.lambda2,
                  "1-shock Lax inequality failed");
      else
        c.require(lam_pre.lambda1 < w.sigma() &&
                      w.sigma() < lam_pre.lambda2 &&
                      lam_post.lambda2 < w.sigma(),
                  "2-shock Lax inequality failed");
    };
    auto check_fan = [&](const Wave& w) {
      if (w.tail - w.head <= 0.0) return;
      ++fans;
      double prev = -std::numeric_limits<double>::infinity();
      for (int k = 0; k <= 20; ++k) {
        const double xi = w.head + (w.tail - w.head) * k / 20.0;
        const Sample s = sample(fan, xi);
        if (s.rho <= 0.0) continue;
        const auto lam = eigenvalues(g, {s.rho, s.u});
        const double speed =
            w.kind == WaveKind::R1 ? lam.lambda1 : lam.lambda2;
        c.require(speed > prev,
                  "characteristic speed not increasing across a fan");
        prev = speed;
      }
    };
    if (fan.star) {
      if (fan.wave1.is_shock())
        check_shock(fan.wave1, l, *fan.star);
      else
        check_fan(fan.wave1);
      if (fan.wave2.is_shock())
        check_shock(fan.wave2, *fan.star, r);
      else
        check_fan(fan.wave2);
    } else {
      check_fan(fan.wave1);
      check_fan(fan.wave2);
    }
  }
  if (c.ok)
    c.detail = "1000 problems, " + std::to_string(shocks) + " shocks, " +
               std::to_string(fans) + " fans, max RH rel " + num(worst_rh);
  return c;
}

// ---------------------------------------------------------------- 2
Check criterion2() {
  Check c;
  for (double gamma : {1.3, 1.05, 1.0001}) {
    const GasModel g(gamma);
    c.require(classify(g, kLeft, kRight) == Region::IV,
              "reference data not classified IV at gamma " + num(gamma));
    const double theta = 0.5 * (gamma - 1.0);
    const double lhs = std::sqrt(
        theta * (pow_pos(kRight.rho, gamma - 1.0) -
                 pow_pos(kLeft.rho, gamma - 1.0)) /
        ((kRight.rho + kLeft.rho) * (kRight.rho - kLeft.rho)));
    const double rhs =
        (kLeft.u - kRight.u) / std::abs(kRight.rho - kLeft.rho);
    c.require(lhs < rhs, "two-shock inequality fails at gamma " + num(gamma));
  }
  // equal densities: two shocks for every gamma in (1, 2)
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rho_d(0.1, 5.0), u_d(-3.0, 3.0);
  for (int it = 0; it < 200; ++it) {
    const double rho = rho_d(rng);
    double ua = u_d(rng), ub = u_d(rng);
    if (ua == ub) continue;
    const State l{rho, std::max(ua, ub)};
    const State r{rho, std::min(ua, ub)};
    for (int k = 1; k <= 19; ++k) {
      const GasModel g(1.0 + 0.05 * k);
      c.require(classify(g, l, r) == Region::IV,
                "equal-density data left region IV");
    }
  }
  if (c.ok) c.detail = "reference gammas IV; 200 equal-density draws x 19 gammas IV";
  return c;
}

// ------------------------------------------------------------- 3, 4
struct SweepResult {
  std::vector<SweepRecord> recs;
};

SweepResult reference_sweep() {
  const double gammas[] = {1.0 + 1e-2, 1.0 + 1e-4, 1.0 + 1e-6};
  return {sweep(gammas, kLeft, kRight)};
}

Check criterion3() {
  Check c;
  const auto recs = reference_sweep().recs;
  for (const auto& r : recs) c.require(r.ok, "sweep entry failed: " + r.error);
  if (!c.ok) return c;
  c.require(recs[0].dev_a > recs[1].dev_a && recs[1].dev_a > recs[2].dev_a,
            "|a_gamma - 1| not strictly decreasing");
  c.require(recs[2].dev_a < 1e-4,
            "|a_gamma - 1| at gamma-1 = 1e-6 is " + num(recs[2].dev_a));
  if (c.ok)
    c.detail = "|a-1| = " + num(recs[0].dev_a) + " > " + num(recs[1].dev_a) +
               " > " + num(recs[2].dev_a) + " < 1e-4";
  return c;
}

Check criterion4() {
  Check c;
  const auto recs = reference_sweep().recs;
  for (const auto& r : recs) c.require(r.ok, "sweep entry failed: " + r.error);
  if (!c.ok) return c;
  auto col = [&](auto get, const char* name) {
    c.require(get(recs[0]) > get(recs[1]) && get(recs[1]) > get(recs[2]),
              std::string(name) + " not strictly decreasing");
    c.require(get(recs[2]) < 1e-3,
              std::string(name) + " at 1e-6 is " + num(get(recs[2])));
  };
  col([](const SweepRecord& r) { return r.dev_u; }, "|u* - 0.5|");
  col([](const SweepRecord& r) { return r.dev_sigma1; }, "|sigma1 - 0.5|");
  col([](const SweepRecord& r) { return r.dev_sigma2; }, "|sigma2 - 0.5|");
  col([](const SweepRecord& r) { return r.dev_mass; }, "|mass_rate - 3.5|");
  if (c.ok)
    c.detail = "all four deviation columns decrease; at 1e-6: |u*-.5| = " +
               num(recs[2].dev_u) + ", |mass-3.5| = " + num(recs[2].dev_mass);
  return c;
}

// ---------------------------------------------------------------- 5
Check criterion5() {
  Check c;
  const GasModel g(1.3);
  const WaveFan fan = solve({g, kLeft, kRight});
  double worst = 0.0;
  for (const TestFunction1D& phi :
       {TestFunction1D(0.5, 1.0), TestFunction1D(0.0, 2.0),
        TestFunction1D(0.6, 0.5)}) {
    const double m = residual_mass(fan, phi).relative();
    const double v = residual_velocity(fan, phi).relative();
    worst = std::max({worst, m, v});
    c.require(m < 1e-8, "mass weak residual " + num(m));
    c.require(v < 1e-8, "velocity weak residual " + num(v));
  }
  if (c.ok) c.detail = "3 bumps, worst relative residual " + num(worst);
  return c;
}

// ---------------------------------------------------------------- 6
Check criterion6() {
  Check c;
  const double gammas[] = {1.0 + 1e-2, 1.0 + 1e-4, 1.0 + 1e-6};
  const double bump_max = std::exp(-1.0);
  double worst_rel = 0.0, worst_vel = 0.0;
  for (const TestFunction1D& phi :
       {TestFunction1D(0.2, 0.8), TestFunction1D(0.9, 1.5),
        TestFunction1D(-0.1, 1.2)}) {
    const auto rows = delta_pairing_limit(kLeft, kRight, gammas, phi);
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
      const double rel = std::abs(row.density_pairing - row.density_target) /
                         std::abs(row.density_target);
      c.require(rel < prev, "pairing deviation not decreasing");
      prev = rel;
    }
    worst_rel = std::max(worst_rel, prev);
    c.require(prev < 1e-2, "pairing deviation at 1e-6 is " + num(prev));
    const double vel = std::abs(rows[2].velocity_pairing);
    worst_vel = std::max(worst_vel, vel);
    c.require(vel < 1e-2 * bump_max, "velocity pairing " + num(vel));
  }
  if (c.ok)
    c.detail = "3 bumps; worst pairing rel " + num(worst_rel) +
               ", worst velocity pairing " + num(worst_vel);
  return c;
}

// ------------------------------------------------------------- 7, 8
struct FigRun {
  double gamma;
  Field field;
  Diagnostics diag;
  StepReport worst;
};

const std::vector<FigRun>& fig_runs() {
  static const std::vector<FigRun> runs = [] {
    std::vector<FigRun> out;
    for (double gamma : {2.5, 1.3, 1.05, 1.0001}) {
      SimConfig cfg{GasModel(gamma), kLeft, kRight, -1.0, 1.0, 200, 0.5, 0.3};
      StepReport worst;
      const double times[] = {0.3};
      Field f = run_checked(cfg, times, worst).back();
      Diagnostics d = diagnostics(f);
      out.push_back({gamma, std::move(f), d, worst});
    }
    return out;
  }();
  return runs;
}

Check criterion7() {
  Check c;
  const auto& runs = fig_runs();
  for (std::size_t i = 1; i < runs.size(); ++i) {
    c.require(runs[i].diag.max_rho > runs[i - 1].diag.max_rho,
              "peak density not strictly increasing at gamma " +
                  num(runs[i].gamma));
    c.require(runs[i].diag.shock_gap() < runs[i - 1].diag.shock_gap(),
              "shock gap not strictly decreasing at gamma " +
                  num(runs[i].gamma));
  }
  for (const auto& r : runs) {
    if (r.gamma != 2.5 && r.gamma != 1.3) continue;
    const GasModel g(r.gamma);
    const WaveFan fan = solve({g, kLeft, kRight});
    const double dx = r.field.dx;
    c.require(
        std::abs(r.diag.shock_pos_left - fan.wave1.sigma() * 0.3) <= 3 * dx,
        "left shock position off at gamma " + num(r.gamma));
    c.require(
        std::abs(r.diag.shock_pos_right - fan.wave2.sigma() * 0.3) <= 3 * dx,
        "right shock position off at gamma " + num(r.gamma));
  }
  const Field& f = runs.back().field;  // gamma = 1.0001
  const double sigma_t = 0.5 * 0.3;
  double worst_dev = 0.0;
  for (int i = 0; i < f.n(); ++i) {
    const double x = f.x_center(i);
    if (x < sigma_t - 5 * f.dx)
      worst_dev = std::max(worst_dev, std::abs(f.u[i] - kLeft.u));
    else if (x > sigma_t + 5 * f.dx)
      worst_dev = std::max(worst_dev, std::abs(f.u[i] - kRight.u));
  }
  c.require(worst_dev < 5e-2,
            "velocity plateau deviation " + num(worst_dev));
  if (c.ok) {
    c.detail = "peaks ";
    for (const auto& r : runs) c.detail += num(r.diag.max_rho) + " ";
    c.detail += "increasing; gaps ";
    for (const auto& r : runs) c.detail += num(r.diag.shock_gap()) + " ";
    c.detail += "decreasing; plateau dev " + num(worst_dev);
  }
  return c;
}

Check criterion8() {
  Check c;
  double worst = 0.0;
  for (const auto& r : fig_runs()) {
    worst = std::max({worst, r.worst.defect_rho, r.worst.defect_u});
    c.require(r.worst.defect_rho < 1e-10,
              "mass conservation defect " + num(r.worst.defect_rho) +
                  " at gamma " + num(r.gamma));
    c.require(r.worst.defect_u < 1e-10,
              "velocity conservation defect " + num(r.worst.defect_u) +
                  " at gamma " + num(r.gamma));
  }
  if (c.ok) c.detail = "max per-step conservation defect " + num(worst);
  return c;
}

// ---------------------------------------------------------------- 9
Check criterion9() {
  Check c;
  const GasModel g(2.5);
  const WaveFan fan = solve({g, kLeft, kRight});
  double prev = std::numeric_limits<double>::infinity();
  std::string seq;
  for (int n : {100, 200, 400}) {
    SimConfig cfg{g, kLeft, kRight, -1.0, 1.0, n, 0.5, 0.3};
    const Field f = run(cfg).back();
    double l1 = 0.0;
    for (int i = 0; i < f.n(); ++i)
      l1 += std::abs(f.rho[i] - sample(fan, f.x_center(i) / 0.3).rho) * f.dx;
    c.require(l1 < prev, "L1 error not strictly decreasing at N = " +
                             std::to_string(n));
    prev = l1;
    seq += num(l1) + " ";
  }
  if (c.ok) c.detail = "L1(rho) over N in {100,200,400}: " + seq;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  struct Entry {
    int id;
    const char* name;
    Check (*fn)();
  };
  const Entry entries[] = {
      {1, "exact-solver soundness (randomized property suite)", criterion1},
      {2, "two-shock region criterion", criterion2},
      {3, "concentration constant a_gamma limit", criterion3},
      {4, "star-state and mass-rate limits", criterion4},
      {5, "weak-solution certification", criterion5},
      {6, "distributional convergence of the pairings", criterion6},
      {7, "four-gamma concentration study", criterion7},
      {8, "discrete conservation during the study", criterion8},
      {9, "grid convergence to the exact solution", criterion9},
  };

  int failures = 0;
  for (const auto& e : entries) {
    if (!wanted.empty() && !wanted.count(e.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = e.fn();
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%s] criterion %d: %s — %s (%.2f s)\n",
                c.ok ? "PASS" : "FAIL", e.id, e.name, c.detail.c_str(), secs);
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
