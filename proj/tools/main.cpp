// Command-line front end: exact Riemann solutions, delta-wave limits,
// gamma sweeps, weak-form checks, and WENO runs with table output.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "euler1d/exact_riemann.hpp"
#include "euler1d/gamma_limit.hpp"
#include "euler1d/pressureless.hpp"
#include "euler1d/weak_form.hpp"
#include "euler1d/weno_sim.hpp"

namespace fs = std::filesystem;
using namespace euler1d;

namespace {

// all floating-point output carries 17 significant digits so that tables
// are exactly reproducible
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {  // for file names
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct StateFlags {
  double rho_left = 0, u_left = 0, rho_right = 0, u_right = 0;
  void add(CLI::App* cmd) {
    cmd->add_option("--rho-left", rho_left, "left density")->required();
    cmd->add_option("--u-left", u_left, "left velocity")->required();
    cmd->add_option("--rho-right", rho_right, "right density")->required();
    cmd->add_option("--u-right", u_right, "right velocity")->required();
  }
  State left() const { return {rho_left, u_left}; }
  State right() const { return {rho_right, u_right}; }
};

const char* kind_name(WaveKind k) {
  switch (k) {
    case WaveKind::R1: return "R1";
    case WaveKind::R2: return "R2";
    case WaveKind::S1: return "S1";
    case WaveKind::S2: return "S2";
  }
  return "?";
}

void print_wave(const char* label, const WaveFan& fan, const Wave& w,
                const State& pre, const State& post) {
  std::cout << label << ": " << kind_name(w.kind);
  if (w.is_shock()) {
    std::cout << " sigma=" << fmt(w.sigma());
    const auto [r1, r2] = rh_residual(fan.gas, pre, post, w.sigma());
    std::cout << " rh_residual=(" << fmt(r1) << ", " << fmt(r2) << ")";
  } else {
    std::cout << " head=" << fmt(w.head) << " tail=" << fmt(w.tail);
  }
  std::cout << "\n";
}

int cmd_solve(double gamma, const StateFlags& st, int samples, double xi_min,
              double xi_max) {
  const GasModel g(gamma);
  const WaveFan fan = solve({g, st.left(), st.right()});
  if (st.left().rho == st.right().rho && st.left().u == st.right().u)
    std::cout << "constant solution (zero-strength waves)\n";
  std::cout << "config: " << region_name(fan.config) << "\n";
  if (fan.star) {
    std::cout << "star: rho=" << fmt(fan.star->rho)
              << " u=" << fmt(fan.star->u) << "\n";
  } else {
    std::cout << "vacuum: xi in [" << fmt(fan.wave1.tail) << ", "
              << fmt(fan.wave2.head) << "]\n";
  }
  const State mid = fan.star ? *fan.star : State{0.0, 0.0};
  print_wave("wave1", fan, fan.wave1, fan.left, mid);
  print_wave("wave2", fan, fan.wave2, mid, fan.right);
  if (samples > 0) {
    std::cout << "xi,rho,u\n";
    for (int i = 0; i < samples; ++i) {
      const double xi =
          xi_min + (xi_max - xi_min) * i / std::max(samples - 1, 1);
      const Sample s = sample(fan, xi);
      std::cout << fmt(xi) << "," << fmt(s.rho) << "," << fmt(s.u) << "\n";
    }
  }
  return 0;
}

int cmd_delta(const StateFlags& st, double t) {
  const DeltaWaveSolution d = solve_delta(st.left(), st.right());
  std::cout << "sigma: " << fmt(d.sigma) << "\n";
  std::cout << "weight_rate: " << fmt(d.weight_rate) << "\n";
  std::cout << "w(" << fmt_short(t) << "): " << fmt(d.weight(t)) << "\n";
  const auto [rx, rw, ru] = grh_residual(d, t);
  std::cout << "grh_residual: (" << fmt(rx) << ", " << fmt(rw) << ", "
            << fmt(ru) << ")\n";
  const double tol = 1e-12 * (1.0 + std::abs(d.sigma) + d.weight_rate);
  return (std::abs(rx) < tol && std::abs(rw) < tol && std::abs(ru) < tol) ? 0
                                                                          : 1;
}

int cmd_sweep(const std::vector<double>& gammas, const StateFlags& st,
              const std::string& out) {
  const auto recs = sweep(gammas, st.left(), st.right());
  std::ostringstream os;
  os << "gamma,ok,L,a_gamma,u_star,sigma1,sigma2,mass_rate,dev_u,dev_sigma1,"
        "dev_sigma2,dev_a,dev_mass,error\n";
  bool all_ok = true;
  for (const auto& r : recs) {
    all_ok = all_ok && r.ok;
    os << fmt(r.gamma) << "," << (r.ok ? 1 : 0);
    if (r.ok) {
      os << "," << fmt(r.star.L) << "," << fmt(r.star.a_gamma) << ","
         << fmt(r.star.u_star) << "," << fmt(r.star.sigma1) << ","
         << fmt(r.star.sigma2) << "," << fmt(r.star.mass_rate) << ","
         << fmt(r.dev_u) << "," << fmt(r.dev_sigma1) << ","
         << fmt(r.dev_sigma2) << "," << fmt(r.dev_a) << "," << fmt(r.dev_mass)
         << ",";
    } else {
      os << ",,,,,,,,,,,," << r.error;
    }
    os << "\n";
  }
  if (out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 1;
    }
    f << os.str();
  }
  return all_ok ? 0 : 1;
}

int cmd_weak(double gamma, const StateFlags& st, double phi_center,
             double phi_width, const std::vector<double>& limit_gammas) {
  const TestFunction1D phi(phi_center, phi_width);
  int status = 0;
  const GasModel g(gamma);
  const WaveFan fan = solve({g, st.left(), st.right()});
  const PairingReport m = residual_mass(fan, phi);
  const PairingReport v = residual_velocity(fan, phi);
  std::cout << "mass terms: " << fmt(m.terms[0]) << " " << fmt(m.terms[1])
            << "\n";
  std::cout << "mass residual (relative): " << fmt(m.relative()) << "\n";
  std::cout << "velocity terms: " << fmt(v.terms[0]) << " " << fmt(v.terms[1])
            << " " << fmt(v.terms[2]) << "\n";
  std::cout << "velocity residual (relative): " << fmt(v.relative()) << "\n";
  const bool pass = m.relative() < 1e-8 && v.relative() < 1e-8;
  std::cout << (pass ? "weak residual check: PASS\n"
                     : "weak residual check: FAIL\n");
  if (!pass) status = 1;
  if (!limit_gammas.empty()) {
    std::cout << "gamma,density_pairing,density_target,velocity_pairing\n";
    for (const auto& row :
         delta_pairing_limit(st.left(), st.right(), limit_gammas, phi)) {
      std::cout << fmt(row.gamma) << "," << fmt(row.density_pairing) << ","
                << fmt(row.density_target) << "," << fmt(row.velocity_pairing)
                << "\n";
    }
  }
  return status;
}

void write_snapshot(const fs::path& dir, const std::string& stem,
                    const Field& f, const SimConfig& cfg, double wall_s) {
  {
    std::ofstream csv(dir / (stem + ".csv"));
    if (!csv) throw std::runtime_error("cannot write " + stem + ".csv");
    csv << "x,rho,u\n";
    for (int i = 0; i < f.n(); ++i)
      csv << fmt(f.x_center(i)) << "," << fmt(f.rho[i]) << "," << fmt(f.u[i])
          << "\n";
  }
  std::ofstream meta(dir / (stem + ".meta"));
  if (!meta) throw std::runtime_error("cannot write " + stem + ".meta");
  meta << "domain=" << fmt(f.x_left) << " " << fmt(f.x_left + f.n() * f.dx)
       << "\n"
       << "n=" << f.n() << "\n"
       << "cfl=" << fmt(cfg.cfl) << "\n"
       << "gamma=" << fmt(cfg.gas.gamma) << "\n"
       << "t=" << fmt(f.time) << "\n"
       << "wall_clock_s=" << fmt(wall_s) << "\n";
}

int cmd_simulate(double gamma, const StateFlags& st, int n, double cfl,
                 double t_end, double x_min, double x_max,
                 std::vector<double> times, const std::string& outdir) {
  SimConfig cfg{GasModel(gamma), st.left(), st.right(), x_min, x_max,
                n,               cfl,       t_end};
  if (times.empty()) times.push_back(t_end);
  const auto t0 = std::chrono::steady_clock::now();
  const auto snaps = run(cfg, times);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  fs::create_directories(outdir);
  for (const auto& f : snaps) {
    const std::string stem =
        "sim_gamma" + fmt_short(gamma) + "_t" + fmt_short(f.time);
    write_snapshot(outdir, stem, f, cfg, wall);
    const Diagnostics d = diagnostics(f);
    std::cout << "t=" << fmt_short(f.time) << " total_rho="
              << fmt(d.total_rho) << " total_u=" << fmt(d.total_u)
              << " max_rho=" << fmt(d.max_rho)
              << " grad_max_x=" << fmt(d.grad_max_x) << "\n";
  }
  std::cout << "wrote " << snaps.size() << " snapshot(s) to " << outdir
            << "\n";
  return 0;
}

int cmd_repro_figs(const std::string& outdir, int n) {
  const State left{1.5, 1.5};
  const State right{2.0, -0.5};
  const double t_end = 0.3;
  const std::vector<double> gammas{2.5, 1.3, 1.05, 1.0001};
  fs::create_directories(outdir);

  struct RunOut {
    SimConfig cfg;
    Field field;
    double wall;
  };
  // the four runs are independent; fan them out
  std::vector<std::future<RunOut>> jobs;
  for (double gamma : gammas) {
    jobs.push_back(std::async(std::launch::async, [=]() {
      SimConfig cfg{GasModel(gamma), left, right, -1.0, 1.0, n, 0.5, t_end};
      const auto t0 = std::chrono::steady_clock::now();
      Field f = run(cfg).back();
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      return RunOut{cfg, std::move(f), wall};
    }));
  }

  std::ostringstream summary;
  summary << "gamma,peak_rho,shock_gap,sigma1,sigma2,u_star\n";
  int failures = 0;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const RunOut out = jobs[k].get();
    const double gamma = gammas[k];
    const std::string tag = fmt_short(gamma);
    try {
      write_snapshot(outdir, "sim_gamma" + tag + "_t" + fmt_short(t_end),
                     out.field, out.cfg, out.wall);
      std::ofstream fd(fs::path(outdir) /
                       ("fig_gamma" + tag + "_density.csv"));
      std::ofstream fv(fs::path(outdir) /
                       ("fig_gamma" + tag + "_velocity.csv"));
      if (!fd || !fv) throw std::runtime_error("cannot write figure tables");
      fd << "x,rho\n";
      fv << "x,u\n";
      for (int i = 0; i < out.field.n(); ++i) {
        fd << fmt(out.field.x_center(i)) << "," << fmt(out.field.rho[i])
           << "\n";
        fv << fmt(out.field.x_center(i)) << "," << fmt(out.field.u[i])
           << "\n";
      }

      // exact overlay via the log-space star (finite for every gamma here)
      const StarLog st = solve_star_log(out.cfg.gas, left, right);
      std::ofstream fe(fs::path(outdir) / ("exact_gamma" + tag + "_t" +
                                           fmt_short(t_end) + ".csv"));
      if (!fe) throw std::runtime_error("cannot write exact overlay");
      fe << "x,rho,u\n";
      for (int i = 0; i < out.field.n(); ++i) {
        const double xi = out.field.x_center(i) / t_end;
        double rho, u;
        if (xi < st.sigma1) {
          rho = left.rho;
          u = left.u;
        } else if (xi > st.sigma2) {
          rho = right.rho;
          u = right.u;
        } else {
          rho = std::exp(st.L);  // representable whenever a cell lands here
          u = st.u_star;
        }
        fe << fmt(out.field.x_center(i)) << "," << fmt(rho) << "," << fmt(u)
           << "\n";
      }

      const Diagnostics d = diagnostics(out.field);
      summary << fmt(gamma) << "," << fmt(d.max_rho) << ","
              << fmt(d.shock_gap()) << "," << fmt(st.sigma1) << ","
              << fmt(st.sigma2) << "," << fmt(st.u_star) << "\n";
    } catch (const std::exception& e) {
      std::cerr << "gamma=" << tag << ": " << e.what() << "\n";
      ++failures;
    }
  }

  const DeltaWaveSolution dw = solve_delta(left, right);
  {
    std::ofstream f(fs::path(outdir) / "delta_reference.csv");
    f << "sigma,t,weight\n"
      << fmt(dw.sigma) << "," << fmt(t_end) << "," << fmt(dw.weight(t_end))
      << "\n";
  }
  {
    std::ofstream f(fs::path(outdir) / "summary.csv");
    f << summary.str();
  }
  std::cout << summary.str();
  std::cout << "delta reference: sigma=" << fmt(dw.sigma) << " w("
            << fmt_short(t_end) << ")=" << fmt(dw.weight(t_end)) << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Riemann solutions, pressureless delta-wave limits, and "
               "WENO runs for the 1-D compressible-flow system"};
  app.require_subcommand(1);

  double gamma = 1.3;
  StateFlags st;
  int samples = 0;
  double xi_min = -2.0, xi_max = 2.0;
  auto* c_solve = app.add_subcommand("solve", "exact Riemann solution");
  c_solve->add_option("--gamma", gamma, "adiabatic exponent in (1, 3)")
      ->required();
  st.add(c_solve);
  c_solve->add_option("--samples", samples, "rows of the xi,rho,u table");
  c_solve->add_option("--xi-min", xi_min, "table range lower end");
  c_solve->add_option("--xi-max", xi_max, "table range upper end");

  StateFlags st_d;
  double t_delta = 1.0;
  auto* c_delta =
      app.add_subcommand("delta", "delta wave of the pressureless system");
  st_d.add(c_delta);
  c_delta->add_option("--time", t_delta, "evaluation time for the weight");

  StateFlags st_s;
  std::vector<double> gammas;
  std::string out_file;
  auto* c_sweep =
      app.add_subcommand("sweep", "overflow-safe star states over gammas");
  c_sweep->add_option("--gammas", gammas, "comma-separated gamma list")
      ->required()
      ->delimiter(',');
  st_s.add(c_sweep);
  c_sweep->add_option("--out", out_file, "write the table here (else stdout)");

  StateFlags st_w;
  double gamma_w = 1.3, phi_center = 0.5, phi_width = 1.0;
  std::vector<double> limit_gammas;
  auto* c_weak =
      app.add_subcommand("weak", "weak-form residuals of the exact solution");
  c_weak->add_option("--gamma", gamma_w, "adiabatic exponent")->required();
  st_w.add(c_weak);
  c_weak->add_option("--phi-center", phi_center, "bump center");
  c_weak->add_option("--phi-width", phi_width, "bump half-width");
  c_weak
      ->add_option("--limit-gammas", limit_gammas,
                   "also print the concentration-pairing table")
      ->delimiter(',');

  StateFlags st_sim;
  double gamma_sim = 1.3, cfl = 0.5, t_end = 0.3, x_min = -1.0, x_max = 1.0;
  int n_cells = 200;
  std::vector<double> times;
  std::string outdir = ".";
  auto* c_sim = app.add_subcommand("simulate", "WENO run with CSV snapshots");
  c_sim->add_option("--gamma", gamma_sim, "adiabatic exponent")->required();
  st_sim.add(c_sim);
  c_sim->add_option("--n", n_cells, "cell count");
  c_sim->add_option("--cfl", cfl, "CFL number in (0, 0.6]");
  c_sim->add_option("--t-end", t_end, "end time");
  c_sim->add_option("--x-min", x_min, "left domain edge");
  c_sim->add_option("--x-max", x_max, "right domain edge");
  c_sim->add_option("--times", times, "snapshot times")->delimiter(',');
  c_sim->add_option("--outdir", outdir, "output directory");

  std::string figs_dir = "figs";
  int figs_n = 200;
  auto* c_figs = app.add_subcommand(
      "repro-figs", "four-gamma concentration study with reference tables");
  c_figs->add_option("--outdir", figs_dir, "output directory");
  c_figs->add_option("--n", figs_n, "cell count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_solve->parsed())
      return cmd_solve(gamma, st, samples, xi_min, xi_max);
    if (c_delta->parsed()) return cmd_delta(st_d, t_delta);
    if (c_sweep->parsed()) return cmd_sweep(gammas, st_s, out_file);
    if (c_weak->parsed())
      return cmd_weak(gamma_w, st_w, phi_center, phi_width, limit_gammas);
    if (c_sim->parsed())
      return cmd_simulate(gamma_sim, st_sim, n_cells, cfl, t_end, x_min,
                          x_max, times, outdir);
    if (c_figs->parsed()) return cmd_repro_figs(figs_dir, figs_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
