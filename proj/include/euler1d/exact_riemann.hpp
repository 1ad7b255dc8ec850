#ifndef EULER1D_EXACT_RIEMANN_HPP_
#define EULER1D_EXACT_RIEMANN_HPP_

#include <optional>
#include <utility>

#include "euler1d/model.hpp"
#include "euler1d/wave_curves.hpp"

namespace euler1d {

struct RiemannProblem {
  GasModel gas;
  State left;
  State right;
};

//! One elementary wave of the fan. A shock has head == tail == sigma; a
//! rarefaction spans [head, tail] in xi = x/t with head <= tail.
struct Wave {
  WaveKind kind;
  double head;
  double tail;
  bool is_shock() const { return kind == WaveKind::S1 || kind == WaveKind::S2; }
  double sigma() const { return head; }
};

//! Self-similar solution of a Riemann problem. Speeds are ordered
//! wave1.head <= wave1.tail <= wave2.head <= wave2.tail. In region V the
//! star state is absent and [wave1.tail, wave2.head] is vacuum.
struct WaveFan {
  GasModel gas;
  State left;
  State right;
  Region config;
  std::optional<State> star;
  Wave wave1;
  Wave wave2;
};

struct Sample {
  double rho;
  double u;
  bool vacuum;
};

//! Exact solution of the Riemann problem. The star density is located by
//! bisection on the composite-curve mismatch to 1e-13 relative; shock
//! speeds are validated against both jump conditions (1e-10 relative) and
//! the Lax inequalities before returning.
WaveFan solve(const RiemannProblem& p);

//! Pointwise evaluation at xi = x/t. Inside a vacuum interval returns
//! rho = 0 with the linear-in-xi velocity continuation and the flag set.
Sample sample(const WaveFan& fan, double xi);

inline Sample sample_at(const WaveFan& fan, double t, double x) {
  return sample(fan, x / t);
}

//! Raw defects of the two jump conditions across (left, right) at speed
//! sigma: r1 = sigma [rho] - [rho u], r2 = sigma [u] - [u^2/2 + p].
std::pair<double, double> rh_residual(const GasModel& g, const State& left,
                                      const State& right, double sigma);

}  // namespace euler1d

#endif  // EULER1D_EXACT_RIEMANN_HPP_
