#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lancbio/oracles.hpp"
#include "lancbio/vec.hpp"

namespace lancbio {

/// Shared solver knobs. Not every solver reads every field: m / m0 / ramp
/// belong to the subspace solvers, eta to SubBiO / SOBA / the Neumann
/// family and AmIGO-GD, inner_iters to the AmIGO variants, neumann_terms to
/// the Neumann family.
struct SolverConfig {
  double lambda = 0.01;  // outer step for x
  double theta = 0.01;   // lower-level step for y
  double eta = 0.01;

  int m = 10;   // subspace dimension = epoch length
  int m0 = 0;   // warm-up steps per epoch with lambda = 0
  int K = 100;  // outer iteration budget

  int inner_iters = 5;
  int neumann_terms = 10;

  /// Grow the epoch length 1,2,...,m over the first m epochs, then hold.
  bool ramp = true;

  /// lambda_k = lambda / k^lambda_decay (0 = constant step).
  double lambda_decay = 0.0;

  /// TTSA couples both steps to the iteration count.
  double ttsa_lambda_decay = 0.6;
  double ttsa_theta_decay = 0.4;

  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

struct TraceRecord {
  int iter = 0;
  double wall_time_s = 0.0;
  double hypergrad_norm = 0.0;
  double residual_norm = 0.0;
  double upper_value = 0.0;
  double lower_grad_norm = 0.0;
  std::optional<double> test_metric;
  std::uint64_t n_hvp = 0;
  std::uint64_t n_jvp = 0;
  std::uint64_t n_grad = 0;
};

/// Breakdown / restart events, kept out of the CSV columns.
struct RunEvent {
  int iter = 0;
  std::string kind;
};

/// Everything about iteration k at the pre-update iterate (x_k, y_k) with
/// the post-correction v_k.
struct IterSnapshot {
  int iter;
  const Vector& x;
  const Vector& y;
  const Vector& v_prev;
  const Vector& v;
  const Vector& b;  // grad_f_y(x_k, y_k)
  const TraceRecord& record;
};

using IterObserver = std::function<void(const IterSnapshot&)>;
using MetricFn = std::function<double(const Vector& x, const Vector& y)>;

struct RunHooks {
  IterObserver observer;
  MetricFn test_metric;
  int metric_every = 1;
  std::optional<double> time_budget_s;
};

struct RunResult {
  Vector x_final, y_final, v_final;
  std::vector<TraceRecord> trace;
  EvalCounters counters;
  std::vector<RunEvent> events;
};

/// Dynamic Lanczos-aided solver: epochs of m outer iterations share one
/// anchor v_bar and one w = A v_bar; each iteration extends the Lanczos
/// basis by one step (one HVP), solves the small tridiagonal system
/// T c = Q'r for the correction, and applies the hyper-gradient /
/// lower-level updates. HVP cost is m + 1 per full epoch.
RunResult lancbio_run(const BilevelOracles& P, const SolverConfig& cfg,
                      const Vector& x0, const Vector& y0, const Vector& v0,
                      const RunHooks& hooks = {});

/// Same loop with the minimal-residual correction (least squares on the
/// (j+1) x j bordered tridiagonal), defined for indefinite lower-level
/// Hessians.
RunResult lancbio_minres_run(const BilevelOracles& P, const SolverConfig& cfg,
                             const Vector& x0, const Vector& y0, const Vector& v0,
                             const RunHooks& hooks = {});

/// Two-dimensional subspace solver: v_k minimizes the quadratic model over
/// span{b_k, (I - eta A_k) v_{k-1}} (3 HVPs per iteration, 2 when the
/// subspace degenerates to span{b_k}).
RunResult subbio_run(const BilevelOracles& P, const SolverConfig& cfg,
                     const Vector& x0, const Vector& y0, const Vector& v0,
                     const RunHooks& hooks = {});

enum class BaselineKind { AmigoGD, AmigoCG, Soba, StocBioNeumann, Ttsa };

/// Reference single-loop methods behind the same run contract:
///  - AmigoGD: inner_iters gradient steps on the quadratic model, warm start
///  - AmigoCG: inner_iters CG steps, warm start
///  - Soba: v += eta (b - A v), one step
///  - StocBioNeumann: v = eta sum_{i<N} (I - eta A)^i b, rebuilt every
///    iteration (no warm start)
///  - Ttsa: Neumann estimate with step sizes lambda/k^0.6, theta/k^0.4
RunResult baseline_run(BaselineKind kind, const BilevelOracles& P,
                       const SolverConfig& cfg, const Vector& x0, const Vector& y0,
                       const Vector& v0, const RunHooks& hooks = {});

}  // namespace lancbio
