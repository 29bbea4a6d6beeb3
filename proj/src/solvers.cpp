#include "lancbio/solvers.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "lancbio/cg.hpp"
#include "lancbio/errors.hpp"
#include "lancbio/lanczos.hpp"

namespace lancbio {

void SolverConfig::validate() const {
  if (lambda < 0.0 || theta <= 0.0 || eta <= 0.0)
    throw std::invalid_argument("SolverConfig: step sizes must be positive");
  if (m < 1) throw std::invalid_argument("SolverConfig: m must be >= 1");
  if (m0 < 0 || m0 >= m) throw std::invalid_argument("SolverConfig: need 0 <= m0 < m");
  if (K < 1) throw std::invalid_argument("SolverConfig: K must be >= 1");
  if (inner_iters < 1) throw std::invalid_argument("SolverConfig: inner_iters must be >= 1");
  if (neumann_terms < 1) throw std::invalid_argument("SolverConfig: neumann_terms must be >= 1");
  if (lambda_decay < 0.0) throw std::invalid_argument("SolverConfig: lambda_decay must be >= 0");
}

namespace {

using Clock = std::chrono::steady_clock;

/// Shared per-run state: the counting wrapper drives all algorithmic oracle
/// calls; trace metrics go through the raw problem so budgets stay honest.
struct RunContext {
  RunContext(const BilevelOracles& problem, const SolverConfig& config,
             const RunHooks& run_hooks)
      : raw(problem), cfg(config), hooks(run_hooks), counted(problem, result.counters),
        start(Clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  /// Records metrics at (x, y, v), applies the x and y updates in place,
  /// and reports whether the run should continue (time budget).
  bool finish_iteration(int k, Vector& x, Vector& y, const Vector& v_prev,
                        const Vector& v, const Vector& b, double lambda_k) {
    // Instrumentation residual: the true ||A_k v_k - b_k|| at the current
    // iterate, recomputable offline bit-for-bit.
    const Vector Av = raw.hvp_gyy(x, y, v);
    const HyperGradEstimate est = hypergrad_estimate(counted, x, y, v, b, Av);

    TraceRecord rec;
    rec.iter = k;
    rec.hypergrad_norm = vec::norm(est.grad);
    rec.residual_norm = est.residual_norm;
    rec.upper_value = raw.f_value(x, y);
    rec.lower_grad_norm = vec::norm(raw.grad_g_y(x, y));
    if (hooks.test_metric && (k % std::max(1, hooks.metric_every) == 0 || k == cfg.K))
      rec.test_metric = hooks.test_metric(x, y);

    Vector x_snap, y_snap;
    if (hooks.observer) {
      x_snap = x;
      y_snap = y;
    }

    vec::axpy(-lambda_k, est.grad, x);
    Vector y_next = lower_gd_step(counted, x, y, theta_k(k));
    y.swap(y_next);

    rec.wall_time_s = elapsed();
    rec.n_hvp = result.counters.n_hvp;
    rec.n_jvp = result.counters.n_jvp;
    rec.n_grad = result.counters.n_grad();
    result.trace.push_back(rec);

    if (hooks.observer)
      hooks.observer(IterSnapshot{k, x_snap, y_snap, v_prev, v, b, result.trace.back()});
    return !(hooks.time_budget_s && elapsed() > *hooks.time_budget_s);
  }

  double lambda_k(int k, bool warmup) const {
    if (warmup) return 0.0;
    double l = cfg.lambda;
    if (decay_lambda > 0.0) l /= std::pow(static_cast<double>(k), decay_lambda);
    return l;
  }

  double theta_k(int k) const {
    double t = cfg.theta;
    if (decay_theta > 0.0) t /= std::pow(static_cast<double>(k), decay_theta);
    return t;
  }

  const BilevelOracles& raw;
  const SolverConfig& cfg;
  const RunHooks& hooks;
  RunResult result;
  CountedOracles counted;
  Clock::time_point start;
  double decay_lambda = 0.0;
  double decay_theta = 0.0;
};

void check_run_inputs(const BilevelOracles& P, const SolverConfig& cfg,
                      const Vector& x0, const Vector& y0, const Vector& v0) {
  cfg.validate();
  P.check_dims(x0, y0);
  if (v0.size() != P.dim_y())
    throw DimensionMismatchError("solver: v0 has wrong length");
}

RunResult lancbio_driver(const BilevelOracles& P, const SolverConfig& cfg,
                         const Vector& x0, const Vector& y0, const Vector& v0,
                         const RunHooks& hooks, bool minres) {
  check_run_inputs(P, cfg, x0, y0, v0);
  RunContext ctx(P, cfg, hooks);
  ctx.decay_lambda = cfg.lambda_decay;

  Vector x(x0), y(y0), v(v0);
  const std::size_t dy = P.dim_y();

  int epoch = -1;
  int steps_in_epoch = 0;
  int m_eff = 0;
  bool force_restart = true;
  bool subspace_dead = false;  // epoch restarted onto a zero residual
  Vector v_bar(v0), w(dy, 0.0), dv(dy, 0.0);
  LanczosState lz;

  const ApplyOperator A = [&](const Vector& u) { return ctx.counted.hvp_gyy(x, y, u); };

  for (int k = 1; k <= cfg.K; ++k) {
    Vector b = ctx.counted.grad_f_y(x, y);

    if (force_restart || steps_in_epoch >= m_eff) {
      ++epoch;
      m_eff = cfg.ramp ? std::min(epoch + 1, cfg.m) : cfg.m;
      steps_in_epoch = 0;
      force_restart = false;
      subspace_dead = false;
      v_bar = v;
      w = ctx.counted.hvp_gyy(x, y, v_bar);
      Vector r0 = vec::sub(b, w);
      const double rn = vec::norm(r0);
      dv.assign(dy, 0.0);
      if (rn > 0.0) {
        vec::scale(1.0 / rn, r0);
        lz = lanczos_init(std::move(r0));
      } else {
        // v_bar already solves the system; idle out this epoch.
        subspace_dead = true;
        force_restart = true;
        ctx.result.events.push_back({k, "zero-residual-restart"});
      }
    }

    if (!subspace_dead) {
      DLanczosResult step = dlanczos_step(lz, A);
      lz = std::move(step.state);
      if (step.lucky_breakdown) {
        force_restart = true;
        ctx.result.events.push_back({k, "lucky-breakdown"});
      }
      const Vector r = vec::sub(b, w);
      try {
        dv = minres ? minres_correction(lz, vec::norm(r)) : tridiag_correction(lz, r);
      } catch (const NearSingularError&) {
        // Keep the previous correction and restart at the next boundary.
        force_restart = true;
        ctx.result.events.push_back({k, "near-singular"});
      } catch (const RankDeficientError&) {
        force_restart = true;
        ctx.result.events.push_back({k, "rank-deficient"});
      }
    }

    const Vector v_prev = v;
    v = vec::add(v_bar, dv);
    ++steps_in_epoch;

    const double lam = ctx.lambda_k(k, steps_in_epoch <= cfg.m0);
    if (!ctx.finish_iteration(k, x, y, v_prev, v, b, lam)) break;
  }

  ctx.result.x_final = std::move(x);
  ctx.result.y_final = std::move(y);
  ctx.result.v_final = std::move(v);
  return std::move(ctx.result);
}

}  // namespace

RunResult lancbio_run(const BilevelOracles& P, const SolverConfig& cfg,
                      const Vector& x0, const Vector& y0, const Vector& v0,
                      const RunHooks& hooks) {
  return lancbio_driver(P, cfg, x0, y0, v0, hooks, /*minres=*/false);
}

RunResult lancbio_minres_run(const BilevelOracles& P, const SolverConfig& cfg,
                             const Vector& x0, const Vector& y0, const Vector& v0,
                             const RunHooks& hooks) {
  return lancbio_driver(P, cfg, x0, y0, v0, hooks, /*minres=*/true);
}

RunResult subbio_run(const BilevelOracles& P, const SolverConfig& cfg,
                     const Vector& x0, const Vector& y0, const Vector& v0,
                     const RunHooks& hooks) {
  check_run_inputs(P, cfg, x0, y0, v0);
  RunContext ctx(P, cfg, hooks);
  ctx.decay_lambda = cfg.lambda_decay;

  Vector x(x0), y(y0), v(v0);
  const double eta = cfg.eta;

  for (int k = 1; k <= cfg.K; ++k) {
    const Vector b = ctx.counted.grad_f_y(x, y);
    const Vector v_prev = v;

    // S_k = [b, (I - eta A) v]; solve the 2-d reduction of the quadratic
    // model on an orthonormalized basis. A b and A s2 complete the
    // projection; A u1, A u2 follow by linearity.
    const Vector Av = ctx.counted.hvp_gyy(x, y, v);
    Vector s2 = v;
    vec::axpy(-eta, Av, s2);

    const Vector Ab = ctx.counted.hvp_gyy(x, y, b);
    const double bn = vec::norm(b);
    if (bn > 0.0) {
      const Vector u1 = vec::scaled(b, 1.0 / bn);
      const Vector Au1 = vec::scaled(Ab, 1.0 / bn);
      const double proj = vec::dot(u1, s2);
      Vector w2 = s2;
      vec::axpy(-proj, u1, w2);
      const double wn = vec::norm(w2);

      bool solved_2d = false;
      if (wn > 1e-10 * bn) {
        const Vector As2 = ctx.counted.hvp_gyy(x, y, s2);
        Vector Au2 = As2;
        vec::axpy(-proj, Au1, Au2);
        vec::scale(1.0 / wn, w2);
        vec::scale(1.0 / wn, Au2);
        const double m11 = vec::dot(u1, Au1);
        const double m12 = vec::dot(u1, Au2);
        const double m22 = vec::dot(w2, Au2);
        const double det = m11 * m22 - m12 * m12;
        const double scale = std::max({std::abs(m11), std::abs(m12), std::abs(m22)});
        if (std::abs(det) > 1e-28 * scale * scale) {
          const double z1 = m22 * bn / det;
          const double z2 = -m12 * bn / det;
          v = vec::scaled(u1, z1);
          vec::axpy(z2, w2, v);
          solved_2d = true;
        }
      }
      if (!solved_2d) {
        // Degenerate subspace: one-dimensional Rayleigh step on span{b}.
        const double bAb = vec::dot(b, Ab);
        if (bAb > 0.0) v = vec::scaled(b, vec::dot(b, b) / bAb);
        ctx.result.events.push_back({k, "degenerate-subspace"});
      }
    } else {
      // b = 0: the model's minimizer over any subspace is 0.
      v.assign(v.size(), 0.0);
    }

    const double lam = ctx.lambda_k(k, false);
    if (!ctx.finish_iteration(k, x, y, v_prev, v, b, lam)) break;
  }

  ctx.result.x_final = std::move(x);
  ctx.result.y_final = std::move(y);
  ctx.result.v_final = std::move(v);
  return std::move(ctx.result);
}

RunResult baseline_run(BaselineKind kind, const BilevelOracles& P,
                       const SolverConfig& cfg, const Vector& x0, const Vector& y0,
                       const Vector& v0, const RunHooks& hooks) {
  check_run_inputs(P, cfg, x0, y0, v0);
  RunContext ctx(P, cfg, hooks);
  ctx.decay_lambda = cfg.lambda_decay;
  if (kind == BaselineKind::Ttsa) {
    ctx.decay_lambda = cfg.ttsa_lambda_decay;
    ctx.decay_theta = cfg.ttsa_theta_decay;
  }

  Vector x(x0), y(y0), v(v0);
  const double eta = cfg.eta;

  const ApplyOperator A = [&](const Vector& u) { return ctx.counted.hvp_gyy(x, y, u); };

  for (int k = 1; k <= cfg.K; ++k) {
    const Vector b = ctx.counted.grad_f_y(x, y);
    const Vector v_prev = v;

    switch (kind) {
      case BaselineKind::AmigoGD:
        for (int i = 0; i < cfg.inner_iters; ++i) {
          const Vector Av = ctx.counted.hvp_gyy(x, y, v);
          for (std::size_t j = 0; j < v.size(); ++j) v[j] -= eta * (Av[j] - b[j]);
        }
        break;
      case BaselineKind::AmigoCG:
        v = cg_solve(A, b, v, static_cast<std::size_t>(cfg.inner_iters));
        break;
      case BaselineKind::Soba: {
        const Vector Av = ctx.counted.hvp_gyy(x, y, v);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= eta * (Av[j] - b[j]);
        break;
      }
      case BaselineKind::StocBioNeumann:
      case BaselineKind::Ttsa: {
        // v = eta * sum_{i=0}^{N-1} (I - eta A)^i b, rebuilt from scratch.
        Vector term = b;
        Vector acc = b;
        for (int i = 1; i < cfg.neumann_terms; ++i) {
          const Vector At = ctx.counted.hvp_gyy(x, y, term);
          vec::axpy(-eta, At, term);
          vec::axpy(1.0, term, acc);
        }
        v = vec::scaled(acc, eta);
        break;
      }
    }

    const double lam = ctx.lambda_k(k, false);
    if (!ctx.finish_iteration(k, x, y, v_prev, v, b, lam)) break;
  }

  ctx.result.x_final = std::move(x);
  ctx.result.y_final = std::move(y);
  ctx.result.v_final = std::move(v);
  return std::move(ctx.result);
}

}  // namespace lancbio
