#pragma once

#include <cstdint>
#include <memory>

#include "lancbio/vec.hpp"

namespace lancbio {

/// First- and second-order oracles of a bilevel problem
///
///   min_x f(x, y*(x))  s.t.  y*(x) = argmin_y g(x, y).
///
/// Everything the solvers need: values, gradients, the lower-level
/// Hessian-vector product and the cross Jacobian-vector product. No matrix
/// is ever formed. Implementations must be safe for concurrent read-only
/// evaluation.
class BilevelOracles {
 public:
  virtual ~BilevelOracles() = default;

  virtual std::size_t dim_x() const = 0;
  virtual std::size_t dim_y() const = 0;

  virtual double f_value(const Vector& x, const Vector& y) const = 0;
  virtual double g_value(const Vector& x, const Vector& y) const = 0;

  virtual Vector grad_f_x(const Vector& x, const Vector& y) const = 0;
  virtual Vector grad_f_y(const Vector& x, const Vector& y) const = 0;
  virtual Vector grad_g_y(const Vector& x, const Vector& y) const = 0;

  /// Hessian action: (d^2 g / dy dy) v, length dim_y.
  virtual Vector hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const = 0;
  /// Cross action: (d^2 g / dx dy) v for v of length dim_y; result length dim_x.
  virtual Vector jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const = 0;

  void check_dims(const Vector& x, const Vector& y) const;
};

/// Oracle-call tallies. Incremented exactly once per call when evaluations
/// go through CountedOracles; instrumentation (trace metrics) bypasses the
/// counters so budgets reflect algorithmic work only.
struct EvalCounters {
  std::uint64_t n_grad_f = 0;
  std::uint64_t n_grad_g = 0;
  std::uint64_t n_hvp = 0;
  std::uint64_t n_jvp = 0;
  std::uint64_t n_value = 0;

  std::uint64_t n_grad() const { return n_grad_f + n_grad_g; }
};

/// Pass-through wrapper that tallies every oracle call.
class CountedOracles : public BilevelOracles {
 public:
  CountedOracles(const BilevelOracles& inner, EvalCounters& counters)
      : inner_(inner), counters_(counters) {}

  std::size_t dim_x() const override { return inner_.dim_x(); }
  std::size_t dim_y() const override { return inner_.dim_y(); }

  double f_value(const Vector& x, const Vector& y) const override {
    ++counters_.n_value;
    return inner_.f_value(x, y);
  }
  double g_value(const Vector& x, const Vector& y) const override {
    ++counters_.n_value;
    return inner_.g_value(x, y);
  }
  Vector grad_f_x(const Vector& x, const Vector& y) const override {
    ++counters_.n_grad_f;
    return inner_.grad_f_x(x, y);
  }
  Vector grad_f_y(const Vector& x, const Vector& y) const override {
    ++counters_.n_grad_f;
    return inner_.grad_f_y(x, y);
  }
  Vector grad_g_y(const Vector& x, const Vector& y) const override {
    ++counters_.n_grad_g;
    return inner_.grad_g_y(x, y);
  }
  Vector hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const override {
    ++counters_.n_hvp;
    return inner_.hvp_gyy(x, y, v);
  }
  Vector jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const override {
    ++counters_.n_jvp;
    return inner_.jvp_gxy(x, y, v);
  }

 private:
  const BilevelOracles& inner_;
  EvalCounters& counters_;
};

/// Hyper-gradient estimate at (x, y, v): grad = grad_f_x - jvp_gxy(v),
/// residual_norm = || hvp_gyy(v) - grad_f_y || with all quantities at the
/// same (x, y).
struct HyperGradEstimate {
  Vector grad;
  double residual_norm = 0.0;
};

/// Standalone form: exactly one jvp, one hvp and two gradient calls.
HyperGradEstimate hypergrad_estimate(const BilevelOracles& P, const Vector& x,
                                     const Vector& y, const Vector& v);

/// Solver form: b = grad_f_y(x, y) and Av = hvp_gyy(x, y, v) are supplied by
/// the caller (solvers pass their cached or instrumentation products), so
/// only grad_f_x and the jvp are evaluated here.
HyperGradEstimate hypergrad_estimate(const BilevelOracles& P, const Vector& x,
                                     const Vector& y, const Vector& v,
                                     const Vector& b, const Vector& Av);

/// One lower-level gradient descent step y - theta * grad_g_y(x, y).
Vector lower_gd_step(const BilevelOracles& P, const Vector& x, const Vector& y,
                     double theta);

/// Reference hyper-gradient: solves the lower level to ||grad_g_y|| <=
/// inner_tol, assembles the dense Hessian by applying hvp_gyy to basis
/// vectors, and evaluates the implicit-function-theorem formula exactly.
/// TEST ORACLE ONLY -- cost is dim_y hvp calls plus a dense factorization.
Vector exact_hypergrad(const BilevelOracles& P, const Vector& x, double inner_tol,
                       std::size_t max_inner_iters = 2000000);

}  // namespace lancbio
