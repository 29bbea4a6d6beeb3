#pragma once

#include <functional>
#include <vector>

#include "lancbio/tridiag.hpp"
#include "lancbio/vec.hpp"

namespace lancbio {

/// Matrix-free operator w -> A w. In the bilevel setting this is the
/// lower-level Hessian-vector product at the current iterate, so the
/// operator may drift between invocations.
using ApplyOperator = std::function<Vector(const Vector&)>;

/// Incremental Lanczos state for one epoch.
///
/// After `steps()` completed steps the state holds basis vectors
/// q_1..q_{steps+1} (q_{steps+1} is the lookahead vector feeding the next
/// step), the steps x steps projection T, and the trailing beta_{steps+1}
/// that borders T in the (steps+1) x steps least-squares matrix. A lucky
/// breakdown keeps T extended but appends no new basis vector; the
/// correction subspace is always the first T.size() basis vectors.
struct LanczosState {
  std::vector<Vector> basis;
  SymTridiagonal T;
  double beta_next = 0.0;

  std::size_t steps() const { return T.size(); }
};

/// Start an epoch from a unit-norm first basis vector.
LanczosState lanczos_init(Vector q1);

struct DLanczosResult {
  LanczosState state;
  /// ||omega_j|| <= 1e-12 ||u_j||: the Krylov space became invariant under
  /// the current operator. The caller treats the current correction as
  /// converged and restarts the epoch at the next iteration boundary.
  bool lucky_breakdown = false;
};

/// One dynamic Lanczos step: u_j = A q_j - beta_j q_{j-1}, alpha_j = q_j'u_j,
/// omega_j = u_j - alpha_j q_j, beta_{j+1} = ||omega_j||, q_{j+1} = omega_j /
/// beta_{j+1}. T gains (alpha_j, beta_j). Exactly one invocation of A.
DLanczosResult dlanczos_step(const LanczosState& state, const ApplyOperator& A);

/// Full m-step factorization with a static operator:
/// A Q_m = Q_m T_m + beta_{m+1} q_{m+1} e_m'. Returns a truncated
/// factorization with the flag set on lucky breakdown.
struct LanczosFactorization {
  SymTridiagonal T;
  std::vector<Vector> basis;  // q_1..q_{steps+1}, or q_1..q_steps on breakdown
  double beta_next = 0.0;
  bool lucky_breakdown = false;

  std::size_t steps() const { return T.size(); }
};

LanczosFactorization classic_lanczos(const ApplyOperator& A, const Vector& b,
                                     std::size_t m);

/// Galerkin correction over the current subspace: solves T c = Q' r and
/// returns Q c. Dimension of the subspace is state.steps().
Vector tridiag_correction(const LanczosState& state, const Vector& r);

/// Minimal-residual correction for possibly indefinite operators:
/// c = argmin || r_norm e_1 - [T; beta e_j'] c ||, returns Q c.
/// Propagates RankDeficientError from the least-squares kernel.
Vector minres_correction(const LanczosState& state, double r_norm);

}  // namespace lancbio
