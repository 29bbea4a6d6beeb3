#include "lancbio/lanczos.hpp"

#include <cmath>
#include <utility>

#include "lancbio/errors.hpp"

namespace lancbio {

LanczosState lanczos_init(Vector q1) {
  LanczosState s;
  s.basis.push_back(std::move(q1));
  return s;
}

DLanczosResult dlanczos_step(const LanczosState& state, const ApplyOperator& A) {
  if (state.basis.empty())
    throw DimensionMismatchError("dlanczos_step: empty basis");

  DLanczosResult out{state, false};
  LanczosState& s = out.state;

  const Vector& qj = s.basis.back();
  Vector u = A(qj);
  if (u.size() != qj.size())
    throw DimensionMismatchError("dlanczos_step: operator changed dimension");
  if (s.basis.size() >= 2) vec::axpy(-s.beta_next, s.basis[s.basis.size() - 2], u);

  const double alpha = vec::dot(qj, u);
  Vector omega = u;
  vec::axpy(-alpha, qj, omega);

  const double beta_new = vec::norm(omega);
  s.T.extend(alpha, s.beta_next);
  if (beta_new <= 1e-12 * vec::norm(u)) {
    out.lucky_breakdown = true;
  } else {
    vec::scale(1.0 / beta_new, omega);
    s.basis.push_back(std::move(omega));
  }
  s.beta_next = beta_new;
  return out;
}

LanczosFactorization classic_lanczos(const ApplyOperator& A, const Vector& b,
                                     std::size_t m) {
  const double bn = vec::norm(b);
  if (bn == 0.0) throw DimensionMismatchError("classic_lanczos: zero start vector");
  if (m == 0) throw DimensionMismatchError("classic_lanczos: m must be >= 1");

  LanczosFactorization f;
  f.basis.push_back(vec::scaled(b, 1.0 / bn));
  double beta = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const Vector& qj = f.basis.back();
    Vector u = A(qj);
    if (f.basis.size() >= 2) vec::axpy(-beta, f.basis[f.basis.size() - 2], u);
    const double alpha = vec::dot(qj, u);
    Vector omega = u;
    vec::axpy(-alpha, qj, omega);
    const double beta_new = vec::norm(omega);
    f.T.extend(alpha, beta);
    if (beta_new <= 1e-12 * vec::norm(u)) {
      f.lucky_breakdown = true;
      f.beta_next = beta_new;
      return f;
    }
    vec::scale(1.0 / beta_new, omega);
    f.basis.push_back(std::move(omega));
    beta = beta_new;
  }
  f.beta_next = beta;
  return f;
}

Vector tridiag_correction(const LanczosState& state, const Vector& r) {
  const std::size_t j = state.steps();
  if (j == 0) throw DimensionMismatchError("tridiag_correction: no completed steps");

  Vector proj(j);
  for (std::size_t i = 0; i < j; ++i) proj[i] = vec::dot(state.basis[i], r);
  const Vector c = solve_sym_tridiag(state.T, proj);

  Vector dv(r.size(), 0.0);
  for (std::size_t i = 0; i < j; ++i) vec::axpy(c[i], state.basis[i], dv);
  return dv;
}

Vector minres_correction(const LanczosState& state, double r_norm) {
  const std::size_t j = state.steps();
  if (j == 0) throw DimensionMismatchError("minres_correction: no completed steps");

  const Vector c = tridiag_least_squares(state.T, state.beta_next, r_norm);
  Vector dv(state.basis.front().size(), 0.0);
  for (std::size_t i = 0; i < j; ++i) vec::axpy(c[i], state.basis[i], dv);
  return dv;
}

}  // namespace lancbio
