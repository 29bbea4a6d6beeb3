#include "lancbio/oracles.hpp"

#include <cmath>

#include "lancbio/dense.hpp"
#include "lancbio/errors.hpp"

namespace lancbio {

void BilevelOracles::check_dims(const Vector& x, const Vector& y) const {
  if (x.size() != dim_x() || y.size() != dim_y())
    throw DimensionMismatchError("oracle input dimensions disagree with the problem");
}

HyperGradEstimate hypergrad_estimate(const BilevelOracles& P, const Vector& x,
                                     const Vector& y, const Vector& v) {
  P.check_dims(x, y);
  if (v.size() != P.dim_y())
    throw DimensionMismatchError("hypergrad_estimate: v has wrong length");
  const Vector b = P.grad_f_y(x, y);
  const Vector Av = P.hvp_gyy(x, y, v);
  return hypergrad_estimate(P, x, y, v, b, Av);
}

HyperGradEstimate hypergrad_estimate(const BilevelOracles& P, const Vector& x,
                                     const Vector& y, const Vector& v,
                                     const Vector& b, const Vector& Av) {
  P.check_dims(x, y);
  if (v.size() != P.dim_y() || b.size() != P.dim_y() || Av.size() != P.dim_y())
    throw DimensionMismatchError("hypergrad_estimate: vector length mismatch");

  HyperGradEstimate est;
  est.grad = P.grad_f_x(x, y);
  vec::axpy(-1.0, P.jvp_gxy(x, y, v), est.grad);
  est.residual_norm = vec::norm(vec::sub(Av, b));
  return est;
}

Vector lower_gd_step(const BilevelOracles& P, const Vector& x, const Vector& y,
                     double theta) {
  Vector out(y);
  vec::axpy(-theta, P.grad_g_y(x, y), out);
  return out;
}

Vector exact_hypergrad(const BilevelOracles& P, const Vector& x, double inner_tol,
                       std::size_t max_inner_iters) {
  const std::size_t dy = P.dim_y();
  Vector y(dy, 0.0);

  // Estimate the lower-level curvature scale by a few power-iteration steps
  // so the descent step size needs no user input.
  Vector z(dy, 0.0);
  for (std::size_t i = 0; i < dy; ++i) z[i] = 1.0 / std::sqrt(static_cast<double>(dy));
  double lmax = 1.0;
  for (int it = 0; it < 30; ++it) {
    Vector Az = P.hvp_gyy(x, y, z);
    const double nz = vec::norm(Az);
    if (nz == 0.0) break;
    lmax = nz;
    z = vec::scaled(Az, 1.0 / nz);
  }
  const double step = 1.0 / lmax;

  bool converged = false;
  for (std::size_t it = 0; it < max_inner_iters; ++it) {
    const Vector g = P.grad_g_y(x, y);
    if (vec::norm(g) <= inner_tol) {
      converged = true;
      break;
    }
    vec::axpy(-step, g, y);
  }
  if (!converged && vec::norm(P.grad_g_y(x, y)) > inner_tol)
    throw NoConvergenceError("exact_hypergrad: inner solve stalled");

  // Dense Hessian column by column from the matrix-free oracle.
  DenseMatrix A(dy, dy);
  Vector e(dy, 0.0);
  for (std::size_t j = 0; j < dy; ++j) {
    e[j] = 1.0;
    const Vector col = P.hvp_gyy(x, y, e);
    e[j] = 0.0;
    for (std::size_t i = 0; i < dy; ++i) A(i, j) = col[i];
  }
  const Vector vstar = dense_solve(A, P.grad_f_y(x, y));

  Vector grad = P.grad_f_x(x, y);
  vec::axpy(-1.0, P.jvp_gxy(x, y, vstar), grad);
  return grad;
}

}  // namespace lancbio
