#include "lancbio/cg.hpp"

namespace lancbio {

Vector cg_solve(const ApplyOperator& A, const Vector& b, const Vector& v0,
                std::size_t iters) {
  Vector v(v0);
  Vector r = vec::sub(b, A(v));
  Vector p(r);
  double rr = vec::dot(r, r);
  for (std::size_t it = 0; it < iters; ++it) {
    if (rr == 0.0) break;
    const Vector Ap = A(p);
    const double pAp = vec::dot(p, Ap);
    if (pAp <= 0.0) break;  // curvature guard; SPD assumed on the oracle problems
    const double alpha = rr / pAp;
    vec::axpy(alpha, p, v);
    vec::axpy(-alpha, Ap, r);
    const double rr_new = vec::dot(r, r);
    const double beta = rr_new / rr;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = r[i] + beta * p[i];
    rr = rr_new;
  }
  return v;
}

}  // namespace lancbio
