#include "lancbio/finite_diff.hpp"

namespace lancbio {

Vector finite_diff_gradient(const ScalarField& fn, const Vector& x, double h) {
  Vector g(x.size());
  Vector p(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    p[i] = xi + h;
    const double fp = fn(p);
    p[i] = xi - h;
    const double fm = fn(p);
    p[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

Vector finite_diff_directional(const VectorField& field, const Vector& x,
                               const Vector& v, double h) {
  const double vn = vec::norm(v);
  if (vn == 0.0) return Vector(field(x).size(), 0.0);
  Vector xp(x), xm(x);
  vec::axpy(h / vn, v, xp);
  vec::axpy(-h / vn, v, xm);
  Vector fp = field(xp);
  const Vector fm = field(xm);
  for (std::size_t i = 0; i < fp.size(); ++i) fp[i] = (fp[i] - fm[i]) * vn / (2.0 * h);
  return fp;
}

}  // namespace lancbio
