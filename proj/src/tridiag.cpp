#include "lancbio/tridiag.hpp"

#include <cmath>
#include <cstddef>

#include "lancbio/errors.hpp"

namespace lancbio {

double SymTridiagonal::inf_norm() const {
  const std::size_t n = diag.size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    if (row > best) best = row;
  }
  return best;
}

Vector tridiag_matvec(const SymTridiagonal& T, const Vector& x) {
  const std::size_t n = T.size();
  Vector y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = T.diag[i] * x[i];
    if (i > 0) s += T.offdiag[i - 1] * x[i - 1];
    if (i + 1 < n) s += T.offdiag[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

Vector solve_sym_tridiag(const SymTridiagonal& T, const Vector& rhs) {
  const std::size_t n = T.size();
  if (n == 0 || rhs.size() != n)
    throw DimensionMismatchError("solve_sym_tridiag: size mismatch");

  const double guard = 1e-12 * T.inf_norm();

  // LDL' factorization: T = L D L' with unit lower bidiagonal L.
  std::vector<double> d(n), l(n > 0 ? n - 1 : 0);
  d[0] = T.diag[0];
  if (std::abs(d[0]) <= guard) throw NearSingularError("tridiagonal pivot underflow");
  for (std::size_t i = 1; i < n; ++i) {
    l[i - 1] = T.offdiag[i - 1] / d[i - 1];
    d[i] = T.diag[i] - l[i - 1] * T.offdiag[i - 1];
    if (std::abs(d[i]) <= guard) throw NearSingularError("tridiagonal pivot underflow");
  }

  Vector z(rhs);
  for (std::size_t i = 1; i < n; ++i) z[i] -= l[i - 1] * z[i - 1];
  for (std::size_t i = 0; i < n; ++i) z[i] /= d[i];
  for (std::size_t i = n - 1; i > 0; --i) z[i - 1] -= l[i - 1] * z[i];
  return z;
}

Vector tridiag_least_squares(const SymTridiagonal& T, double trailing_beta,
                             double rhs_norm) {
  const std::size_t j = T.size();
  if (j == 0) throw DimensionMismatchError("tridiag_least_squares: empty system");

  // Band of the (j+1) x j matrix [T; beta e_j']: after the Givens sweep the
  // triangular factor has three nonzero diagonals r0 (main), r1, r2.
  std::vector<double> r0(j), r1(j > 0 ? j - 1 : 0, 0.0), r2(j > 1 ? j - 2 : 0, 0.0);
  for (std::size_t i = 0; i < j; ++i) r0[i] = T.diag[i];
  for (std::size_t i = 0; i + 1 < j; ++i) r1[i] = T.offdiag[i];

  Vector rhs(j + 1, 0.0);
  rhs[0] = rhs_norm;

  // sub[i] holds the subdiagonal entry of column i still to be eliminated.
  // Row j+1 contributes trailing_beta below the last diagonal entry.
  for (std::size_t i = 0; i < j; ++i) {
    const double sub = (i + 1 < j) ? T.offdiag[i] : trailing_beta;
    const double a = r0[i];
    const double r = std::hypot(a, sub);
    double c = 1.0, s = 0.0;
    if (r > 0.0) {
      c = a / r;
      s = sub / r;
    }
    r0[i] = r;
    if (i + 1 < j) {
      // Rotate (row i, row i+1) across columns i+1, i+2.
      const double t1 = r1[i];
      const double d1 = T.diag[i + 1];
      r1[i] = c * t1 + s * d1;
      r0[i + 1] = -s * t1 + c * d1;
      if (i + 2 < j) {
        const double o2 = T.offdiag[i + 1];
        r2[i] = s * o2;
        r1[i + 1] = c * o2;
      }
    }
    const double b1 = rhs[i], b2 = rhs[i + 1];
    rhs[i] = c * b1 + s * b2;
    rhs[i + 1] = -s * b1 + c * b2;
  }

  double dmax = 0.0, dmin = 0.0;
  for (std::size_t i = 0; i < j; ++i) {
    const double a = std::abs(r0[i]);
    if (i == 0 || a > dmax) dmax = a;
    if (i == 0 || a < dmin) dmin = a;
  }
  if (dmin <= 1e-12 * dmax)
    throw RankDeficientError("tridiagonal least squares lost column rank");

  Vector c(j);
  for (std::size_t ii = j; ii-- > 0;) {
    double s = rhs[ii];
    if (ii + 1 < j) s -= r1[ii] * c[ii + 1];
    if (ii + 2 < j) s -= r2[ii] * c[ii + 2];
    c[ii] = s / r0[ii];
  }
  return c;
}

}  // namespace lancbio
