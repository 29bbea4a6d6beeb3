#include "lancbio/dense.hpp"

#include <cmath>

#include "lancbio/errors.hpp"

namespace lancbio {

Vector matvec(const DenseMatrix& A, const Vector& x) {
  if (x.size() != A.cols) throw DimensionMismatchError("matvec: size mismatch");
  Vector y(A.rows, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    double s = 0.0;
    const double* row = &A.a[i * A.cols];
    for (std::size_t j = 0; j < A.cols; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

Vector dense_solve(const DenseMatrix& A, const Vector& b) {
  const std::size_t n = A.rows;
  if (A.cols != n || b.size() != n)
    throw DimensionMismatchError("dense_solve: size mismatch");

  // Lower Cholesky factor, in place on a copy.
  std::vector<double> L(A.a);
  for (std::size_t k = 0; k < n; ++k) {
    double d = L[k * n + k];
    for (std::size_t j = 0; j < k; ++j) d -= L[k * n + j] * L[k * n + j];
    if (d <= 0.0) throw NotPositiveDefiniteError("dense_solve: nonpositive pivot");
    d = std::sqrt(d);
    L[k * n + k] = d;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = L[i * n + k];
      for (std::size_t j = 0; j < k; ++j) s -= L[i * n + j] * L[k * n + j];
      L[i * n + k] = s / d;
    }
  }

  Vector x(b);
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= L[i * n + j] * x[j];
    x[i] = s / L[i * n + i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= L[j * n + ii] * x[j];
    x[ii] = s / L[ii * n + ii];
  }
  return x;
}

}  // namespace lancbio
