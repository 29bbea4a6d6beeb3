#pragma once

#include <cstddef>
#include <vector>

#include "lancbio/vec.hpp"

namespace lancbio {

/// Row-major dense matrix. Used only by test oracles and desk-scale problem
/// definitions; the solvers themselves never form a matrix.
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Vector matvec(const DenseMatrix& A, const Vector& x);

/// Solve A x = b for symmetric positive definite A by Cholesky. Oracle use
/// only (reference v* in tests). Throws NotPositiveDefiniteError on a
/// nonpositive pivot.
Vector dense_solve(const DenseMatrix& A, const Vector& b);

}  // namespace lancbio
