#include "lancbio/spd.hpp"

#include <cmath>

namespace lancbio {

DenseMatrix random_orthogonal(std::size_t n, Rng& rng) {
  // Columns of a Gaussian matrix, orthonormalized twice for safety.
  DenseMatrix U(n, n);
  std::vector<Vector> cols(n, Vector(n));
  for (auto& c : cols)
    for (double& x : c) x = rng.normal();
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k)
        vec::axpy(-vec::dot(cols[k], cols[j]), cols[k], cols[j]);
    vec::scale(1.0 / vec::norm(cols[j]), cols[j]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) U(i, j) = cols[j][i];
  return U;
}

DenseMatrix spd_from_eigenvalues(const Vector& eigs, Rng& rng) {
  const std::size_t n = eigs.size();
  const DenseMatrix U = random_orthogonal(n, rng);
  DenseMatrix A(n, n);
  // A = U diag(eigs) U'
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += U(i, k) * eigs[k] * U(j, k);
      A(i, j) = s;
      A(j, i) = s;
    }
  return A;
}

Vector logspace(double lo, double hi, std::size_t n) {
  Vector v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  const double llo = std::log10(lo), lhi = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = std::pow(10.0, llo + (lhi - llo) * static_cast<double>(i) /
                              static_cast<double>(n - 1));
  return v;
}

}  // namespace lancbio
