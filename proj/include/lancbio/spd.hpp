#pragma once

#include "lancbio/dense.hpp"
#include "lancbio/rng.hpp"

namespace lancbio {

/// Orthogonal matrix from modified Gram-Schmidt on a seeded Gaussian matrix.
DenseMatrix random_orthogonal(std::size_t n, Rng& rng);

/// SPD matrix with the given spectrum: U diag(eigs) U' with random U.
DenseMatrix spd_from_eigenvalues(const Vector& eigs, Rng& rng);

/// Log-spaced values from lo to hi inclusive.
Vector logspace(double lo, double hi, std::size_t n);

}  // namespace lancbio
