#pragma once

#include <vector>

#include "lancbio/vec.hpp"

namespace lancbio {

/// Symmetric tridiagonal matrix, stored as the diagonal (alpha_1..alpha_j)
/// and the single off-diagonal (beta_2..beta_j). Grows one (alpha, beta)
/// pair per Lanczos step; no preallocation so the dimension-ramp schedule
/// costs nothing.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;  // size diag.size() - 1 (empty when size <= 1)

  std::size_t size() const { return diag.size(); }
  bool empty() const { return diag.empty(); }

  /// Append alpha on the diagonal; `beta` goes on the off-diagonal border
  /// (dropped when the matrix was empty).
  void extend(double alpha, double beta) {
    if (!diag.empty()) offdiag.push_back(beta);
    diag.push_back(alpha);
  }

  /// Infinity norm (max absolute row sum).
  double inf_norm() const;
};

/// y = T x for dense x.
Vector tridiag_matvec(const SymTridiagonal& T, const Vector& x);

/// Solve T z = rhs by LDL' without pivoting, O(j). A pivot magnitude below
/// 1e-12 * ||T||_inf throws NearSingularError, which callers convert into an
/// epoch restart.
Vector solve_sym_tridiag(const SymTridiagonal& T, const Vector& rhs);

/// Minimize || rhs_norm * e_1 - [T; beta e_j'] c || over c in R^j via plane
/// rotations on the (j+1) x j band. Throws RankDeficientError when the
/// triangular factor signals rank loss (min |R_ii| < 1e-12 max |R_ii|).
Vector tridiag_least_squares(const SymTridiagonal& T, double trailing_beta,
                             double rhs_norm);

}  // namespace lancbio
