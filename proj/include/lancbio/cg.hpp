#pragma once

#include "lancbio/lanczos.hpp"
#include "lancbio/vec.hpp"

namespace lancbio {

/// Standard two-recurrence conjugate gradient on A v = b from warm start v0,
/// run for a fixed number of steps (the caller monitors residuals). For a
/// static SPD operator the result is the A-norm-optimal point in
/// v0 + K_iters(A, b - A v0). Costs iters + 1 operator applications.
Vector cg_solve(const ApplyOperator& A, const Vector& b, const Vector& v0,
                std::size_t iters);

}  // namespace lancbio
