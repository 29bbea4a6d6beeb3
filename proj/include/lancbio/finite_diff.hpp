#pragma once

#include <functional>

#include "lancbio/vec.hpp"

namespace lancbio {

using ScalarField = std::function<double(const Vector&)>;
using VectorField = std::function<Vector(const Vector&)>;

/// Central-difference gradient, one coordinate at a time:
/// (fn(x + h e_i) - fn(x - h e_i)) / (2h). Default h = 1e-5 balances
/// truncation against roundoff in double precision.
Vector finite_diff_gradient(const ScalarField& fn, const Vector& x, double h = 1e-5);

/// Central difference of a vector field along direction v (scaled by ||v||):
/// approximates the Jacobian-vector product d/dt field(x + t v) at t = 0.
Vector finite_diff_directional(const VectorField& field, const Vector& x,
                               const Vector& v, double h = 1e-5);

}  // namespace lancbio
