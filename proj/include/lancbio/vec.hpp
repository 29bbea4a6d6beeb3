#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace lancbio {

/// Dense double-precision vector. All solver-facing code is matrix-free and
/// works in terms of these plus apply-operators.
using Vector = std::vector<double>;

namespace vec {

inline double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

/// y += alpha * x
inline void axpy(double alpha, const Vector& x, Vector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(double alpha, Vector& x) {
  for (double& xi : x) xi *= alpha;
}

inline Vector scaled(const Vector& x, double alpha) {
  Vector r(x);
  scale(alpha, r);
  return r;
}

inline Vector add(const Vector& a, const Vector& b) {
  Vector r(a);
  axpy(1.0, b, r);
  return r;
}

inline Vector sub(const Vector& a, const Vector& b) {
  Vector r(a);
  axpy(-1.0, b, r);
  return r;
}

inline Vector zeros(std::size_t n) { return Vector(n, 0.0); }

inline bool all_finite(const Vector& a) {
  for (double x : a)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace vec
}  // namespace lancbio
