#include "lancbio/problems/nonconvex_sin.hpp"

#include <cmath>
#include <utility>

#include "lancbio/errors.hpp"
#include "lancbio/rng.hpp"

namespace lancbio {

NonconvexSinProblem::NonconvexSinProblem(NonconvexSinSpec spec) : spec_(std::move(spec)) {
  if (spec_.c.empty()) {
    Rng rng(spec_.seed);
    spec_.c = rng.uniform_vector(spec_.d, -spec_.c_range, spec_.c_range);
  }
  if (spec_.c.size() != spec_.d)
    throw ShapeMismatchError("nonconvex_sin: c has wrong length");
}

double NonconvexSinProblem::f_value(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  double s = (x[0] - spec_.a) * (x[0] - spec_.a);
  for (std::size_t i = 0; i < spec_.d; ++i) {
    const double r = y[i] - spec_.a - spec_.c[i];
    s += r * r;
  }
  return s;
}

double NonconvexSinProblem::g_value(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  double s = 0.0;
  for (std::size_t i = 0; i < spec_.d; ++i) s += std::sin(x[0] + y[i] - spec_.c[i]);
  return s;
}

Vector NonconvexSinProblem::grad_f_x(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  return Vector{2.0 * (x[0] - spec_.a)};
}

Vector NonconvexSinProblem::grad_f_y(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  Vector g(spec_.d);
  for (std::size_t i = 0; i < spec_.d; ++i) g[i] = 2.0 * (y[i] - spec_.a - spec_.c[i]);
  return g;
}

Vector NonconvexSinProblem::grad_g_y(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  Vector g(spec_.d);
  for (std::size_t i = 0; i < spec_.d; ++i) g[i] = std::cos(x[0] + y[i] - spec_.c[i]);
  return g;
}

Vector NonconvexSinProblem::hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const {
  check_dims(x, y);
  Vector out(spec_.d);
  for (std::size_t i = 0; i < spec_.d; ++i)
    out[i] = -std::sin(x[0] + y[i] - spec_.c[i]) * v[i];
  return out;
}

Vector NonconvexSinProblem::jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const {
  check_dims(x, y);
  double s = 0.0;
  for (std::size_t i = 0; i < spec_.d; ++i) s -= std::sin(x[0] + y[i] - spec_.c[i]) * v[i];
  return Vector{s};
}

std::unique_ptr<BilevelOracles> make_nonconvex_sin(NonconvexSinSpec spec) {
  return std::make_unique<NonconvexSinProblem>(std::move(spec));
}

}  // namespace lancbio
