#include "lancbio/problems/quadratic.hpp"

#include <utility>

#include "lancbio/spd.hpp"

namespace lancbio {

QuadraticBilevel::QuadraticBilevel(DenseMatrix H, DenseMatrix C, Vector c0,
                                   Vector x_hat, Vector y_hat)
    : H_(std::move(H)), C_(std::move(C)), c0_(std::move(c0)),
      x_hat_(std::move(x_hat)), y_hat_(std::move(y_hat)) {}

QuadraticBilevel QuadraticBilevel::random(std::size_t dx, std::size_t dy,
                                          double cond, Rng& rng) {
  DenseMatrix H = spd_from_eigenvalues(logspace(1.0, cond, dy), rng);
  DenseMatrix C(dy, dx);
  const double s = 1.0 / std::sqrt(static_cast<double>(dx));
  for (std::size_t i = 0; i < dy; ++i)
    for (std::size_t j = 0; j < dx; ++j) C(i, j) = s * rng.normal();
  return QuadraticBilevel(std::move(H), std::move(C), rng.normal_vector(dy),
                          rng.normal_vector(dx), rng.normal_vector(dy));
}

QuadraticBilevel QuadraticBilevel::frozen_system(DenseMatrix H, const Vector& b) {
  const std::size_t dy = H.rows;
  return QuadraticBilevel(std::move(H), DenseMatrix(dy, 1), Vector(dy, 0.0),
                          Vector(1, 0.0), vec::scaled(b, -1.0));
}

double QuadraticBilevel::f_value(const Vector& x, const Vector& y) const {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - x_hat_[i]) * (x[i] - x_hat_[i]);
  for (std::size_t i = 0; i < y.size(); ++i) s += (y[i] - y_hat_[i]) * (y[i] - y_hat_[i]);
  return 0.5 * s;
}

double QuadraticBilevel::g_value(const Vector& x, const Vector& y) const {
  const Vector Hy = matvec(H_, y);
  Vector lin = matvec(C_, x);
  vec::axpy(1.0, c0_, lin);
  return 0.5 * vec::dot(y, Hy) - vec::dot(y, lin);
}

Vector QuadraticBilevel::grad_f_x(const Vector& x, const Vector&) const {
  return vec::sub(x, x_hat_);
}

Vector QuadraticBilevel::grad_f_y(const Vector&, const Vector& y) const {
  return vec::sub(y, y_hat_);
}

Vector QuadraticBilevel::grad_g_y(const Vector& x, const Vector& y) const {
  Vector g = matvec(H_, y);
  vec::axpy(-1.0, matvec(C_, x), g);
  vec::axpy(-1.0, c0_, g);
  return g;
}

Vector QuadraticBilevel::hvp_gyy(const Vector&, const Vector&, const Vector& v) const {
  return matvec(H_, v);
}

Vector QuadraticBilevel::jvp_gxy(const Vector&, const Vector&, const Vector& v) const {
  // d^2 g / dx dy = -C', so the action on v is -C'v.
  Vector out(C_.cols, 0.0);
  for (std::size_t i = 0; i < C_.rows; ++i)
    for (std::size_t j = 0; j < C_.cols; ++j) out[j] -= C_(i, j) * v[i];
  return out;
}

Vector QuadraticBilevel::y_star(const Vector& x) const {
  Vector rhs = matvec(C_, x);
  vec::axpy(1.0, c0_, rhs);
  return dense_solve(H_, rhs);
}

Vector QuadraticBilevel::hypergrad_closed_form(const Vector& x) const {
  const Vector ys = y_star(x);
  const Vector w = dense_solve(H_, vec::sub(ys, y_hat_));
  Vector grad = vec::sub(x, x_hat_);
  for (std::size_t i = 0; i < C_.rows; ++i)
    for (std::size_t j = 0; j < C_.cols; ++j) grad[j] += C_(i, j) * w[i];
  return grad;
}

}  // namespace lancbio
