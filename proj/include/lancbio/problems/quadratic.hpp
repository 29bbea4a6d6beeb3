#pragma once

#include <memory>

#include "lancbio/dense.hpp"
#include "lancbio/oracles.hpp"
#include "lancbio/rng.hpp"

namespace lancbio {

/// Test quadratic bilevel problem with closed forms,
///   f(x, y) = 0.5 ||x - x_hat||^2 + 0.5 ||y - y_hat||^2
///   g(x, y) = 0.5 y'Hy - y'(Cx + c0),
/// so y*(x) = H^{-1}(Cx + c0) and the hyper-gradient is
/// (x - x_hat) + C'H^{-1}(y*(x) - y_hat). With lambda = theta = 0 it doubles
/// as a frozen linear system A v = b with A = H, b = y0 - y_hat.
class QuadraticBilevel final : public BilevelOracles {
 public:
  QuadraticBilevel(DenseMatrix H, DenseMatrix C, Vector c0, Vector x_hat, Vector y_hat);

  /// Random instance: H SPD with log-spaced spectrum [1, cond].
  static QuadraticBilevel random(std::size_t dx, std::size_t dy, double cond, Rng& rng);

  /// Frozen-system instance: with x0 = 0, y0 = 0 the linear system of the
  /// hyper-gradient is H v = b for the given right-hand side.
  static QuadraticBilevel frozen_system(DenseMatrix H, const Vector& b);

  std::size_t dim_x() const override { return x_hat_.size(); }
  std::size_t dim_y() const override { return y_hat_.size(); }

  double f_value(const Vector& x, const Vector& y) const override;
  double g_value(const Vector& x, const Vector& y) const override;
  Vector grad_f_x(const Vector& x, const Vector& y) const override;
  Vector grad_f_y(const Vector& x, const Vector& y) const override;
  Vector grad_g_y(const Vector& x, const Vector& y) const override;
  Vector hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const override;
  Vector jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const override;

  // Closed forms for oracle tests.
  Vector y_star(const Vector& x) const;
  Vector hypergrad_closed_form(const Vector& x) const;

  const DenseMatrix& H() const { return H_; }

 private:
  DenseMatrix H_, C_;
  Vector c0_, x_hat_, y_hat_;
};

}  // namespace lancbio
