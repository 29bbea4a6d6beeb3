#pragma once

#include <cstdint>
#include <memory>

#include "lancbio/dense.hpp"
#include "lancbio/oracles.hpp"

namespace lancbio {

/// Generation recipe for the synthetic trig/log-sum-exp bilevel problem:
/// D1 ~ U[-5,5], D2 ~ U[0.1,1.1], D3 ~ U[0,0.5] entrywise, G dense SPD with
/// log-spaced eigenvalues in [g_eig_min, g_eig_max] and a random orthogonal
/// eigenbasis. D3 + G keeps the lower level strongly convex.
struct SyntheticSpec {
  std::size_t d = 100;
  double c1 = 0.1;
  double c2 = 0.5;
  double g_eig_min = 1.0;
  double g_eig_max = 1e5;
  std::uint64_t seed = 0;
};

/// f(x,y) = c1 cos(x'D1 y) + 0.5 ||D2 x - y||^2
/// g(x,y) = c2 sum_i sin(x_i + y_i) + log sum_i exp(x_i y_i)
///          + 0.5 y'(D3 + G) y
/// with all derivative oracles in closed form. The log-sum-exp is evaluated
/// with a max shift.
class SyntheticProblem final : public BilevelOracles {
 public:
  explicit SyntheticProblem(const SyntheticSpec& spec);

  std::size_t dim_x() const override { return d_; }
  std::size_t dim_y() const override { return d_; }

  double f_value(const Vector& x, const Vector& y) const override;
  double g_value(const Vector& x, const Vector& y) const override;
  Vector grad_f_x(const Vector& x, const Vector& y) const override;
  Vector grad_f_y(const Vector& x, const Vector& y) const override;
  Vector grad_g_y(const Vector& x, const Vector& y) const override;
  Vector hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const override;
  Vector jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const override;

  const SyntheticSpec& spec() const { return spec_; }

 private:
  Vector softmax_xy(const Vector& x, const Vector& y) const;
  /// (D3 + G) v
  Vector quad_term(const Vector& v) const;

  SyntheticSpec spec_;
  std::size_t d_;
  Vector D1_, D2_, D3_;
  DenseMatrix G_;
};

std::unique_ptr<BilevelOracles> make_synthetic(const SyntheticSpec& spec);

}  // namespace lancbio
