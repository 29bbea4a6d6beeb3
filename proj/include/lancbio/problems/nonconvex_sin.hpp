#pragma once

#include <cstdint>
#include <memory>

#include "lancbio/oracles.hpp"

namespace lancbio {

/// Componentwise-sine lower level with an indefinite Hessian; exercised by
/// the minimal-residual solver variant only. The upper variable is a scalar.
///   f(x, y) = (x - a)^2 + sum_i (y_i - a - c_i)^2
///   g(x, y) = sum_i sin(x + y_i - c_i)
/// Lower-level Hessian: diag(-sin(x + y_i - c_i)).
struct NonconvexSinSpec {
  std::size_t d = 100;
  double a = 1.0;
  Vector c;  // length d; filled from the seed when empty
  double c_range = 2.0;
  std::uint64_t seed = 0;
};

class NonconvexSinProblem final : public BilevelOracles {
 public:
  explicit NonconvexSinProblem(NonconvexSinSpec spec);

  std::size_t dim_x() const override { return 1; }
  std::size_t dim_y() const override { return spec_.d; }

  double f_value(const Vector& x, const Vector& y) const override;
  double g_value(const Vector& x, const Vector& y) const override;
  Vector grad_f_x(const Vector& x, const Vector& y) const override;
  Vector grad_f_y(const Vector& x, const Vector& y) const override;
  Vector grad_g_y(const Vector& x, const Vector& y) const override;
  Vector hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const override;
  Vector jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const override;

  const NonconvexSinSpec& spec() const { return spec_; }

 private:
  NonconvexSinSpec spec_;
};

std::unique_ptr<BilevelOracles> make_nonconvex_sin(NonconvexSinSpec spec);

}  // namespace lancbio
