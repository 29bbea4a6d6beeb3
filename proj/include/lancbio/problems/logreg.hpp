#pragma once

#include <memory>

#include "lancbio/oracles.hpp"
#include "lancbio/problems/dataset.hpp"
#include "lancbio/problems/softmax.hpp"

namespace lancbio {

/// Logistic regression with learned per-feature regularizers.
///
/// Upper variable x = zeta (length dim); lower variable y = flattened
/// classifier W (classes x dim). Squared zeta keeps the penalty nonnegative:
///   g(zeta, W) = (1/n_tr) sum_i L(W t_i, y_i) + (1/(c l)) sum_kj zeta_j^2 W_kj^2
///   f(zeta, W) = (1/n_val) sum_i L(W v_i, y_i).
struct LogRegSpec {
  Dataset train;
  Dataset val;
  std::size_t classes = 3;
};

class LogRegProblem final : public BilevelOracles {
 public:
  explicit LogRegProblem(LogRegSpec spec);

  std::size_t dim_x() const override { return spec_.train.dim; }
  std::size_t dim_y() const override { return spec_.classes * spec_.train.dim; }

  double f_value(const Vector& x, const Vector& y) const override;
  double g_value(const Vector& x, const Vector& y) const override;
  Vector grad_f_x(const Vector& x, const Vector& y) const override;  // f is free of zeta
  Vector grad_f_y(const Vector& x, const Vector& y) const override;
  Vector grad_g_y(const Vector& x, const Vector& y) const override;
  Vector hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const override;
  Vector jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const override;

  double accuracy_on(const Dataset& ds, const Vector& w) const;
  const LogRegSpec& spec() const { return spec_; }

 private:
  double reg_scale() const {
    return 1.0 / static_cast<double>(spec_.classes * spec_.train.dim);
  }

  LogRegSpec spec_;
  SoftmaxModel train_model_;
  SoftmaxModel val_model_;
};

std::unique_ptr<BilevelOracles> make_logreg(LogRegSpec spec);

}  // namespace lancbio
