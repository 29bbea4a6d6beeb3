#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "lancbio/oracles.hpp"
#include "lancbio/problems/dataset.hpp"
#include "lancbio/problems/softmax.hpp"

namespace lancbio {

/// Data hyper-cleaning: train a linear classifier while learning per-sample
/// confidences on a label-corrupted training set.
///
/// Upper variable x = per-sample confidence logits (length n_train); lower
/// variable y = flattened classifier W (classes x dim). With sig = sigmoid,
///   g(x, W) = (1/n_tr) sum_i sig(x_i) L(W t_i, y_i) + C_r ||W||^2
///   f(x, W) = (1/n_val) sum_i L(W v_i, y_i).
struct HyperCleanSpec {
  Dataset train;  // labels already corrupted by the caller or corrupt_labels()
  Dataset val;
  std::size_t classes = 10;
  double reg = 1e-3;  // C_r
};

/// Flip each label with probability p, uniformly over the wrong classes.
void corrupt_labels(Dataset& ds, std::size_t classes, double p, std::uint64_t seed);

class HyperCleanProblem final : public BilevelOracles {
 public:
  explicit HyperCleanProblem(HyperCleanSpec spec);

  std::size_t dim_x() const override { return spec_.train.n; }
  std::size_t dim_y() const override { return spec_.classes * spec_.train.dim; }

  double f_value(const Vector& x, const Vector& y) const override;
  double g_value(const Vector& x, const Vector& y) const override;
  Vector grad_f_x(const Vector& x, const Vector& y) const override;  // f is free of x
  Vector grad_f_y(const Vector& x, const Vector& y) const override;
  Vector grad_g_y(const Vector& x, const Vector& y) const override;
  Vector hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const override;
  Vector jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const override;

  double accuracy_on(const Dataset& ds, const Vector& w) const;
  const HyperCleanSpec& spec() const { return spec_; }

 private:
  Vector sigmoids(const Vector& x) const;

  HyperCleanSpec spec_;
  SoftmaxModel train_model_;
  SoftmaxModel val_model_;
};

std::unique_ptr<BilevelOracles> make_hyperclean(HyperCleanSpec spec);

}  // namespace lancbio
