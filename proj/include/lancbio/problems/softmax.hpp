#pragma once

#include "lancbio/problems/dataset.hpp"
#include "lancbio/vec.hpp"

namespace lancbio {

/// Softmax cross-entropy reductions over a dataset for a linear classifier
/// W (classes x dim, row-major, flattened). Weighted variants take one
/// weight per sample (nullptr = unweighted); means are over all samples.
/// The classifier Hessian of softmax CE is exact for a linear model
/// (Gauss-Newton coincides with the full Hessian).
class SoftmaxModel {
 public:
  SoftmaxModel(const Dataset& ds, std::size_t classes) : ds_(ds), c_(classes) {}

  std::size_t weight_count() const { return c_ * ds_.dim; }

  /// (1/n) sum_i wts_i * L(W x_i, y_i)
  double loss(const double* W, const double* wts = nullptr) const;

  /// out = (1/n) sum_i wts_i (p_i - e_{y_i}) x_i'
  void grad(const double* W, double* out, const double* wts = nullptr) const;

  /// out = (1/n) sum_i wts_i [ (diag(p_i) - p_i p_i') (V x_i) ] x_i'
  void hess_vec(const double* W, const double* V, double* out,
                const double* wts = nullptr) const;

  /// out_i = < (p_i - e_{y_i}) x_i' , V >  (no 1/n, no weights)
  void per_sample_grad_inner(const double* W, const double* V, double* out) const;

  /// out_i = L(W x_i, y_i)
  void per_sample_loss(const double* W, double* out) const;

  double accuracy(const double* W) const;

 private:
  /// z <- softmax(W x_i) with max shift; returns the sample's CE loss.
  double sample_probs(const double* W, std::size_t i, double* z) const;

  const Dataset& ds_;
  std::size_t c_;
};

}  // namespace lancbio
