#include "lancbio/problems/softmax.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace lancbio {

double SoftmaxModel::sample_probs(const double* W, std::size_t i, double* z) const {
  const double* x = ds_.row(i);
  const std::size_t l = ds_.dim;
  double zmax = -1e300;
  for (std::size_t k = 0; k < c_; ++k) {
    double s = 0.0;
    const double* wk = W + k * l;
    for (std::size_t j = 0; j < l; ++j) s += wk[j] * x[j];
    z[k] = s;
    zmax = std::max(zmax, s);
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < c_; ++k) {
    z[k] = std::exp(z[k] - zmax);
    sum += z[k];
  }
  const double loss = std::log(sum) - std::log(z[ds_.labels[i]]);
  const double inv = 1.0 / sum;
  for (std::size_t k = 0; k < c_; ++k) z[k] *= inv;
  return loss;
}

double SoftmaxModel::loss(const double* W, const double* wts) const {
  std::vector<double> z(c_);
  double total = 0.0;
  for (std::size_t i = 0; i < ds_.n; ++i) {
    const double li = sample_probs(W, i, z.data());
    total += (wts ? wts[i] : 1.0) * li;
  }
  return total / static_cast<double>(ds_.n);
}

void SoftmaxModel::grad(const double* W, double* out, const double* wts) const {
  const std::size_t l = ds_.dim;
  std::fill(out, out + c_ * l, 0.0);
  std::vector<double> z(c_);
  for (std::size_t i = 0; i < ds_.n; ++i) {
    sample_probs(W, i, z.data());
    z[ds_.labels[i]] -= 1.0;
    const double wi = wts ? wts[i] : 1.0;
    const double* x = ds_.row(i);
    for (std::size_t k = 0; k < c_; ++k) {
      const double coef = wi * z[k];
      if (coef == 0.0) continue;
      double* ok = out + k * l;
      for (std::size_t j = 0; j < l; ++j) ok[j] += coef * x[j];
    }
  }
  const double inv = 1.0 / static_cast<double>(ds_.n);
  for (std::size_t j = 0; j < c_ * l; ++j) out[j] *= inv;
}

void SoftmaxModel::hess_vec(const double* W, const double* V, double* out,
                            const double* wts) const {
  const std::size_t l = ds_.dim;
  std::fill(out, out + c_ * l, 0.0);
  std::vector<double> z(c_), u(c_);
  for (std::size_t i = 0; i < ds_.n; ++i) {
    sample_probs(W, i, z.data());
    const double* x = ds_.row(i);
    double pu = 0.0;
    for (std::size_t k = 0; k < c_; ++k) {
      double s = 0.0;
      const double* vk = V + k * l;
      for (std::size_t j = 0; j < l; ++j) s += vk[j] * x[j];
      u[k] = s;
      pu += z[k] * s;
    }
    const double wi = wts ? wts[i] : 1.0;
    for (std::size_t k = 0; k < c_; ++k) {
      const double coef = wi * z[k] * (u[k] - pu);
      if (coef == 0.0) continue;
      double* ok = out + k * l;
      for (std::size_t j = 0; j < l; ++j) ok[j] += coef * x[j];
    }
  }
  const double inv = 1.0 / static_cast<double>(ds_.n);
  for (std::size_t j = 0; j < c_ * l; ++j) out[j] *= inv;
}

void SoftmaxModel::per_sample_grad_inner(const double* W, const double* V,
                                         double* out) const {
  const std::size_t l = ds_.dim;
  std::vector<double> z(c_);
  for (std::size_t i = 0; i < ds_.n; ++i) {
    sample_probs(W, i, z.data());
    z[ds_.labels[i]] -= 1.0;
    const double* x = ds_.row(i);
    double s = 0.0;
    for (std::size_t k = 0; k < c_; ++k) {
      double vx = 0.0;
      const double* vk = V + k * l;
      for (std::size_t j = 0; j < l; ++j) vx += vk[j] * x[j];
      s += z[k] * vx;
    }
    out[i] = s;
  }
}

void SoftmaxModel::per_sample_loss(const double* W, double* out) const {
  std::vector<double> z(c_);
  for (std::size_t i = 0; i < ds_.n; ++i) out[i] = sample_probs(W, i, z.data());
}

double SoftmaxModel::accuracy(const double* W) const {
  const std::size_t l = ds_.dim;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < ds_.n; ++i) {
    const double* x = ds_.row(i);
    double best = -1e300;
    std::size_t arg = 0;
    for (std::size_t k = 0; k < c_; ++k) {
      double s = 0.0;
      const double* wk = W + k * l;
      for (std::size_t j = 0; j < l; ++j) s += wk[j] * x[j];
      if (s > best) {
        best = s;
        arg = k;
      }
    }
    if (static_cast<int>(arg) == ds_.labels[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(ds_.n);
}

}  // namespace lancbio
