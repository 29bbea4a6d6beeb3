#include "lancbio/problems/hyperclean.hpp"

#include <cmath>
#include <utility>

#include "lancbio/errors.hpp"
#include "lancbio/rng.hpp"

namespace lancbio {

namespace {
double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}
}  // namespace

void corrupt_labels(Dataset& ds, std::size_t classes, double p, std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t i = 0; i < ds.n; ++i) {
    if (rng.uniform() >= p) continue;
    auto wrong = static_cast<int>(rng.below(classes - 1));
    if (wrong >= ds.labels[i]) ++wrong;
    ds.labels[i] = wrong;
  }
}

HyperCleanProblem::HyperCleanProblem(HyperCleanSpec spec)
    : spec_(std::move(spec)),
      train_model_(spec_.train, spec_.classes),
      val_model_(spec_.val, spec_.classes) {
  if (spec_.train.dim != spec_.val.dim)
    throw ShapeMismatchError("hyperclean: train/val feature dims disagree");
  if (spec_.train.n == 0 || spec_.val.n == 0)
    throw ShapeMismatchError("hyperclean: empty split");
}

Vector HyperCleanProblem::sigmoids(const Vector& x) const {
  Vector s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = sigmoid(x[i]);
  return s;
}

double HyperCleanProblem::f_value(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  return val_model_.loss(y.data());
}

double HyperCleanProblem::g_value(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  const Vector s = sigmoids(x);
  return train_model_.loss(y.data(), s.data()) + spec_.reg * vec::dot(y, y);
}

Vector HyperCleanProblem::grad_f_x(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  return Vector(dim_x(), 0.0);
}

Vector HyperCleanProblem::grad_f_y(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  Vector g(dim_y());
  val_model_.grad(y.data(), g.data());
  return g;
}

Vector HyperCleanProblem::grad_g_y(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  const Vector s = sigmoids(x);
  Vector g(dim_y());
  train_model_.grad(y.data(), g.data(), s.data());
  vec::axpy(2.0 * spec_.reg, y, g);
  return g;
}

Vector HyperCleanProblem::hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const {
  check_dims(x, y);
  const Vector s = sigmoids(x);
  Vector out(dim_y());
  train_model_.hess_vec(y.data(), v.data(), out.data(), s.data());
  vec::axpy(2.0 * spec_.reg, v, out);
  return out;
}

Vector HyperCleanProblem::jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const {
  check_dims(x, y);
  // d^2 g / dx_i dW = (1/n) sig'(x_i) grad_W L_i, so the action on v is
  // (1/n) sig'(x_i) <grad_W L_i, V> per sample.
  Vector inner(dim_x());
  train_model_.per_sample_grad_inner(y.data(), v.data(), inner.data());
  const double inv = 1.0 / static_cast<double>(spec_.train.n);
  Vector out(dim_x());
  for (std::size_t i = 0; i < dim_x(); ++i) {
    const double s = sigmoid(x[i]);
    out[i] = inv * s * (1.0 - s) * inner[i];
  }
  return out;
}

double HyperCleanProblem::accuracy_on(const Dataset& ds, const Vector& w) const {
  SoftmaxModel m(ds, spec_.classes);
  return m.accuracy(w.data());
}

std::unique_ptr<BilevelOracles> make_hyperclean(HyperCleanSpec spec) {
  return std::make_unique<HyperCleanProblem>(std::move(spec));
}

}  // namespace lancbio
