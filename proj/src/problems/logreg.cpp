#include "lancbio/problems/logreg.hpp"

#include <utility>

#include "lancbio/errors.hpp"

namespace lancbio {

LogRegProblem::LogRegProblem(LogRegSpec spec)
    : spec_(std::move(spec)),
      train_model_(spec_.train, spec_.classes),
      val_model_(spec_.val, spec_.classes) {
  if (spec_.train.dim != spec_.val.dim)
    throw ShapeMismatchError("logreg: train/val feature dims disagree");
  if (spec_.train.n == 0 || spec_.val.n == 0)
    throw ShapeMismatchError("logreg: empty split");
}

double LogRegProblem::f_value(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  return val_model_.loss(y.data());
}

double LogRegProblem::g_value(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  const std::size_t l = spec_.train.dim;
  double pen = 0.0;
  for (std::size_t k = 0; k < spec_.classes; ++k)
    for (std::size_t j = 0; j < l; ++j) {
      const double w = y[k * l + j];
      pen += x[j] * x[j] * w * w;
    }
  return train_model_.loss(y.data()) + reg_scale() * pen;
}

Vector LogRegProblem::grad_f_x(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  return Vector(dim_x(), 0.0);
}

Vector LogRegProblem::grad_f_y(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  Vector g(dim_y());
  val_model_.grad(y.data(), g.data());
  return g;
}

Vector LogRegProblem::grad_g_y(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  const std::size_t l = spec_.train.dim;
  Vector g(dim_y());
  train_model_.grad(y.data(), g.data());
  const double s = 2.0 * reg_scale();
  for (std::size_t k = 0; k < spec_.classes; ++k)
    for (std::size_t j = 0; j < l; ++j) g[k * l + j] += s * x[j] * x[j] * y[k * l + j];
  return g;
}

Vector LogRegProblem::hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const {
  check_dims(x, y);
  const std::size_t l = spec_.train.dim;
  Vector out(dim_y());
  train_model_.hess_vec(y.data(), v.data(), out.data());
  const double s = 2.0 * reg_scale();
  for (std::size_t k = 0; k < spec_.classes; ++k)
    for (std::size_t j = 0; j < l; ++j) out[k * l + j] += s * x[j] * x[j] * v[k * l + j];
  return out;
}

Vector LogRegProblem::jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const {
  check_dims(x, y);
  // d^2 g / dzeta_j dW_kj = (4/(c l)) zeta_j W_kj; all other entries vanish.
  const std::size_t l = spec_.train.dim;
  const double s = 4.0 * reg_scale();
  Vector out(dim_x(), 0.0);
  for (std::size_t k = 0; k < spec_.classes; ++k)
    for (std::size_t j = 0; j < l; ++j) out[j] += s * x[j] * y[k * l + j] * v[k * l + j];
  return out;
}

double LogRegProblem::accuracy_on(const Dataset& ds, const Vector& w) const {
  SoftmaxModel m(ds, spec_.classes);
  return m.accuracy(w.data());
}

std::unique_ptr<BilevelOracles> make_logreg(LogRegSpec spec) {
  return std::make_unique<LogRegProblem>(std::move(spec));
}

}  // namespace lancbio
