#include "lancbio/problems/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "lancbio/rng.hpp"
#include "lancbio/spd.hpp"

namespace lancbio {

SyntheticProblem::SyntheticProblem(const SyntheticSpec& spec)
    : spec_(spec), d_(spec.d) {
  Rng rng(spec.seed);
  D1_ = rng.uniform_vector(d_, -5.0, 5.0);
  D2_ = rng.uniform_vector(d_, 0.1, 1.1);
  D3_ = rng.uniform_vector(d_, 0.0, 0.5);
  G_ = spd_from_eigenvalues(logspace(spec.g_eig_min, spec.g_eig_max, d_), rng);
}

Vector SyntheticProblem::softmax_xy(const Vector& x, const Vector& y) const {
  Vector t(d_);
  double tmax = -1e300;
  for (std::size_t i = 0; i < d_; ++i) {
    t[i] = x[i] * y[i];
    tmax = std::max(tmax, t[i]);
  }
  double z = 0.0;
  for (std::size_t i = 0; i < d_; ++i) {
    t[i] = std::exp(t[i] - tmax);
    z += t[i];
  }
  vec::scale(1.0 / z, t);
  return t;
}

Vector SyntheticProblem::quad_term(const Vector& v) const {
  Vector out = matvec(G_, v);
  for (std::size_t i = 0; i < d_; ++i) out[i] += D3_[i] * v[i];
  return out;
}

double SyntheticProblem::f_value(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  double inner = 0.0, quad = 0.0;
  for (std::size_t i = 0; i < d_; ++i) {
    inner += x[i] * D1_[i] * y[i];
    const double r = D2_[i] * x[i] - y[i];
    quad += r * r;
  }
  return spec_.c1 * std::cos(inner) + 0.5 * quad;
}

double SyntheticProblem::g_value(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  double trig = 0.0, tmax = -1e300;
  Vector t(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    trig += std::sin(x[i] + y[i]);
    t[i] = x[i] * y[i];
    tmax = std::max(tmax, t[i]);
  }
  double z = 0.0;
  for (std::size_t i = 0; i < d_; ++i) z += std::exp(t[i] - tmax);
  const double lse = tmax + std::log(z);
  return spec_.c2 * trig + lse + 0.5 * vec::dot(y, quad_term(y));
}

Vector SyntheticProblem::grad_f_x(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  double inner = 0.0;
  for (std::size_t i = 0; i < d_; ++i) inner += x[i] * D1_[i] * y[i];
  const double cs = -spec_.c1 * std::sin(inner);
  Vector g(d_);
  for (std::size_t i = 0; i < d_; ++i)
    g[i] = cs * D1_[i] * y[i] + D2_[i] * (D2_[i] * x[i] - y[i]);
  return g;
}

Vector SyntheticProblem::grad_f_y(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  double inner = 0.0;
  for (std::size_t i = 0; i < d_; ++i) inner += x[i] * D1_[i] * y[i];
  const double cs = -spec_.c1 * std::sin(inner);
  Vector g(d_);
  for (std::size_t i = 0; i < d_; ++i)
    g[i] = cs * D1_[i] * x[i] - (D2_[i] * x[i] - y[i]);
  return g;
}

Vector SyntheticProblem::grad_g_y(const Vector& x, const Vector& y) const {
  check_dims(x, y);
  const Vector s = softmax_xy(x, y);
  Vector g = quad_term(y);
  for (std::size_t i = 0; i < d_; ++i)
    g[i] += spec_.c2 * std::cos(x[i] + y[i]) + x[i] * s[i];
  return g;
}

Vector SyntheticProblem::hvp_gyy(const Vector& x, const Vector& y, const Vector& v) const {
  check_dims(x, y);
  // c2 diag(-sin(x+y)) + diag(x.x.s) - (x.s)(x.s)' + (D3 + G)
  const Vector s = softmax_xy(x, y);
  double xsv = 0.0;
  for (std::size_t i = 0; i < d_; ++i) xsv += x[i] * s[i] * v[i];
  Vector out = quad_term(v);
  for (std::size_t i = 0; i < d_; ++i) {
    const double xs = x[i] * s[i];
    out[i] += -spec_.c2 * std::sin(x[i] + y[i]) * v[i] + x[i] * xs * v[i] - xs * xsv;
  }
  return out;
}

Vector SyntheticProblem::jvp_gxy(const Vector& x, const Vector& y, const Vector& v) const {
  check_dims(x, y);
  // d^2 g / dx dy = c2 diag(-sin(x+y)) + diag(s + x.y.s) - (y.s)(x.s)'
  const Vector s = softmax_xy(x, y);
  double xsv = 0.0;
  for (std::size_t i = 0; i < d_; ++i) xsv += x[i] * s[i] * v[i];
  Vector out(d_);
  for (std::size_t i = 0; i < d_; ++i)
    out[i] = -spec_.c2 * std::sin(x[i] + y[i]) * v[i] +
             (s[i] + x[i] * y[i] * s[i]) * v[i] - y[i] * s[i] * xsv;
  return out;
}

std::unique_ptr<BilevelOracles> make_synthetic(const SyntheticSpec& spec) {
  return std::make_unique<SyntheticProblem>(spec);
}

}  // namespace lancbio
