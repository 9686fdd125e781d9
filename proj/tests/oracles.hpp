/**
 * @file    oracles.hpp
 * @brief   Reference computations for the unit tests, written without the library's algebra
 */
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using V4 = Eigen::Vector4d;
using V8 = Eigen::Matrix<double, 8, 1>;

/// Hamilton product on (w, x, y, z).
inline V4 hamilton(const V4& a, const V4& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

inline V4 qconj(const V4& a) { return {a[0], -a[1], -a[2], -a[3]}; }

/// (a, b)(c, d) = (ac − d̄b, da + bc̄).
inline V8 doubling(const V8& u, const V8& v) {
  const V4 a = u.head<4>(), b = u.tail<4>(), c = v.head<4>(), d = v.tail<4>();
  V8 out;
  out.head<4>() = hamilton(a, c) - hamilton(qconj(d), b);
  out.tail<4>() = hamilton(d, a) + hamilton(b, qconj(c));
  return out;
}

inline Eigen::Vector3d cross3(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct RealForm {
  double x0, y0;
  Eigen::Vector3d x, y;
};

/// The rational diffeomorphism, written out coefficient by coefficient.
inline RealForm rational_map(const Eigen::Vector3d& p, const Eigen::Vector3d& w) {
  const double pp = p.squaredNorm(), c = p.dot(w);
  const double pre = 1.0 / (3 * (1 + pp) * (1 + pp));
  const Eigen::Vector3d pxw = cross3(p, w);
  RealForm r;
  r.x0 = 0.5 * (w.squaredNorm() - pp);
  r.y0 = -c;
  r.x = pre * (((3 - 2 * pp) * (1 + pp) * (1 + pp) - 4 * (1 - pp) * c * c) * p -
               2 * (3 + 8 * pp + pp * pp - 4 * c * c) * c * w - 8 * pp * c * pxw);
  r.y = pre * ((-(1 + 2 * pp) * (1 - 6 * pp + pp * pp) - 4 * (1 + 3 * pp) * c * c) * w +
               2 * (1 - pp) * (1 + 3 * pp) * c * p - 4 * (1 + 2 * pp) * (1 - pp) * pxw);
  return r;
}

/// Signed residuals of the three real Brieskorn equations.
inline Eigen::Vector3d real_equations(double x0, double y0, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return {x.squaredNorm() - 2.0 / 9 * (1 - 2 * x0 * x0 * x0 + 6 * x0 * y0 * y0 - 3 * x0 * x0 - 3 * y0 * y0),
          y.squaredNorm() - 2.0 / 9 * (1 + 2 * x0 * x0 * x0 - 6 * x0 * y0 * y0 - 3 * x0 * x0 - 3 * y0 * y0),
          x.dot(y) - 4.0 / 9 * y0 * (y0 * y0 - 3 * x0 * x0)};
}

/// Gauss curvature of ds² + G(s)dφ² as −(√G)''/√G, second derivative by a five-point stencil.
inline double rotational_curvature(const std::function<double(double)>& G, double s, double h = 1e-3) {
  auto f = [&](double t) { return std::sqrt(G(t)); };
  const double d2 = (-f(s + 2 * h) + 16 * f(s + h) - 30 * f(s) + 16 * f(s - h) - f(s - 2 * h)) / (12 * h * h);
  return -d2 / f(s);
}

/// Sectional curvatures of a Berger sphere scale·(σ₁² + σ₂² + ε²σ₃²): horizontal plane, vertical planes.
inline std::pair<double, double> berger_planes(double scale, double eps2) {
  return {(4 - 3 * eps2) / scale, eps2 / scale};
}

}  // namespace oracle
