#include "gmlab/algebra.hpp"

#include "gmlab/errors.hpp"

#include <algorithm>
#include <numbers>

namespace gmlab::algebra {

Quaternion Quaternion::inverse() const { return conj() / norm2(); }

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w += o.w;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w -= o.w;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Quaternion& Quaternion::operator*=(double s) {
  w *= s;
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
Quaternion operator*(const Quaternion& a, double s) { return s * a; }
Quaternion operator/(const Quaternion& a, double s) { return (1.0 / s) * a; }
double dot(const Quaternion& a, const Quaternion& b) { return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z; }
double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

Octonion Octonion::fromVector(const Eigen::Matrix<double, 8, 1>& v) {
  return {{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]}};
}

Eigen::Matrix<double, 8, 1> Octonion::vector() const {
  Eigen::Matrix<double, 8, 1> v;
  v << a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z;
  return v;
}

// (a,b)(c,d) = (ac − d̄b, da + b c̄)
Octonion operator*(const Octonion& u, const Octonion& v) {
  return {u.a * v.a - v.b.conj() * u.b, v.b * u.a + u.b * v.a.conj()};
}

Octonion operator+(const Octonion& u, const Octonion& v) { return {u.a + v.a, u.b + v.b}; }
Octonion operator-(const Octonion& u, const Octonion& v) { return {u.a - v.a, u.b - v.b}; }
Octonion operator*(double s, const Octonion& u) { return {s * u.a, s * u.b}; }

Element mul(const Element& a, const Element& b) {
  require(a.size() == b.size() && (a.size() == 4 || a.size() == 8), "mul: operands must both have length 4 or 8");
  if (a.size() == 4) return (Quaternion::fromVector(a) * Quaternion::fromVector(b)).vector();
  return (Octonion::fromVector(a) * Octonion::fromVector(b)).vector();
}

Element mul(const Element& a, const Element& b, const Element& c) { return mul(mul(a, b), c); }

Element conj(const Element& a) {
  Element r = -a;
  r[0] = a[0];
  return r;
}

Element embed(const ImVec& v) {
  Element r(v.size() + 1);
  r[0] = 0;
  r.tail(v.size()) = v;
  return r;
}

ImVec imaginary(const Element& a) { return a.tail(a.size() - 1); }

Element one(int dim) {
  Element r = Element::Zero(dim);
  r[0] = 1;
  return r;
}

ImVec cross(const ImVec& a, const ImVec& b) {
  require(a.size() == b.size() && (a.size() == 3 || a.size() == 7), "cross: operands must both have dimension 3 or 7");
  return imaginary(mul(embed(a), embed(b)));
}

Element sphere_exp(const ImVec& p, double t) {
  const double r = p.norm();
  Element e = Element::Zero(p.size() + 1);
  e[0] = std::cos(t * r);
  // sin(tr)/r = t·sinc(tr) stays finite as r → 0
  e.tail(p.size()) = p * (t * sinc(t * r));
  return e;
}

double sinc(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

TrigQuotients safe_trig_quotients(double r, int k) {
  require(r >= -1e-12 && r <= 1.0 + 1e-9, "safe_trig_quotients: r outside [0,1]");
  require(k > 0 && k % 2 == 1, "safe_trig_quotients: multiplier must be odd and positive");
  r = std::clamp(r, 0.0, 1.0);
  const double half = k * std::numbers::pi / 2;
  const double u = 1.0 - r;
  // cos(kπr/2) = ± sin(kπu/2) for odd k
  const double sign = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return {half * sinc(half * r), sign * half * sinc(half * u) / (1.0 + r)};
}

TrigQuotients rational_quotients(double r) {
  const double d = 1.0 + r * r;
  return {2.0 / d, 1.0 / d};
}

Eigen::Matrix3d rotation_matrix(const Quaternion& q) {
  Eigen::Matrix3d R;
  for (int c = 0; c < 3; ++c) {
    Eigen::Vector3d e = Eigen::Vector3d::Unit(c);
    R.col(c) = (q * Quaternion::pure(e) * q.conj()).imag() / q.norm2();
  }
  return R;
}

}  // namespace gmlab::algebra
