/**
 * @file    algebra.hpp
 * @brief   Quaternions, octonions, cross products and removable-singularity helpers
 */
#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>

namespace gmlab::algebra {

/// Imaginary quaternion or octonion as a real vector of length 3 or 7.
using ImVec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 7, 1>;
/// Full quaternion or octonion, component 0 is the scalar part.
using Element = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 8, 1>;

struct Quaternion {
  double w{0}, x{0}, y{0}, z{0};

  constexpr Quaternion() = default;
  constexpr Quaternion(double s) : w(s) {}
  constexpr Quaternion(double s, double i, double j, double k) : w(s), x(i), y(j), z(k) {}

  static Quaternion fromVector(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }
  static Quaternion pure(const Eigen::Vector3d& v) { return {0, v[0], v[1], v[2]}; }

  Eigen::Vector4d vector() const { return {w, x, y, z}; }
  Eigen::Vector3d imag() const { return {x, y, z}; }
  double real() const { return w; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  Quaternion inverse() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(double s);
};

Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a);
Quaternion operator*(double s, const Quaternion& a);
Quaternion operator*(const Quaternion& a, double s);
Quaternion operator/(const Quaternion& a, double s);
double dot(const Quaternion& a, const Quaternion& b);
double distance(const Quaternion& a, const Quaternion& b);

inline constexpr Quaternion kI{0, 1, 0, 0};
inline constexpr Quaternion kJ{0, 0, 1, 0};
inline constexpr Quaternion kK{0, 0, 0, 1};

/// Cayley-Dickson pair (a, b) standing for a + b·l.
struct Octonion {
  Quaternion a, b;

  static Octonion fromVector(const Eigen::Matrix<double, 8, 1>& v);
  Eigen::Matrix<double, 8, 1> vector() const;
  double norm2() const { return a.norm2() + b.norm2(); }
  double norm() const { return std::sqrt(norm2()); }
  Octonion conj() const { return {a.conj(), -b}; }
};

Octonion operator*(const Octonion& u, const Octonion& v);
Octonion operator+(const Octonion& u, const Octonion& v);
Octonion operator-(const Octonion& u, const Octonion& v);
Octonion operator*(double s, const Octonion& u);

/// Product of two elements of equal length 4 or 8.
Element mul(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b, const Element& c);
Element conj(const Element& a);
Element embed(const ImVec& v);
ImVec imaginary(const Element& a);
Element one(int dim);

/// Im(a·b) for imaginary a, b of dimension 3 or 7.
ImVec cross(const ImVec& a, const ImVec& b);

/// cos(t|p|) + (p/|p|) sin(t|p|), returned in the ambient algebra of p.
Element sphere_exp(const ImVec& p, double t);

/// sin(x)/x with a series near zero.
double sinc(double x);

struct TrigQuotients {
  double f1;  ///< sin(kπr/2)/r
  double f2;  ///< cos(kπr/2)/(1−r²)
};

/// Quotients for odd multiplier k; r must lie in [0, 1].
TrigQuotients safe_trig_quotients(double r, int k = 1);

/// Rational counterparts 2/(1+r²), 1/(1+r²).
TrigQuotients rational_quotients(double r);

/// 3×3 rotation of Im H given by v ↦ q v q̄.
Eigen::Matrix3d rotation_matrix(const Quaternion& q);

}  // namespace gmlab::algebra
