/**
 * @file    sp2.hpp
 * @brief   Sp(2), its two-parameter family of left-invariant metrics and the ★/• actions
 *
 * Matrices act on quaternionic column vectors; a tangent vector at A is stored by its
 * body U = Āᵗ·dA, an element of sp(2).
 */
#pragma once

#include "gmlab/algebra.hpp"
#include "gmlab/numerics.hpp"

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <vector>

namespace gmlab::sp2 {

using algebra::Quaternion;

struct QMatrix {
  std::array<Quaternion, 4> e{};

  Quaternion& operator()(int r, int c) { return e[2 * r + c]; }
  const Quaternion& operator()(int r, int c) const { return e[2 * r + c]; }

  static QMatrix identity();
  static QMatrix diag(const Quaternion& a, const Quaternion& b);
  static QMatrix real(const Eigen::Matrix2d& m);
  static QMatrix make(const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d);
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(double s, const QMatrix& a);
/// Left multiplication of every entry by a quaternion scalar.
QMatrix operator*(const Quaternion& q, const QMatrix& a);

QMatrix adjoint(const QMatrix& a);
double max_abs(const QMatrix& a);
QMatrix bracket(const QMatrix& u, const QMatrix& v);

/// Element of Sp(2): Āᵗ·A = 1.
using SpElement = QMatrix;

double unitarity_residual(const SpElement& a);
/// Distance of a body from sp(2): diagonal entries imaginary, off-diagonal c and −c̄.
double algebra_residual(const QMatrix& body);

struct MetricParams {
  double mu{0.5};
  double nu{0.5};
};

struct Sp2Tangent {
  SpElement base;
  QMatrix body;
};

/// Re(μ x̄₁x₂ + ȳ₁y₂ + ν z̄₁z₂) for bodies [[x, −ȳ],[y, z]].
double metric_inner(const MetricParams& P, const QMatrix& u, const QMatrix& v);
double metric_inner(const MetricParams& P, const Sp2Tangent& u, const Sp2Tangent& v);

/// q★A = q·A·diag(q̄, 1).
SpElement star_act(const Quaternion& q, const SpElement& a);
/// (B, q)•A = B·A·diag(1, q̄) for B ∈ O(2).
SpElement bullet_act(const Eigen::Matrix2d& b, const Quaternion& q, const SpElement& a);

Eigen::Matrix2d rotation(double theta);

/// Point of the orbit space Sp(2)/S³ under ★, stored by a representative.
struct Sigma7Point {
  SpElement rep;
};

/// Closed-form q with q★x ≈ y recovered from the second columns.
Quaternion orbit_connector(const SpElement& x, const SpElement& y);
double orbit_residual(const SpElement& x, const SpElement& y);
bool orbit_equal(const Sigma7Point& x, const Sigma7Point& y, double tol = 1e-10);

SpElement horizontal_lift(const Eigen::Vector3d& p, const Quaternion& w, double t);

/// Body of the ★-orbit direction generated by imaginary u at A.
QMatrix star_vertical_body(const SpElement& a, const Quaternion& u);
std::array<QMatrix, 3> star_vertical_basis(const SpElement& a);
/// Bodies of the four •-orbit directions at A (rotation, then i, j, k).
std::array<QMatrix, 4> bullet_orbit_basis(const SpElement& a);
/// Orthogonal projection of a body onto the ★-horizontal space at A.
QMatrix horizontal_part(const MetricParams& P, const SpElement& a, const QMatrix& body);

/// Basis diag(i,0), diag(j,0), diag(k,0), diag(0,i), diag(0,j), diag(0,k), offdiag(1,i,j,k).
std::array<QMatrix, 10> algebra_basis();

using Curve = std::function<SpElement(double)>;

/// Body velocity Āᵗ·A′ by Richardson-extrapolated central differences.
QMatrix body_velocity(const Curve& curve, double t, double h = 1e-4);
/// Largest |⟨velocity, ξ⟩| over the ★-vertical basis, velocity by central difference with step h.
double horizontality_residual(const Curve& curve, double t, const MetricParams& P, double h = 1e-6);
double lift_is_horizontal(const Eigen::Vector3d& p, const Quaternion& w, double t, const MetricParams& P);

SpElement normal_geodesic_alpha(double s);
Curve alpha_curve();

/// max_i |d/dt⟨u,wᵢ⟩ − ⟨u,[u,wᵢ]⟩| for the body velocity u.
double euler_arnold_residual(const Curve& curve, const MetricParams& P, double t);

enum class KillingForm { corrected, literal };

struct KillingFields {
  std::array<QMatrix, 4> orbit;       ///< bodies of v̂₀..v̂₃
  std::array<QMatrix, 3> vertical;    ///< bodies of ξ₁..ξ₃
  std::array<QMatrix, 4> projected;   ///< horizontal parts by projection
  std::array<QMatrix, 4> closed;      ///< horizontal parts from closed forms
};

KillingFields killing_fields_along_alpha(double s, const MetricParams& P, KillingForm form = KillingForm::corrected);
/// Closed forms of the vertical basis along α̃.
std::array<QMatrix, 3> vertical_closed_forms(double s);

Eigen::Matrix4d metric_matrix(double s, const MetricParams& P);
Eigen::Matrix4d metric_matrix_direct(double s, const MetricParams& P);

bool in_sigma1(const Sigma7Point& x, double tol = 1e-10);
bool in_sigma5(const Sigma7Point& x, double tol = 1e-10);
bool in_sigma6_pm1(const Sigma7Point& x, double tol = 1e-10);
/// Image of U(2): the orbit contains a matrix with entries in span{1, i}.
bool in_unitary_image(const Sigma7Point& x, double tol = 1e-10);

struct WiedersehenResult {
  bool ok{false};
  double residual_pi{0};
  double residual_2pi{0};
  double witness_residual{0};
};

WiedersehenResult wiedersehen_check(const Eigen::Vector3d& p, const Quaternion& w, const MetricParams& P);

SpElement flat_torus(double a, double b);

struct TorusResiduals {
  double unitarity{0};
  double star_horizontal{0};
  double euler_arnold{0};
  double bullet_horizontal_first{0};
  double bullet_horizontal_second{0};
};

TorusResiduals flat_torus_checks(double a, double b, const MetricParams& P);

/// 4×4 complex representation, multiplicative.
Eigen::Matrix4cd to_complex(const QMatrix& a);
QMatrix from_complex(const Eigen::Matrix4cd& m);
SpElement exp_body(const QMatrix& body);
SpElement random_element(numerics::Rng& rng);

/// Representatives A with (B,q)•A ★-equivalent to A, from randomized least-squares searches.
std::vector<SpElement> fixed_point_search(const Eigen::Matrix2d& b, const Quaternion& q, numerics::Rng& rng,
                                          int starts, double tol = 1e-9);

}  // namespace gmlab::sp2
