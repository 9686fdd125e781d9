/**
 * @file    brieskorn.hpp
 * @brief   Brieskorn spheres (8/9)z₀³ + Σzᵢ² = 0, (4/3)|z₀|² + Σ|zᵢ|² = 4/9 and their O(2)×SO(n) actions
 */
#pragma once

#include "gmlab/algebra.hpp"
#include "gmlab/numerics.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>

namespace gmlab::brieskorn {

using Complex = std::complex<double>;
using CVec = Eigen::Matrix<Complex, Eigen::Dynamic, 1, 0, 7, 1>;
using algebra::ImVec;

struct BrieskornPoint {
  Complex z0;
  CVec z;
  int dim() const { return static_cast<int>(z.size()); }
};

struct BrieskornRealForm {
  double x0{0}, y0{0};
  ImVec x, y;
};

struct Residuals {
  double cubic{0};   ///< |(8/9)z₀³ + Σzᵢ²|
  double sphere{0};  ///< |(4/3)|z₀|² + Σ|zᵢ|² − 4/9|
  double max() const { return std::max(cubic, sphere); }
};

Residuals residuals(const BrieskornPoint& P);
/// The three real equations in (x₀, y₀, x, y), signed.
Eigen::Vector3d real_residuals(const BrieskornRealForm& R);

BrieskornRealForm to_real(const BrieskornPoint& P);
BrieskornPoint from_real(const BrieskornRealForm& R);

/// Ambient coordinates (x₀, y₀, x, y) in ℝ^{2n+2}.
Eigen::VectorXd ambient(const BrieskornPoint& P);
BrieskornPoint from_ambient(const Eigen::VectorXd& v);

/// Element of O(2) × SO(n); n = 7 uses G₂ matrices.
struct IsometryElement {
  Eigen::Matrix2d o2 = Eigen::Matrix2d::Identity();
  Eigen::MatrixXd rot;

  static IsometryElement identity(int n);
  static IsometryElement rotation(double theta, int n);
};

IsometryElement compose(const IsometryElement& g, const IsometryElement& h);
double orthogonality_residual(const IsometryElement& g);

/// Rotation part D(θ): (e^{2iθ}z₀, e^{3iθ}Az); reflection diag(1,−1): (z̄₀, Az̄).
BrieskornPoint act(const IsometryElement& g, const BrieskornPoint& P, double tol = 1e-8);

double distance(const BrieskornPoint& a, const BrieskornPoint& b);

BrieskornPoint beta(double s);
BrieskornPoint beta_velocity(double s);
/// The point of β with z₃ negated; the orbit-space identification used for the isotropy tables.
BrieskornPoint beta_hat(double s);

/// 3 × (2n+2) Jacobian of (Re cubic, Im cubic, sphere) in ambient coordinates.
Eigen::MatrixXd constraint_jacobian(const BrieskornPoint& P);
/// Orthonormal basis of the tangent space as columns.
Eigen::MatrixXd tangent_basis(const BrieskornPoint& P);
/// Ambient Killing vectors of O(2) × SO(3) at P (rotation first).
Eigen::MatrixXd killing_vectors(const BrieskornPoint& P);

struct GeodesicResidual {
  double tangential{0};
  double orbit_perpendicular{0};
};

GeodesicResidual curve_geodesic_residual(const std::function<BrieskornPoint(double)>& curve, double s,
                                         double h = 1e-3);
GeodesicResidual beta_geodesic_residual(double s);

struct IsotropyReport {
  double principal{0};       ///< worst residual of H elements at the identified point
  double singular_minus{0};  ///< K₋ families at s = 0
  double singular_plus{0};   ///< K₊ families at s = π/4, identified point
  double singular_plus_literal{0};  ///< K₊ families against β(π/4) itself
  double nonmember_min_move{0};
};

std::vector<IsometryElement> principal_isotropy();
std::vector<IsometryElement> kminus_family(double tau);
std::vector<IsometryElement> kplus_family(double theta);

IsotropyReport isotropy_verify(double s, numerics::Rng& rng, int nonmembers = 100);

Complex disc_projection(const BrieskornPoint& P);

/// Derivation x ↦ [[a,b],x] − 3((ab)x − a(bx)) as a 7×7 matrix on imaginary octonions.
Eigen::MatrixXd g2_derivation(const ImVec& a, const ImVec& b);
Eigen::MatrixXd g2_sample(numerics::Rng& rng);
/// max ‖g(xy) − g(x)g(y)‖ over random imaginary pairs.
double automorphism_residual(const Eigen::MatrixXd& g, numerics::Rng& rng, int samples = 20);

Eigen::Matrix3d haar_rotation(numerics::Rng& rng);

/// Sample with z₀ uniform in the disc of radius ½ and z solved exactly.
BrieskornPoint sample_point(int n, numerics::Rng& rng);

}  // namespace gmlab::brieskorn
