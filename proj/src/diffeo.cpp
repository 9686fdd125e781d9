/**
 * @file    diffeo.cpp
 * @brief   Rational and trigonometric diffeomorphisms and their frame inverse
 */
#include "gmlab/diffeo.hpp"

#include "gmlab/errors.hpp"

#include <cmath>
#include <numbers>

namespace gmlab::diffeo {

using algebra::cross;

double sphere_residual(const SpherePair& x) { return std::abs(x.p.squaredNorm() + x.w.squaredNorm() - 1.0); }

SpherePair random_pair(int n, numerics::Rng& rng) {
  const Eigen::VectorXd v = numerics::unit_vector(rng, 2 * n);
  return {v.head(n), v.tail(n)};
}

namespace {

FrameCoefficients rational_coefficients(double pp, double c) {
  const double pre = 1.0 / (3.0 * (1 + pp) * (1 + pp));
  FrameCoefficients f;
  f.ap = pre * ((3 - 2 * pp) * (1 + pp) * (1 + pp) - 4 * (1 - pp) * c * c);
  f.aw = -pre * 2 * (3 + 8 * pp + pp * pp - 4 * c * c) * c;
  f.ax = -pre * 8 * pp * c;
  f.bw = pre * (-(1 + 2 * pp) * (1 - 6 * pp + pp * pp) - 4 * (1 + 3 * pp) * c * c);
  f.bp = pre * 2 * (1 - pp) * (1 + 3 * pp) * c;
  f.bx = -pre * 4 * (1 + 2 * pp) * (1 - pp);
  return f;
}

// The singular quotients are rewritten through f1 = sin(πr/2)/r, f2 = cos(πr/2)/(1−r²).
FrameCoefficients trig_coefficients(double pp, double c, double ww) {
  const double r = std::sqrt(std::max(pp, 0.0));
  const auto [f1, f2] = algebra::safe_trig_quotients(std::min(r, 1.0));
  const double half_cos = std::cos(std::numbers::pi * r / 2);
  const double cp = std::cos(std::numbers::pi * r);
  const double A = 2 * f2 * half_cos;   // (1 + cos πr)/(1 − r²)
  const double B = 2 * f2 * f2;         // (1 + cos πr)/(1 − r²)²
  const double C = 2 * f1 * f2;         // sin πr/((1 − r²) r)
  const double E = 2 * f1 * half_cos;   // sin πr / r
  // (−1 + 4r² + (1 + 2r²) cos πr)/(r²(1 − r²)) in two cancellation-free forms
  const double G = r < 0.5 ? (6 - 2 * (1 + 2 * pp) * f1 * f1) / (1 - pp)
                           : (-2 + 2 * (1 + 2 * pp) * half_cos * f2) / pp;
  FrameCoefficients f;
  f.ap = (3 - 2 * pp - 2 * A * c * c) / 3;
  f.aw = -2 * (3 + pp * A - 2 * B * c * c) * c / 3;
  f.ax = -2 * pp * C * c / 3;
  f.bw = (-(1 + 2 * pp) * cp + 2 * G * c * c) / 3;
  f.bp = -G * ww * c / 3;
  f.bx = -(1 + 2 * pp) * E / 3;
  return f;
}

}  // namespace

FrameCoefficients frame_coefficients(Profile profile, double pp, double pw, double ww) {
  return profile == Profile::rational ? rational_coefficients(pp, pw) : trig_coefficients(pp, pw, ww);
}

BrieskornRealForm psi_map(const SpherePair& x, Profile profile) {
  require(x.p.size() == x.w.size() && (x.dim() == 3 || x.dim() == 7), "psi: p and w must share dimension 3 or 7");
  require(sphere_residual(x) < 1e-9, "psi: |p|² + |w|² must be 1");
  const double pp = x.p.squaredNorm(), ww = x.w.squaredNorm(), c = x.p.dot(x.w);
  const auto f = frame_coefficients(profile, pp, c, ww);
  const ImVec pxw = cross(x.p, x.w);
  BrieskornRealForm b;
  b.x0 = 0.5 * (ww - pp);
  b.y0 = -c;
  b.x = f.ap * x.p + f.aw * x.w + f.ax * pxw;
  b.y = f.bp * x.p + f.bw * x.w + f.bx * pxw;
  return b;
}

BrieskornRealForm psi(const SpherePair& x) { return psi_map(x, Profile::rational); }

BrieskornRealForm psi_trig(const SpherePair& x) { return psi_map(x, Profile::trigonometric); }

double determinant_bound(double x0) { return 256.0 / (9.0 * std::pow(3 - 2 * x0, 8)); }

InverseResult psi_inverse(const BrieskornRealForm& b, Profile profile) {
  const int n = static_cast<int>(b.x.size());
  require(n == 3 || n == 7, "psi_inverse: dimension must be 3 or 7");
  const double pp = std::clamp((1 - 2 * b.x0) / 2, 0.0, 1.0);
  const double ww = 1 - pp, c = -b.y0;
  const auto f = frame_coefficients(profile, pp, c, ww);

  // x×y in the frame, using p×(p×w) = c p − pp w and w×(p×w) = ww p − c w
  const double m1 = f.ap * f.bw - f.aw * f.bp;
  const double m2 = f.ap * f.bx - f.ax * f.bp;
  const double m3 = f.aw * f.bx - f.ax * f.bw;
  Eigen::Matrix3d M;
  M << f.ap, f.aw, f.ax,
       f.bp, f.bw, f.bx,
       m2 * c + m3 * ww, -m2 * pp - m3 * c, m1;

  InverseResult out;
  out.determinant = M.determinant();
  if (profile == Profile::rational && out.determinant < determinant_bound(b.x0) - 1e-9)
    throw InternalError("psi_inverse: frame determinant below its lower bound");

  Eigen::MatrixXd rhs(3, n);
  rhs.row(0) = b.x.transpose();
  rhs.row(1) = b.y.transpose();
  rhs.row(2) = cross(b.x, b.y).transpose();
  const Eigen::MatrixXd sol = M.partialPivLu().solve(rhs);
  out.x.p = sol.row(0).transpose();
  out.x.w = sol.row(1).transpose();
  return out;
}

BrieskornRealForm partial_injective(const SpherePair& x) {
  const double wn = x.w.norm();
  if (wn <= 1e-9) throw DomainError("partial_injective: w must be nonzero");
  const ImVec wh = x.w / wn;
  const double pp = x.p.squaredNorm(), ph = x.p.dot(wh);
  BrieskornRealForm b;
  b.x0 = 0.5 * (wn * wn - pp);
  b.y0 = -x.p.dot(x.w);
  b.x = -((pp + 3 * wn * wn - 4 * ph * ph) * x.p + 2 * pp * ph * wh) / 3;
  b.y = (-(3 * pp + wn * wn) * x.w + 6 * x.w.dot(x.p) * x.p) / 3;
  return b;
}

SpherePair rotate(const Eigen::MatrixXd& g, const SpherePair& x) { return {g * x.p, g * x.w}; }

BrieskornRealForm rotate(const Eigen::MatrixXd& g, const BrieskornRealForm& b) { return {b.x0, b.y0, g * b.x, g * b.y}; }

double distance(const BrieskornRealForm& a, const BrieskornRealForm& b) {
  return std::max({std::abs(a.x0 - b.x0), std::abs(a.y0 - b.y0), (a.x - b.x).cwiseAbs().maxCoeff(),
                   (a.y - b.y).cwiseAbs().maxCoeff()});
}

double distance(const SpherePair& a, const SpherePair& b) {
  return std::max((a.p - b.p).cwiseAbs().maxCoeff(), (a.w - b.w).cwiseAbs().maxCoeff());
}

double equivariance_check(const Eigen::MatrixXd& g, const SpherePair& x, Profile profile) {
  return distance(psi_map(rotate(g, x), profile), rotate(g, psi_map(x, profile)));
}

brieskorn::Complex disc_coordinate(const SpherePair& x) {
  return {x.w.squaredNorm() - x.p.squaredNorm(), -2 * x.p.dot(x.w)};
}

}  // namespace gmlab::diffeo
