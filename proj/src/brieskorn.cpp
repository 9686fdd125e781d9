#include "gmlab/brieskorn.hpp"

#include "gmlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gmlab::brieskorn {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Eigen::Matrix2d reflection() { return Eigen::Vector2d(1.0, -1.0).asDiagonal(); }

Eigen::Matrix2d planar(double theta) {
  Eigen::Matrix2d d;
  d << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return d;
}

Eigen::Matrix3d diag3(double a, double b, double c) { return Eigen::Vector3d(a, b, c).asDiagonal(); }

}  // namespace

Residuals residuals(const BrieskornPoint& P) {
  Complex cubic = 8.0 / 9.0 * P.z0 * P.z0 * P.z0;
  double sphere = 4.0 / 3.0 * std::norm(P.z0) - 4.0 / 9.0;
  for (int i = 0; i < P.dim(); ++i) {
    cubic += P.z[i] * P.z[i];
    sphere += std::norm(P.z[i]);
  }
  return {std::abs(cubic), std::abs(sphere)};
}

Eigen::Vector3d real_residuals(const BrieskornRealForm& R) {
  const double x0 = R.x0, y0 = R.y0;
  const double common = 1 - 3 * x0 * x0 - 3 * y0 * y0;
  const double odd = 2 * x0 * x0 * x0 - 6 * x0 * y0 * y0;
  return {R.x.squaredNorm() - 2.0 / 9.0 * (common - odd), R.y.squaredNorm() - 2.0 / 9.0 * (common + odd),
          R.x.dot(R.y) - 4.0 / 9.0 * y0 * (y0 * y0 - 3 * x0 * x0)};
}

BrieskornRealForm to_real(const BrieskornPoint& P) {
  BrieskornRealForm R;
  R.x0 = P.z0.real();
  R.y0 = P.z0.imag();
  R.x = P.z.real();
  R.y = P.z.imag();
  return R;
}

BrieskornPoint from_real(const BrieskornRealForm& R) {
  BrieskornPoint P;
  P.z0 = Complex(R.x0, R.y0);
  P.z.resize(R.x.size());
  for (int i = 0; i < R.x.size(); ++i) P.z[i] = Complex(R.x[i], R.y[i]);
  return P;
}

Eigen::VectorXd ambient(const BrieskornPoint& P) {
  const int n = P.dim();
  Eigen::VectorXd v(2 * n + 2);
  v[0] = P.z0.real();
  v[1] = P.z0.imag();
  v.segment(2, n) = P.z.real();
  v.segment(2 + n, n) = P.z.imag();
  return v;
}

BrieskornPoint from_ambient(const Eigen::VectorXd& v) {
  const int n = static_cast<int>(v.size() - 2) / 2;
  BrieskornPoint P;
  P.z0 = Complex(v[0], v[1]);
  P.z.resize(n);
  for (int i = 0; i < n; ++i) P.z[i] = Complex(v[2 + i], v[2 + n + i]);
  return P;
}

IsometryElement IsometryElement::identity(int n) { return {Eigen::Matrix2d::Identity(), Eigen::MatrixXd::Identity(n, n)}; }

IsometryElement IsometryElement::rotation(double theta, int n) { return {planar(theta), Eigen::MatrixXd::Identity(n, n)}; }

IsometryElement compose(const IsometryElement& g, const IsometryElement& h) { return {g.o2 * h.o2, g.rot * h.rot}; }

double orthogonality_residual(const IsometryElement& g) {
  const int n = static_cast<int>(g.rot.rows());
  return std::max((g.o2.transpose() * g.o2 - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(),
                  (g.rot.transpose() * g.rot - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
}

BrieskornPoint act(const IsometryElement& g, const BrieskornPoint& P, double tol) {
  require(residuals(P).max() < tol, "act: point is not on the Brieskorn sphere");
  require(g.rot.rows() == P.dim() && g.rot.cols() == P.dim(), "act: dimension mismatch");
  const bool flip = g.o2.determinant() < 0;
  const Eigen::Matrix2d r = flip ? Eigen::Matrix2d(g.o2 * reflection()) : g.o2;
  const double theta = std::atan2(r(1, 0), r(0, 0));
  Complex z0 = flip ? std::conj(P.z0) : P.z0;
  CVec z = flip ? CVec(P.z.conjugate()) : P.z;
  BrieskornPoint out;
  out.z0 = std::exp(2.0 * theta * kI) * z0;
  out.z = std::exp(3.0 * theta * kI) * (g.rot.cast<Complex>() * z);
  return out;
}

double distance(const BrieskornPoint& a, const BrieskornPoint& b) {
  return std::max(std::abs(a.z0 - b.z0), (a.z - b.z).cwiseAbs().maxCoeff());
}

BrieskornPoint beta(double s) {
  BrieskornPoint P;
  P.z0 = -0.5 * std::cos(2 * s);
  P.z.resize(3);
  P.z << 0.0, (3 * std::cos(s) - std::cos(3 * s)) / 6, kI * (3 * std::sin(s) + std::sin(3 * s)) / 6.0;
  return P;
}

BrieskornPoint beta_velocity(double s) {
  BrieskornPoint P;
  P.z0 = std::sin(2 * s);
  P.z.resize(3);
  P.z << 0.0, (-3 * std::sin(s) + 3 * std::sin(3 * s)) / 6, kI * (3 * std::cos(s) + 3 * std::cos(3 * s)) / 6.0;
  return P;
}

BrieskornPoint beta_hat(double s) {
  BrieskornPoint P = beta(s);
  P.z[2] = -P.z[2];
  return P;
}

Eigen::MatrixXd constraint_jacobian(const BrieskornPoint& P) {
  const int n = P.dim();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(3, 2 * n + 2);
  const Complex d0 = 8.0 / 3.0 * P.z0 * P.z0;  // derivative of (8/9)z₀³
  J(0, 0) = d0.real();
  J(0, 1) = -d0.imag();
  J(1, 0) = d0.imag();
  J(1, 1) = d0.real();
  J(2, 0) = 8.0 / 3.0 * P.z0.real();
  J(2, 1) = 8.0 / 3.0 * P.z0.imag();
  for (int i = 0; i < n; ++i) {
    const double x = P.z[i].real(), y = P.z[i].imag();
    J(0, 2 + i) = 2 * x;
    J(0, 2 + n + i) = -2 * y;
    J(1, 2 + i) = 2 * y;
    J(1, 2 + n + i) = 2 * x;
    J(2, 2 + i) = 2 * x;
    J(2, 2 + n + i) = 2 * y;
  }
  return J;
}

Eigen::MatrixXd tangent_basis(const BrieskornPoint& P) {
  const Eigen::MatrixXd Jt = constraint_jacobian(P).transpose();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Jt);
  const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(Jt.rows(), Jt.rows());
  return Q.rightCols(Jt.rows() - 3);
}

Eigen::MatrixXd killing_vectors(const BrieskornPoint& P) {
  require(P.dim() == 3, "killing_vectors: implemented for n = 3");
  BrieskornPoint rot;
  rot.z0 = 2.0 * kI * P.z0;
  rot.z = 3.0 * kI * P.z;
  Eigen::MatrixXd K(8, 4);
  K.col(0) = ambient(rot);
  for (int k = 0; k < 3; ++k) {
    Eigen::Matrix3d E = Eigen::Matrix3d::Zero();
    E((k + 1) % 3, (k + 2) % 3) = -1;
    E((k + 2) % 3, (k + 1) % 3) = 1;
    BrieskornPoint v;
    v.z0 = 0.0;
    v.z = E.cast<Complex>() * P.z;
    K.col(k + 1) = ambient(v);
  }
  return K;
}

GeodesicResidual curve_geodesic_residual(const std::function<BrieskornPoint(double)>& curve, double s, double h) {
  auto pos = [&](double t) { return ambient(curve(t)); };
  const Eigen::VectorXd c = pos(s);
  const Eigen::VectorXd a1 = (pos(s + h) - 2 * c + pos(s - h)) / (h * h);
  const Eigen::VectorXd a2 = (pos(s + 2 * h) - 2 * c + pos(s - 2 * h)) / (4 * h * h);
  const Eigen::VectorXd acc = (4 * a1 - a2) / 3;
  const Eigen::VectorXd vel = numerics::richardson(pos, s, h);

  const BrieskornPoint P = curve(s);
  const Eigen::MatrixXd T = tangent_basis(P);
  GeodesicResidual r;
  r.tangential = (T.transpose() * acc).norm();
  if (P.dim() == 3) r.orbit_perpendicular = (killing_vectors(P).transpose() * vel).cwiseAbs().maxCoeff();
  return r;
}

GeodesicResidual beta_geodesic_residual(double s) { return curve_geodesic_residual(beta, s); }

std::vector<IsometryElement> principal_isotropy() {
  const Eigen::Matrix2d I2 = Eigen::Matrix2d::Identity();
  return {{I2, diag3(1, 1, 1)},
          {-I2, diag3(1, -1, -1)},
          {reflection(), diag3(-1, 1, -1)},
          {-reflection(), diag3(-1, -1, 1)}};
}

std::vector<IsometryElement> kminus_family(double tau) {
  Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
  rot(0, 0) = std::cos(tau);
  rot(0, 2) = -std::sin(tau);
  rot(2, 0) = std::sin(tau);
  rot(2, 2) = std::cos(tau);
  const Eigen::Matrix3d flip = rot * diag3(1, -1, -1);
  const Eigen::Matrix2d I2 = Eigen::Matrix2d::Identity();
  return {{I2, rot}, {-I2, flip}, {reflection(), rot}, {-reflection(), flip}};
}

std::vector<IsometryElement> kplus_family(double theta) {
  Eigen::Matrix3d a = Eigen::Matrix3d::Identity();
  a.bottomRightCorner<2, 2>() = planar(-3 * theta);
  return {{planar(theta), a}, {planar(theta) * reflection(), a * diag3(-1, 1, -1)}};
}

IsotropyReport isotropy_verify(double s, numerics::Rng& rng, int nonmembers) {
  IsotropyReport r;
  const BrieskornPoint p = beta_hat(s);
  for (const auto& g : principal_isotropy()) r.principal = std::max(r.principal, distance(act(g, p), p));

  const BrieskornPoint p0 = beta_hat(0.0);
  const BrieskornPoint pq = beta_hat(kPi / 4), pq_lit = beta(kPi / 4);
  for (int k = 0; k < 16; ++k) {
    const double angle = 2 * kPi * k / 16 + 0.1;
    for (const auto& g : kminus_family(angle)) r.singular_minus = std::max(r.singular_minus, distance(act(g, p0), p0));
    for (const auto& g : kplus_family(angle)) {
      r.singular_plus = std::max(r.singular_plus, distance(act(g, pq), pq));
      r.singular_plus_literal = std::max(r.singular_plus_literal, distance(act(g, pq_lit), pq_lit));
    }
  }

  r.nonmember_min_move = std::numeric_limits<double>::infinity();
  for (int k = 0; k < nonmembers; ++k) {
    IsometryElement g{planar(numerics::uniform(rng, 0, 2 * kPi)), haar_rotation(rng)};
    if (numerics::uniform(rng, 0, 1) < 0.5) g.o2 = g.o2 * reflection();
    r.nonmember_min_move = std::min(r.nonmember_min_move, distance(act(g, p), p));
  }
  return r;
}

Complex disc_projection(const BrieskornPoint& P) {
  require(residuals(P).max() < 1e-8, "disc_projection: point is not on the Brieskorn sphere");
  return 2.0 * P.z0;
}

Eigen::MatrixXd g2_derivation(const ImVec& a, const ImVec& b) {
  using algebra::embed;
  using algebra::mul;
  const auto A = embed(a), B = embed(b);
  const auto ab = mul(A, B) - mul(B, A);
  Eigen::MatrixXd D(7, 7);
  for (int c = 0; c < 7; ++c) {
    const auto X = embed(ImVec(Eigen::VectorXd::Unit(7, c)));
    const auto v = mul(ab, X) - mul(X, ab) - 3.0 * (mul(mul(A, B), X) - mul(A, mul(B, X)));
    D.col(c) = algebra::imaginary(v);
  }
  return D;
}

Eigen::MatrixXd g2_sample(numerics::Rng& rng) {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(7, 7);
  for (int k = 0; k < 3; ++k) D += 0.3 * g2_derivation(numerics::gaussian(rng, 7), numerics::gaussian(rng, 7));
  return numerics::expm(D);
}

double automorphism_residual(const Eigen::MatrixXd& g, numerics::Rng& rng, int samples) {
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    const ImVec x = numerics::gaussian(rng, 7), y = numerics::gaussian(rng, 7);
    const auto xy = algebra::mul(algebra::embed(x), algebra::embed(y));
    const auto gxy = algebra::mul(algebra::embed(g * x), algebra::embed(g * y));
    Eigen::VectorXd lhs(8);
    lhs[0] = xy[0];
    lhs.tail(7) = g * algebra::imaginary(xy);
    worst = std::max(worst, (lhs - Eigen::VectorXd(gxy)).cwiseAbs().maxCoeff());
  }
  return worst;
}

Eigen::Matrix3d haar_rotation(numerics::Rng& rng) { return algebra::rotation_matrix(numerics::unit_quaternion(rng)); }

BrieskornPoint sample_point(int n, numerics::Rng& rng) {
  require(n >= 2, "sample_point: n must be at least 2");
  BrieskornPoint P;
  const double rad = 0.5 * std::sqrt(numerics::uniform(rng, 0, 1));
  P.z0 = std::polar(rad, numerics::uniform(rng, 0, 2 * kPi));
  const Complex target = -8.0 / 9.0 * P.z0 * P.z0 * P.z0;
  const double R = 4.0 / 9.0 - 4.0 / 3.0 * std::norm(P.z0);
  const double na = std::sqrt(std::max(0.0, (R + target.real()) / 2));
  const double nb = std::sqrt(std::max(0.0, (R - target.real()) / 2));
  const Eigen::VectorXd a = numerics::unit_vector(rng, n);
  Eigen::VectorXd e = numerics::gaussian(rng, n);
  e -= e.dot(a) * a;
  e.normalize();
  const double denom = 2 * na * nb;
  const double c = denom > 0 ? std::clamp(target.imag() / denom, -1.0, 1.0) : 1.0;
  const Eigen::VectorXd b = nb * (c * a + std::sqrt(1 - c * c) * e);
  P.z.resize(n);
  for (int i = 0; i < n; ++i) P.z[i] = Complex(na * a[i], b[i]);
  return P;
}

}  // namespace gmlab::brieskorn
