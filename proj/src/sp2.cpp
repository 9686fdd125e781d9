#include "gmlab/sp2.hpp"

#include "gmlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gmlab::sp2 {

using algebra::kI;
using algebra::kJ;
using algebra::kK;

namespace {

constexpr double kUnitTol = 1e-12;

double real_part_abs(const Quaternion& q) { return std::abs(q.w); }

SpElement canonical(const SpElement& x) {
  const Quaternion& d = x(0, 1).norm2() >= x(1, 1).norm2() ? x(0, 1) : x(1, 1);
  return star_act(d.conj() / d.norm(), x);
}

}  // namespace

QMatrix QMatrix::identity() { return diag(1.0, 1.0); }

QMatrix QMatrix::diag(const Quaternion& a, const Quaternion& b) { return make(a, 0.0, 0.0, b); }

QMatrix QMatrix::real(const Eigen::Matrix2d& m) { return make(m(0, 0), m(0, 1), m(1, 0), m(1, 1)); }

QMatrix QMatrix::make(const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d) {
  QMatrix r;
  r.e = {a, b, c, d};
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  QMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  QMatrix r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  QMatrix r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

QMatrix operator-(const QMatrix& a) { return -1.0 * a; }

QMatrix operator*(double s, const QMatrix& a) {
  QMatrix r;
  for (int k = 0; k < 4; ++k) r.e[k] = s * a.e[k];
  return r;
}

QMatrix operator*(const Quaternion& q, const QMatrix& a) {
  QMatrix r;
  for (int k = 0; k < 4; ++k) r.e[k] = q * a.e[k];
  return r;
}

QMatrix adjoint(const QMatrix& a) { return QMatrix::make(a(0, 0).conj(), a(1, 0).conj(), a(0, 1).conj(), a(1, 1).conj()); }

double max_abs(const QMatrix& a) {
  double m = 0;
  for (const auto& q : a.e) m = std::max({m, std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
  return m;
}

QMatrix bracket(const QMatrix& u, const QMatrix& v) { return u * v - v * u; }

double unitarity_residual(const SpElement& a) { return max_abs(adjoint(a) * a - QMatrix::identity()); }

double algebra_residual(const QMatrix& body) { return max_abs(body + adjoint(body)); }

double metric_inner(const MetricParams& P, const QMatrix& u, const QMatrix& v) {
  using algebra::dot;
  return P.mu * dot(u(0, 0), v(0, 0)) + dot(u(1, 0), v(1, 0)) + P.nu * dot(u(1, 1), v(1, 1));
}

double metric_inner(const MetricParams& P, const Sp2Tangent& u, const Sp2Tangent& v) {
  require(max_abs(u.base - v.base) < 1e-12, "metric_inner: tangent vectors at different base points");
  return metric_inner(P, u.body, v.body);
}

SpElement star_act(const Quaternion& q, const SpElement& a) {
  require(std::abs(q.norm() - 1.0) < kUnitTol, "star_act: q must be a unit quaternion");
  return (q * a) * QMatrix::diag(q.conj(), 1.0);
}

SpElement bullet_act(const Eigen::Matrix2d& b, const Quaternion& q, const SpElement& a) {
  require(std::abs(q.norm() - 1.0) < kUnitTol, "bullet_act: q must be a unit quaternion");
  require((b.transpose() * b - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12,
          "bullet_act: B must be orthogonal");
  return QMatrix::real(b) * a * QMatrix::diag(1.0, q.conj());
}

Eigen::Matrix2d rotation(double theta) {
  Eigen::Matrix2d d;
  d << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return d;
}

Quaternion orbit_connector(const SpElement& x, const SpElement& y) {
  const Quaternion s = y(0, 1) * x(0, 1).conj() + y(1, 1) * x(1, 1).conj();
  const double n = s.norm();
  return n > 0 ? s / n : Quaternion(1.0);
}

double orbit_residual(const SpElement& x, const SpElement& y) {
  const Quaternion s = y(0, 1) * x(0, 1).conj() + y(1, 1) * x(1, 1).conj();
  if (s.norm() < 1e-6) return max_abs(x - y) + 1.0;
  return max_abs(star_act(s / s.norm(), x) - y);
}

bool orbit_equal(const Sigma7Point& x, const Sigma7Point& y, double tol) { return orbit_residual(x.rep, y.rep) < tol; }

SpElement horizontal_lift(const Eigen::Vector3d& p, const Quaternion& w, double t) {
  require(std::abs(p.squaredNorm() + w.norm2() - 1.0) < 1e-9, "horizontal_lift: |p|² + |w|² must be 1");
  const Quaternion P = Quaternion::pure(p);
  const Quaternion e = Quaternion::fromVector(algebra::sphere_exp(p, t));
  const double wn = w.norm();
  const Quaternion u = wn > 0 ? w / wn : Quaternion(1.0);
  const double c = std::cos(t), s = std::sin(t);
  return QMatrix::make(c + s * P, -s * (e * w.conj()), s * w, c * (u * e * u.conj()) - s * (u * P * e * u.conj()));
}

QMatrix star_vertical_body(const SpElement& a, const Quaternion& u) {
  return adjoint(a) * QMatrix::diag(u, u) * a - QMatrix::diag(u, 0.0);
}

std::array<QMatrix, 3> star_vertical_basis(const SpElement& a) {
  return {star_vertical_body(a, kI), star_vertical_body(a, kJ), star_vertical_body(a, kK)};
}

std::array<QMatrix, 4> bullet_orbit_basis(const SpElement& a) {
  Eigen::Matrix2d J;
  J << 0, -1, 1, 0;
  return {adjoint(a) * QMatrix::real(J) * a, QMatrix::diag(0.0, -kI), QMatrix::diag(0.0, -kJ), QMatrix::diag(0.0, -kK)};
}

QMatrix horizontal_part(const MetricParams& P, const SpElement& a, const QMatrix& body) {
  const auto V = star_vertical_basis(a);
  Eigen::Matrix3d G;
  Eigen::Vector3d r;
  for (int i = 0; i < 3; ++i) {
    r[i] = metric_inner(P, body, V[i]);
    for (int j = 0; j < 3; ++j) G(i, j) = metric_inner(P, V[i], V[j]);
  }
  const Eigen::Vector3d c = G.ldlt().solve(r);
  QMatrix out = body;
  for (int i = 0; i < 3; ++i) out = out - c[i] * V[i];
  return out;
}

std::array<QMatrix, 10> algebra_basis() {
  auto off = [](const Quaternion& c) { return QMatrix::make(0.0, -c.conj(), c, 0.0); };
  return {QMatrix::diag(kI, 0.0), QMatrix::diag(kJ, 0.0), QMatrix::diag(kK, 0.0),
          QMatrix::diag(0.0, kI), QMatrix::diag(0.0, kJ), QMatrix::diag(0.0, kK),
          off(1.0),               off(kI),                off(kJ),
          off(kK)};
}

QMatrix body_velocity(const Curve& curve, double t, double h) {
  const SpElement a = curve(t);
  const QMatrix d1 = (0.5 / h) * (curve(t + h) - curve(t - h));
  const QMatrix d2 = (0.25 / h) * (curve(t + 2 * h) - curve(t - 2 * h));
  return adjoint(a) * ((4.0 / 3.0) * d1 - (1.0 / 3.0) * d2);
}

double horizontality_residual(const Curve& curve, double t, const MetricParams& P, double h) {
  const SpElement a = curve(t);
  const QMatrix u = adjoint(a) * ((0.5 / h) * (curve(t + h) - curve(t - h)));
  double worst = 0;
  for (const auto& v : star_vertical_basis(a)) worst = std::max(worst, std::abs(metric_inner(P, u, v)));
  return worst;
}

double lift_is_horizontal(const Eigen::Vector3d& p, const Quaternion& w, double t, const MetricParams& P) {
  return horizontality_residual([&](double s) { return horizontal_lift(p, w, s); }, t, P);
}

SpElement normal_geodesic_alpha(double s) {
  const double c = std::cos(s), n = std::sin(s);
  return QMatrix::make(c * kJ, n * kK, n * kK, c * kJ);
}

Curve alpha_curve() { return [](double s) { return normal_geodesic_alpha(s); }; }

double euler_arnold_residual(const Curve& curve, const MetricParams& P, double t) {
  constexpr double h = 1e-3;
  const QMatrix u = body_velocity(curve, t);
  const QMatrix um1 = body_velocity(curve, t - h), up1 = body_velocity(curve, t + h);
  const QMatrix um2 = body_velocity(curve, t - 2 * h), up2 = body_velocity(curve, t + 2 * h);
  double worst = 0;
  for (const auto& w : algebra_basis()) {
    const double d1 = (metric_inner(P, up1, w) - metric_inner(P, um1, w)) / (2 * h);
    const double d2 = (metric_inner(P, up2, w) - metric_inner(P, um2, w)) / (4 * h);
    const double lhs = (4 * d1 - d2) / 3;
    worst = std::max(worst, std::abs(lhs - metric_inner(P, u, bracket(u, w))));
  }
  return worst;
}

std::array<QMatrix, 3> vertical_closed_forms(double s) {
  const double c2 = std::cos(2 * s), s2 = std::sin(2 * s);
  return {QMatrix::diag(-2.0 * kI, -kI), QMatrix::make((c2 - 1) * kJ, s2 * kK, s2 * kK, c2 * kJ),
          QMatrix::make(-(c2 + 1) * kK, s2 * kJ, s2 * kJ, -c2 * kK)};
}

KillingFields killing_fields_along_alpha(double s, const MetricParams& P, KillingForm form) {
  const SpElement a = normal_geodesic_alpha(s);
  KillingFields out;
  out.orbit = bullet_orbit_basis(a);
  out.vertical = star_vertical_basis(a);
  for (int i = 0; i < 4; ++i) out.projected[i] = horizontal_part(P, a, out.orbit[i]);

  const double mu = P.mu, nu = P.nu, k = 4 * mu + nu;
  const double c2 = std::cos(2 * s), s2 = std::sin(2 * s);
  const double sn2 = std::sin(s) * std::sin(s), cs2 = std::cos(s) * std::cos(s);
  const double a_s = 4 * (1 - (1 - mu) * sn2) * sn2;
  const double d_s = 4 * (1 - (1 - mu) * cs2) * cs2;
  const double scale = form == KillingForm::corrected ? nu : 1.0;
  const QMatrix B = QMatrix::diag(nu * kI, -2 * mu * kI);
  const QMatrix J = QMatrix::make(0.0, -1.0, 1.0, 0.0);
  out.closed[0] = (3 * s2 / k) * B + c2 * J;
  out.closed[1] = (2 / k) * B;
  out.closed[2] = QMatrix::diag(0.0, -kJ) +
                  (scale * c2 / (nu * c2 * c2 + a_s)) * QMatrix::make((c2 - 1) * kJ, s2 * kK, s2 * kK, c2 * kJ);
  out.closed[3] = QMatrix::diag(0.0, -kK) +
                  (scale * c2 / (nu * c2 * c2 + d_s)) * QMatrix::make((1 + c2) * kK, -s2 * kJ, -s2 * kJ, c2 * kK);
  return out;
}

Eigen::Matrix4d metric_matrix(double s, const MetricParams& P) {
  const double mu = P.mu, nu = P.nu, k = 4 * mu + nu;
  const double s2 = std::sin(2 * s), c2 = std::cos(2 * s);
  const double sn2 = std::sin(s) * std::sin(s), cs2 = std::cos(s) * std::cos(s);
  const double a_s = 4 * (1 - (1 - mu) * sn2) * sn2;
  const double d_s = 4 * (1 - (1 - mu) * cs2) * cs2;
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 1 - (1 - 9 * mu * nu / k) * s2 * s2;
  m(0, 1) = m(1, 0) = 6 * mu * nu / k * s2;
  m(1, 1) = 4 * mu * nu / k;
  m(2, 2) = nu * a_s / (nu * c2 * c2 + a_s);
  m(3, 3) = nu * d_s / (nu * c2 * c2 + d_s);
  return m;
}

Eigen::Matrix4d metric_matrix_direct(double s, const MetricParams& P) {
  const auto kf = killing_fields_along_alpha(s, P);
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = metric_inner(P, kf.projected[i], kf.projected[j]);
  return m;
}

bool in_sigma1(const Sigma7Point& x, double tol) {
  const SpElement c = canonical(x.rep);
  for (const auto& q : c.e)
    if (q.imag().cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

bool in_unitary_image(const Sigma7Point& x, double tol) {
  const SpElement c = canonical(x.rep);
  for (const auto& q : c.e)
    if (std::max(std::abs(q.y), std::abs(q.z)) > tol) return false;
  return true;
}

bool in_sigma5(const Sigma7Point& x, double tol) {
  return real_part_abs(x.rep(0, 0)) < tol && real_part_abs(x.rep(1, 0)) < tol;
}

bool in_sigma6_pm1(const Sigma7Point& x, double tol) { return real_part_abs(x.rep(0, 0)) < tol; }

WiedersehenResult wiedersehen_check(const Eigen::Vector3d& p, const Quaternion& w, const MetricParams& P) {
  require(std::abs(P.mu - 1.0) < 1e-12, "wiedersehen_check: requires mu = 1");
  WiedersehenResult r;
  const SpElement at_pi = horizontal_lift(p, w, std::numbers::pi);
  r.residual_pi = orbit_residual(at_pi, -QMatrix::identity());
  r.residual_2pi = orbit_residual(horizontal_lift(p, w, 2 * std::numbers::pi), QMatrix::identity());
  const double wn = w.norm();
  const Quaternion u = wn > 0 ? w / wn : Quaternion(1.0);
  const Quaternion e = Quaternion::fromVector(algebra::sphere_exp(p, std::numbers::pi));
  r.witness_residual = orbit_residual(at_pi, -QMatrix::diag(1.0, u * e * u.conj()));
  r.ok = std::max({r.residual_pi, r.residual_2pi, r.witness_residual}) < 1e-10;
  return r;
}

SpElement flat_torus(double a, double b) {
  const double h = 1.0 / std::sqrt(2.0);
  const QMatrix base = QMatrix::make(h, h * kI, h * kI, h);
  return base * QMatrix::diag(Quaternion(std::cos(a), std::sin(a), 0, 0), Quaternion(std::cos(b), 0, std::sin(b), 0));
}

TorusResiduals flat_torus_checks(double a, double b, const MetricParams& P) {
  TorusResiduals r;
  const SpElement x = flat_torus(a, b);
  r.unitarity = unitarity_residual(x);
  Curve ca = [b](double t) { return flat_torus(t, b); };
  Curve cb = [a](double t) { return flat_torus(a, t); };
  r.star_horizontal = std::max(horizontality_residual(ca, a, P), horizontality_residual(cb, b, P));
  r.euler_arnold = std::max(euler_arnold_residual(ca, P, a), euler_arnold_residual(cb, P, b));
  const auto orbit = bullet_orbit_basis(x);
  auto bullet_res = [&](const Curve& c, double t) {
    const QMatrix u = body_velocity(c, t);
    double worst = 0;
    // the S³ factor of the isometry group, without the O(2) generator
    for (int i = 1; i < 4; ++i) worst = std::max(worst, std::abs(metric_inner(P, u, orbit[i])));
    return worst;
  };
  r.bullet_horizontal_first = bullet_res(ca, a);
  r.bullet_horizontal_second = bullet_res(cb, b);
  return r;
}

// q = z₁ + z₂j with z₁ = w + xi, z₂ = y + zi maps to [[z₁, z₂], [−z̄₂, z̄₁]].
Eigen::Matrix4cd to_complex(const QMatrix& a) {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const Quaternion& q = a(r, c);
      const std::complex<double> z1(q.w, q.x), z2(q.y, q.z);
      m(2 * r, 2 * c) = z1;
      m(2 * r, 2 * c + 1) = z2;
      m(2 * r + 1, 2 * c) = -std::conj(z2);
      m(2 * r + 1, 2 * c + 1) = std::conj(z1);
    }
  return m;
}

QMatrix from_complex(const Eigen::Matrix4cd& m) {
  QMatrix a;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const auto z1 = m(2 * r, 2 * c), z2 = m(2 * r, 2 * c + 1);
      a(r, c) = Quaternion(z1.real(), z1.imag(), z2.real(), z2.imag());
    }
  return a;
}

SpElement exp_body(const QMatrix& body) { return from_complex(numerics::expm(Eigen::MatrixXcd(to_complex(body)))); }

SpElement random_element(numerics::Rng& rng) {
  const auto basis = algebra_basis();
  QMatrix body = 0.0 * QMatrix::identity();
  for (const auto& w : basis) body = body + (1.5 * numerics::normal(rng)) * w;
  return exp_body(body);
}

std::vector<SpElement> fixed_point_search(const Eigen::Matrix2d& b, const Quaternion& q, numerics::Rng& rng,
                                          int starts, double tol) {
  const auto basis = algebra_basis();
  std::vector<SpElement> found;
  for (int s = 0; s < starts; ++s) {
    const SpElement a0 = random_element(rng);
    auto point = [&](const Eigen::VectorXd& c) {
      QMatrix body = 0.0 * QMatrix::identity();
      for (int i = 0; i < 10; ++i) body = body + c[i] * basis[i];
      return a0 * exp_body(body);
    };
    auto residual = [&](const Eigen::VectorXd& c) {
      const SpElement a = point(c);
      const SpElement moved = bullet_act(b, q, a);
      const SpElement d = star_act(orbit_connector(a, moved), a) - moved;
      Eigen::VectorXd r(16);
      for (int k = 0; k < 4; ++k) r.segment<4>(4 * k) = d.e[k].vector();
      return r;
    };
    const auto res = numerics::least_squares(residual, Eigen::VectorXd::Zero(10), 16);
    const SpElement a = point(res.x);
    if (orbit_residual(a, bullet_act(b, q, a)) < tol) found.push_back(a);
  }
  return found;
}

}  // namespace gmlab::sp2
