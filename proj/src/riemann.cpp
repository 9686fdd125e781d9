/**
 * @file    riemann.cpp
 * @brief   Christoffel symbols and curvature by central differences; chart metrics of the fixed-point sets
 */
#include "gmlab/riemann.hpp"

#include "gmlab/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace gmlab::riemann {

namespace {

constexpr double kPi = std::numbers::pi;

// ∂_k g_ij as dg[k](i, j)
std::vector<Eigen::MatrixXd> metric_derivatives(const ChartMetric& M, const Point& x, double h) {
  std::vector<Eigen::MatrixXd> dg(M.dim);
  for (int k = 0; k < M.dim; ++k) {
    const Point e = Point::Unit(M.dim, k);
    const Eigen::MatrixXd d1 = (M(x + h * e) - M(x - h * e)) / (2 * h);
    const Eigen::MatrixXd d2 = (M(x + 2 * h * e) - M(x - 2 * h * e)) / (4 * h);
    dg[k] = (4 * d1 - d2) / 3;
  }
  return dg;
}

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

void check_domain(const ChartMetric& M, const Point& x) {
  if (!M.contains(x)) throw DomainError("point outside the chart domain of " + M.name);
}

}  // namespace

Christoffel christoffel(const ChartMetric& M, const Point& x, const Steps& steps) {
  const int d = M.dim;
  const auto dg = metric_derivatives(M, x, steps.metric);
  const Eigen::MatrixXd gi = M(x).inverse();
  Christoffel G(d, Eigen::MatrixXd::Zero(d, d));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        double s = 0;
        for (int l = 0; l < d; ++l) s += gi(k, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
        G[k](i, j) = G[k](j, i) = 0.5 * s;
      }
  return G;
}

RiemannTensor riemann_tensor(const ChartMetric& M, const Point& x, const Steps& steps) {
  check_domain(M, x);
  const int d = M.dim;
  const double h = steps.christoffel;
  const Christoffel G = christoffel(M, x, steps);
  // dG[m][k](i, j) = ∂_m Γ^k_ij
  std::vector<Christoffel> dG(d);
  for (int m = 0; m < d; ++m) {
    const Point e = Point::Unit(d, m);
    const auto p1 = christoffel(M, x + h * e, steps), m1 = christoffel(M, x - h * e, steps);
    const auto p2 = christoffel(M, x + 2 * h * e, steps), m2 = christoffel(M, x - 2 * h * e, steps);
    dG[m].resize(d);
    for (int k = 0; k < d; ++k) {
      const Eigen::MatrixXd d1 = (p1[k] - m1[k]) / (2 * h);
      const Eigen::MatrixXd d2 = (p2[k] - m2[k]) / (4 * h);
      dG[m][k] = (4 * d1 - d2) / 3;
    }
  }
  // R^l_{ijk}: component l of R(e_j, e_k)e_i
  std::vector<double> up(d * d * d * d);
  auto U = [&](int l, int i, int j, int k) -> double& { return up[((l * d + i) * d + j) * d + k]; };
  for (int l = 0; l < d; ++l)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          double v = dG[j][l](k, i) - dG[k][l](j, i);
          for (int m = 0; m < d; ++m) v += G[l](j, m) * G[m](k, i) - G[l](k, m) * G[m](j, i);
          U(l, i, j, k) = v;
        }
  const Eigen::MatrixXd g = M(x);
  RiemannTensor R{d, std::vector<double>(d * d * d * d, 0.0)};
  for (int m = 0; m < d; ++m)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          double v = 0;
          for (int l = 0; l < d; ++l) v += g(m, l) * U(l, i, j, k);
          R(m, i, j, k) = v;
        }
  return R;
}

namespace {

double contract(const RiemannTensor& R, const Eigen::VectorXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                const Eigen::VectorXd& e) {
  // ⟨R(c, e)b, a⟩
  const int d = R.dim;
  double s = 0;
  for (int m = 0; m < d; ++m)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) s += R(m, i, j, k) * a[m] * b[i] * c[j] * e[k];
  return s;
}

}  // namespace

double sectional(const ChartMetric& M, const Point& x, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                 const Steps& steps) {
  const Eigen::MatrixXd g = M(x);
  const double area = u.dot(g * u) * v.dot(g * v) - std::pow(u.dot(g * v), 2);
  require(area > 1e-14, "sectional: degenerate plane");
  return contract(riemann_tensor(M, x, steps), u, v, u, v) / area;
}

double scalar(const ChartMetric& M, const Point& x, const Steps& steps) {
  const int d = M.dim;
  const RiemannTensor R = riemann_tensor(M, x, steps);
  const Eigen::MatrixXd gi = M(x).inverse();
  // Ric(e_k, e_i) = Σ_j R^j_{ijk}
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) ric(i, k) += gi(j, l) * R(l, i, j, k);
  return (gi.array() * ric.array()).sum();
}

Eigen::VectorXd curvature_operator_eigenvalues(const ChartMetric& M, const Point& x, const Steps& steps) {
  const int d = M.dim;
  const RiemannTensor R = riemann_tensor(M, x, steps);
  const Eigen::MatrixXd g = M(x);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  const int n = static_cast<int>(pairs.size());
  Eigen::MatrixXd Q(n, n), B(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      // ⟨R(e_i, e_j)e_l, e_k⟩ so that the form on e_i∧e_j is ⟨R(u,v)v,u⟩
      Q(a, b) = R(k, l, i, j);
      B(a, b) = g(i, k) * g(j, l) - g(i, l) * g(j, k);
    }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetrize(Q), symmetrize(B), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double bianchi_residual(const ChartMetric& M, const Point& x, const Steps& steps) {
  const int d = M.dim;
  const RiemannTensor R = riemann_tensor(M, x, steps);
  double worst = 0, scale = 1e-300;
  for (int m = 0; m < d; ++m)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          worst = std::max(worst, std::abs(R(m, i, j, k) + R(m, j, k, i) + R(m, k, i, j)));
          scale = std::max(scale, std::abs(R(m, i, j, k)));
        }
  return worst / std::max(1.0, scale);
}

CurvatureReport curvature_report(const ChartMetric& M, const Point& x, const Steps& steps) {
  CurvatureReport r;
  r.point = x;
  r.steps = steps;
  const Eigen::VectorXd ev = curvature_operator_eigenvalues(M, x, steps);
  r.k_min = ev.minCoeff();
  r.k_max = ev.maxCoeff();
  r.scalar = scalar(M, x, steps);
  return r;
}

Extremes min_max_sectional(const ChartMetric& M, const std::vector<Point>& grid, bool refine) {
  Extremes e;
  e.min = std::numeric_limits<double>::infinity();
  e.max = -std::numeric_limits<double>::infinity();
  for (const auto& x : grid) {
    if (!M.contains(x)) continue;
    const Eigen::VectorXd ev = curvature_operator_eigenvalues(M, x);
    if (ev.minCoeff() < e.min) {
      e.min = ev.minCoeff();
      e.argmin = x;
    }
    if (ev.maxCoeff() > e.max) {
      e.max = ev.maxCoeff();
      e.argmax = x;
    }
  }
  if (!refine || e.argmin.size() == 0) return e;
  const double big = 1e30;
  auto low = [&](const Eigen::VectorXd& x) {
    return M.contains(x) ? curvature_operator_eigenvalues(M, x).minCoeff() : big;
  };
  auto high = [&](const Eigen::VectorXd& x) {
    return M.contains(x) ? -curvature_operator_eigenvalues(M, x).maxCoeff() : big;
  };
  const auto rmin = numerics::nelder_mead(low, e.argmin, 0.02, 1e-7, 400);
  if (rmin.value < e.min) {
    e.min = rmin.value;
    e.argmin = rmin.x;
  }
  const auto rmax = numerics::nelder_mead(high, e.argmax, 0.02, 1e-7, 400);
  if (-rmax.value > e.max) {
    e.max = -rmax.value;
    e.argmax = rmax.x;
  }
  return e;
}

std::vector<Point> box_grid(const Point& lo, const Point& hi, const std::vector<int>& counts) {
  const int d = static_cast<int>(lo.size());
  std::vector<Point> out;
  std::vector<int> idx(d, 0);
  while (true) {
    Point x(d);
    for (int k = 0; k < d; ++k)
      x[k] = counts[k] <= 1 ? lo[k] : lo[k] + (hi[k] - lo[k]) * idx[k] / (counts[k] - 1);
    out.push_back(x);
    int k = d - 1;
    while (k >= 0 && ++idx[k] >= std::max(1, counts[k])) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

ChartMetric orbit_space_metric(const ChartMetric& M, int killing_index) {
  const int d = M.dim;
  require(killing_index >= 0 && killing_index < d, "orbit_space_metric: bad coordinate index");
  auto lift = [=](const Point& y) {
    Point x(d);
    for (int k = 0, j = 0; k < d; ++k) x[k] = k == killing_index ? 0.0 : y[j++];
    return x;
  };
  ChartMetric out;
  out.dim = d - 1;
  out.name = M.name + "/orbits";
  out.components = [=](const Point& y) {
    const Eigen::MatrixXd g = M(lift(y));
    const double gpp = g(killing_index, killing_index);
    require(gpp > 0, "orbit_space_metric: Killing direction must have positive length");
    Eigen::MatrixXd h(d - 1, d - 1);
    for (int a = 0, ia = 0; a < d; ++a) {
      if (a == killing_index) continue;
      for (int b = 0, ib = 0; b < d; ++b) {
        if (b == killing_index) continue;
        h(ia, ib) = g(a, b) - g(a, killing_index) * g(b, killing_index) / gpp;
        ++ib;
      }
      ++ia;
    }
    return h;
  };
  if (M.domain) out.domain = [=](const Point& y) { return M.domain(lift(y)); };
  return out;
}

ChartMetric euclidean(int dim) {
  return {dim, [dim](const Point&) { return Eigen::MatrixXd::Identity(dim, dim); }, {}, "euclidean"};
}

ChartMetric round_sphere2() {
  return {2,
          [](const Point& x) {
            Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
            g(1, 1) = std::pow(std::sin(x[0]), 2);
            return g;
          },
          [](const Point& x) { return x[0] > 0.01 && x[0] < kPi - 0.01; },
          "S2"};
}

ChartMetric round_sphere3() {
  return {3,
          [](const Point& x) {
            const double s = std::sin(x[0]), t = std::sin(x[1]);
            return Eigen::MatrixXd(Eigen::Vector3d(1.0, s * s, s * s * t * t).asDiagonal());
          },
          [](const Point& x) { return x[0] > 0.01 && x[0] < kPi - 0.01 && x[1] > 0.01 && x[1] < kPi - 0.01; },
          "S3"};
}

ChartMetric hyperbolic_half_plane() {
  return {2, [](const Point& x) { return Eigen::MatrixXd(Eigen::MatrixXd::Identity(2, 2) / (x[1] * x[1])); },
          [](const Point& x) { return x[1] > 0.01; }, "H2"};
}

ChartMetric product(const ChartMetric& a, const ChartMetric& b) {
  const int da = a.dim, db = b.dim;
  ChartMetric out;
  out.dim = da + db;
  out.name = a.name + "x" + b.name;
  out.components = [=](const Point& x) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(da + db, da + db);
    g.topLeftCorner(da, da) = a(x.head(da));
    g.bottomRightCorner(db, db) = b(x.tail(db));
    return g;
  };
  out.domain = [=](const Point& x) { return a.contains(x.head(da)) && b.contains(x.tail(db)); };
  return out;
}

// ---------------------------------------------------------------------------

ChartMetric sigma2_metric(const MetricParams& P) {
  return {2,
          [P](const Point& x) {
            Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
            g(1, 1) = 0.25 * sp2::metric_matrix(x[0], P)(2, 2);
            return g;
          },
          [](const Point& x) { return x[0] > 0.005; },
          "sigma2"};
}

Sigma2Values sigma2_curvature_closed(const MetricParams& P) {
  const double mu = P.mu, nu = P.nu;
  return {12 / nu - 8 - 3 * mu, 4 * nu / (1 + mu), -nu * (1 + 2 * mu) / (mu * (4 * mu + nu))};
}

double sigma2_curvature_at_zero(const MetricParams& P) {
  const ChartMetric M = sigma2_metric(P);
  const Eigen::Vector2d u(1, 0), v(0, 1);
  const double h = 0.01;
  const double k1 = sectional(M, Point(Eigen::Vector2d(h, 0)), u, v);
  const double k2 = sectional(M, Point(Eigen::Vector2d(2 * h, 0)), u, v);
  return (4 * k1 - k2) / 3;
}

ChartMetric sigma31_metric(const MetricParams& P) {
  return {3,
          [P](const Point& x) {
            const double st = std::sin(x[0]), sa = std::sin(x[1]);
            const double f = P.nu * st * st / (P.nu + 4 * P.mu * st * st);
            return Eigen::MatrixXd(P.mu * Eigen::Vector3d(1.0, f, f * sa * sa).asDiagonal());
          },
          [](const Point& x) { return x[0] > 0.005 && x[0] < kPi - 0.005 && x[1] > 0.01 && x[1] < kPi - 0.01; },
          "sigma31"};
}

std::pair<double, double> sigma31_bounds(const MetricParams& P) {
  const double mu = P.mu, nu = P.nu;
  return {nu / (mu * (4 * mu + nu)), (12 * mu + nu) / (mu * nu)};
}

ChartMetric sigma32_metric(const MetricParams& P) {
  return {3,
          [P](const Point& x) {
            const double t = x[0], th = x[1];
            const double st = std::sin(t), s2t = std::sin(2 * t), sth = std::sin(th), cth = std::cos(th);
            const double S = st * st * sth * sth, m = 1 - P.mu, nu = P.nu;
            const double D = 4 * (1 - m * S) * S + nu * (1 - 2 * S) * (1 - 2 * S);
            Eigen::Matrix3d g;
            g(0, 0) = 1 - m * (4 * S + nu * (1 - 2 * S) * (1 - 2 * S)) * cth * cth / D;
            g(1, 1) = st * st + st * st * sth * sth *
                                    (nu * sth * sth * std::pow(2 * t - s2t, 2) -
                                     m * ((nu + 4 * S) * std::cos(t) * std::cos(t) +
                                          2 * t * nu * sth * sth * (2 * t * S - s2t))) /
                                    D;
            g(2, 2) = nu * S * (1 - m * S) / D;
            g(1, 2) = g(2, 1) = nu * st * st * sth * sth * sth * (2 * t - s2t + m / 2 * (s2t - 4 * t * S)) / D;
            g(0, 2) = g(2, 0) = -nu * m * S * cth * (1 - 2 * S) / D;
            g(0, 1) = g(1, 0) =
                m / (4 * D) * std::sin(2 * th) * (4 * s2t * S - nu * (1 - 2 * S) * (4 * t * S - s2t));
            return Eigen::MatrixXd(g);
          },
          [](const Point& x) { return std::abs(std::sin(x[0]) * std::sin(x[1])) > 1e-2; },
          "sigma32"};
}

ChartMetric sigma32_metric_mu1(double nu) {
  return {3,
          [nu](const Point& x) {
            const double t = x[0], th = x[1];
            const double st = std::sin(t), S = st * st * std::sin(th) * std::sin(th);
            const Eigen::Vector3d v(0, (2 * t - std::sin(2 * t)) * std::sin(th), 1);
            Eigen::Matrix3d g = Eigen::Vector3d(1, st * st, 0).asDiagonal();
            g += nu * S / (4 * S + nu * (1 - 2 * S) * (1 - 2 * S)) * v * v.transpose();
            return Eigen::MatrixXd(g);
          },
          [](const Point& x) { return std::abs(std::sin(x[0]) * std::sin(x[1])) > 1e-2; },
          "sigma32_mu1"};
}

ChartMetric sigma32_pullback_metric(const MetricParams& P) {
  auto X = [](const Point& x) {
    const double t = x[0], th = x[1], ph = x[2];
    const Eigen::Vector3d p(0, std::cos(th), 0);
    const sp2::Quaternion w(0, std::sin(th) * std::cos(ph), 0, std::sin(th) * std::sin(ph));
    return sp2::horizontal_lift(p, w, t);
  };
  return {3,
          [P, X](const Point& x) {
            const double h = 1e-6;
            const sp2::SpElement A = X(x);
            std::array<sp2::QMatrix, 3> U;
            for (int k = 0; k < 3; ++k) {
              const Point e = Point::Unit(3, k);
              const sp2::QMatrix dA = (0.5 / h) * (X(x + h * e) - X(x - h * e));
              U[k] = sp2::horizontal_part(P, A, sp2::adjoint(A) * dA);
            }
            Eigen::MatrixXd g(3, 3);
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) g(i, j) = sp2::metric_inner(P, U[i], U[j]);
            return g;
          },
          {},
          "sigma32_pullback"};
}

Eigen::Vector3d sigma32_deck(const Eigen::Vector3d& x) {
  return {kPi - x[0], x[1] + kPi, x[2] - 2 * kPi * std::cos(x[1])};
}

Point sigma32_polar_point(double omega, double psi) {
  const Eigen::Vector3d a(std::sin(omega) * std::cos(psi), std::sin(omega) * std::sin(psi), std::cos(omega));
  return Eigen::Vector3d(std::acos(a[0]), std::atan2(a[2], a[1]), 0.0);
}

double sigma32_scalar_literal(double omega, double nu) {
  const double c2 = std::cos(2 * omega), c4 = std::cos(4 * omega), c6 = std::cos(6 * omega);
  const double num = -12 + 4 * nu + 9 * nu * nu + 2 * (21 * nu - 8) * c2 + (9 * nu * nu + 16 * nu - 4) * c4 + 2 * nu * c6;
  const double den = 4 + nu + 4 * c2 + nu * c4;
  return 4 * num / (den * den);
}

double sigma32_min_k_formula(const MetricParams& P) {
  const double k = 4 * P.mu + P.nu;
  return std::min(P.mu * P.nu / k, sigma32_frontier(P) / k);
}

double sigma32_frontier(const MetricParams& P) { return 12 - 8 * (P.mu + P.nu) - 3 * P.mu * P.nu; }

ChartMetric hemisphere_metric(const MetricParams& P) {
  ChartMetric h = orbit_space_metric(sigma32_metric(P), 2);
  h.name = "hemisphere";
  return h;
}

double hemisphere_curvature_closed(double omega, double mu) {
  const double c = std::cos(omega) * std::cos(omega);
  return mu * (1 + 2 * (1 - mu) * c) / std::pow(1 - (1 - mu) * c, 2);
}

ChartMetric berger_metric(double scale, double eps2) {
  return {3,
          [scale, eps2](const Point& x) {
            const double q0 = std::sqrt(1 - x.squaredNorm());
            const sp2::Quaternion q(q0, x[0], x[1], x[2]);
            Eigen::Matrix3d J;
            for (int k = 0; k < 3; ++k) {
              Eigen::Vector4d dq = Eigen::Vector4d::Zero();
              dq[k + 1] = 1;
              dq[0] = -x[k] / q0;
              J.col(k) = (q.conj() * sp2::Quaternion::fromVector(dq)).imag();
            }
            const Eigen::Matrix3d W = Eigen::Vector3d(1, 1, eps2).asDiagonal();
            return Eigen::MatrixXd(scale * J.transpose() * W * J);
          },
          [](const Point& x) { return x.squaredNorm() < 0.8; },
          "berger"};
}

std::pair<double, double> berger_extremes(double scale, double eps2) {
  const double a = eps2 / scale, b = (4 - 3 * eps2) / scale;
  return {std::min(a, b), std::max(a, b)};
}

double l3_hopf_parameter(const MetricParams& P) { return 9 * P.mu * P.nu / (4 * P.mu + P.nu); }

ChartMetric l3_metric(const MetricParams& P) {
  ChartMetric m = berger_metric(1.0, l3_hopf_parameter(P));
  m.name = "l3";
  return m;
}

ChartMetric sigma30_metric(const MetricParams& P) {
  ChartMetric m = berger_metric(1.0, P.mu);
  m.name = "sigma30";
  return m;
}

ChartMetric p3_metric(const MetricParams& P) {
  ChartMetric m = berger_metric(P.nu, 4 * P.mu / (4 * P.mu + P.nu));
  m.name = "p3";
  return m;
}

// ---------------------------------------------------------------------------

namespace {

using sp2::QMatrix;
using sp2::Quaternion;

Quaternion axis_exp(int axis, double a) {
  Eigen::Vector4d v = Eigen::Vector4d::Zero();
  v[0] = std::cos(a);
  v[axis + 1] = std::sin(a);
  return Quaternion::fromVector(v);
}

Quaternion axis_unit(int axis) {
  Eigen::Vector4d v = Eigen::Vector4d::Zero();
  v[axis + 1] = 1;
  return Quaternion::fromVector(v);
}

}  // namespace

ChartMetric sigma5_orbit_chart(const MetricParams& P) {
  return {5,
          [P](const Point& x) {
            const double s = x[0], th = x[1];
            const std::array<Quaternion, 3> e{axis_exp(0, x[2]), axis_exp(1, x[3]), axis_exp(2, x[4])};
            const Quaternion q = e[0] * e[1] * e[2];
            // ∂q/∂a_m with e^{a i}' = i e^{a i}
            std::array<Quaternion, 3> dq{axis_unit(0) * q, e[0] * axis_unit(1) * e[1] * e[2],
                                         e[0] * e[1] * axis_unit(2) * e[2]};
            const QMatrix Qm = QMatrix::diag(1.0, q.conj());
            const QMatrix A = QMatrix::real(sp2::rotation(th)) * sp2::normal_geodesic_alpha(s) * Qm;
            const QMatrix V = QMatrix::make(0.0, -algebra::kI, -algebra::kI, 0.0);
            const QMatrix al = sp2::normal_geodesic_alpha(s);
            Eigen::Matrix2d J;
            J << 0, -1, 1, 0;
            std::array<QMatrix, 5> body;
            body[0] = sp2::adjoint(Qm) * V * Qm;
            body[1] = sp2::adjoint(Qm) * sp2::adjoint(al) * QMatrix::real(J) * al * Qm;
            for (int m = 0; m < 3; ++m) body[2 + m] = QMatrix::diag(0.0, q * dq[m].conj());
            Eigen::MatrixXd g(5, 5);
            std::array<QMatrix, 5> h;
            for (int i = 0; i < 5; ++i) h[i] = sp2::horizontal_part(P, A, body[i]);
            for (int i = 0; i < 5; ++i)
              for (int j = 0; j < 5; ++j) g(i, j) = sp2::metric_inner(P, h[i], h[j]);
            return g;
          },
          {},
          "sigma5_orbit"};
}

double sigma5_curvature_component(const MetricParams& P, double s) {
  const ChartMetric M = sigma5_orbit_chart(P);
  Point x = Point::Zero(5);
  x[0] = s;
  const RiemannTensor R = riemann_tensor(M, x);
  // ⟨R(∂s, ∂a₁)∂a₂, ∂a₃⟩
  return R(4, 3, 0, 2);
}

double sigma5_component_closed_at_zero(const MetricParams& P) {
  return 8 * P.mu * P.nu / ((1 + P.mu) * (4 * P.mu + P.nu));
}

std::vector<std::string> scan_metric_ids() { return {"sigma2", "sigma31", "sigma32", "l3", "sigma30", "p3", "hemisphere"}; }

ChartMetric metric_by_id(const std::string& id, const MetricParams& P) {
  if (id == "sigma2") return sigma2_metric(P);
  if (id == "sigma31") return sigma31_metric(P);
  if (id == "sigma32") return sigma32_metric(P);
  if (id == "l3") return l3_metric(P);
  if (id == "sigma30") return sigma30_metric(P);
  if (id == "p3") return p3_metric(P);
  if (id == "hemisphere") return hemisphere_metric(P);
  throw ContractViolation("unknown metric id: " + id);
}

std::pair<Point, Point> scan_box(const std::string& id) {
  const double e = 0.02;
  if (id == "sigma2") return {Eigen::Vector2d(0.01, 0), Eigen::Vector2d(kPi / 2, 0)};
  if (id == "sigma31") return {Eigen::Vector3d(e, kPi / 2, 0), Eigen::Vector3d(kPi / 2, kPi / 2, 0)};
  // the polar chart degenerates where sin t · sin θ → 0
  const double c = 0.11;
  if (id == "sigma32") return {Eigen::Vector3d(c, c, 0), Eigen::Vector3d(kPi - c, kPi - c, 0)};
  if (id == "hemisphere") return {Eigen::Vector2d(c, c), Eigen::Vector2d(kPi - c, kPi - c)};
  if (id == "l3" || id == "sigma30" || id == "p3") return {Eigen::Vector3d(-0.5, -0.5, -0.5), Eigen::Vector3d(0.5, 0.5, 0.5)};
  throw ContractViolation("unknown metric id: " + id);
}

}  // namespace gmlab::riemann
