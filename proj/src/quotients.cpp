/**
 * @file    quotients.cpp
 * @brief   Freeness oracle, branched covering fibers and the join map
 */
#include "gmlab/quotients.hpp"

#include "gmlab/actions.hpp"
#include "gmlab/diffeo.hpp"
#include "gmlab/errors.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <numbers>
#include <tuple>

namespace gmlab::quotients {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kUnitTol = 1e-9;

int mod(int a, int m) { return ((a % m) + m) % m; }

Eigen::Matrix3d axis_rotation(double angle) {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  r(1, 1) = r(2, 2) = std::cos(angle);
  r(2, 1) = std::sin(angle);
  r(1, 2) = -std::sin(angle);
  return r;
}

// (z₀, z) ↦ (e^{2iθ}z₀, e^{3iθ}Rz) on ambient coordinates, without the on-manifold check of act().
Eigen::VectorXd linear_act(double theta, const Eigen::Matrix3d& R, const Eigen::VectorXd& x) {
  BrieskornPoint P = brieskorn::from_ambient(x);
  P.z0 *= std::exp(2.0 * theta * kI);
  P.z = std::exp(3.0 * theta * kI) * (R.cast<Complex>() * P.z);
  return brieskorn::ambient(P);
}

// Reduced fraction key of an angle a/m.
std::pair<int, int> reduced(int a, int m) {
  const int g = std::gcd(a, m);
  return {a / g, m / g};
}

bool brieskorn_element_has_fixed_point(int a, int b, int m, std::uint64_t seed, const FixedPointOracle& config,
                                       double& best) {
  using Key = std::tuple<std::pair<int, int>, std::pair<int, int>, std::uint64_t, int, double>;
  static std::mutex lock;
  static std::map<Key, std::pair<bool, double>> cache;
  const Key key{reduced(a, m), reduced(b, m), seed, config.samples, config.threshold};
  {
    std::lock_guard<std::mutex> g(lock);
    if (auto it = cache.find(key); it != cache.end()) {
      best = it->second.second;
      return it->second.first;
    }
  }
  const double theta = 2 * kPi * a / m;
  const Eigen::Matrix3d R = axis_rotation(2 * kPi * b / m);
  const auto [ka, kb] = std::get<0>(key);
  const auto [kc, kd] = std::get<1>(key);
  auto rng = numerics::make_rng(seed, "quotients.fixed_point:" + std::to_string(ka) + "/" + std::to_string(kb) + ":" +
                                          std::to_string(kc) + "/" + std::to_string(kd));
  auto residual = [&](const Eigen::VectorXd& x) {
    const BrieskornPoint P = brieskorn::from_ambient(x);
    Complex cubic = 8.0 / 9.0 * P.z0 * P.z0 * P.z0;
    double sphere = 4.0 / 3.0 * std::norm(P.z0) - 4.0 / 9.0;
    for (int i = 0; i < 3; ++i) {
      cubic += P.z[i] * P.z[i];
      sphere += std::norm(P.z[i]);
    }
    Eigen::VectorXd r(11);
    r << cubic.real(), cubic.imag(), sphere, linear_act(theta, R, x) - x;
    return r;
  };
  bool found = false;
  best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < config.samples && !found; ++s) {
    const Eigen::VectorXd x0 = brieskorn::ambient(brieskorn::sample_point(3, rng));
    const auto res = numerics::least_squares(residual, x0, 11, 400);
    best = std::min(best, res.value);
    found = res.value < config.threshold;
  }
  std::lock_guard<std::mutex> g(lock);
  cache[key] = {found, best};
  return found;
}

}  // namespace

bool is_free(const LensActionParams& params) {
  if (params.m <= 0) throw ContractViolation("is_free: m must be positive");
  const int p = params.p, q = params.q, m = params.m;
  if (p == 0 || 3 * p - q == 0 || 3 * p + q == 0) return false;
  return std::gcd(m, p) == 1 && std::gcd(m, 3 * p - q) == 1 && std::gcd(m, 3 * p + q) == 1;
}

brieskorn::IsometryElement generator_power(const LensActionParams& params, int k) {
  require(params.m > 0, "generator_power: m must be positive");
  brieskorn::IsometryElement g;
  g.o2 = sp2::rotation(2 * kPi * mod(params.p * k, params.m) / params.m);
  g.rot = axis_rotation(2 * kPi * mod(params.q * k, params.m) / params.m);
  return g;
}

OracleResult fixed_point_oracle(const LensActionParams& params, std::uint64_t seed, const FixedPointOracle& config) {
  if (params.m <= 0) throw ContractViolation("fixed_point_oracle: m must be positive");
  OracleResult out;
  out.best_residual = std::numeric_limits<double>::infinity();
  const int m = params.m;
  for (int k = 1; k < m; ++k) {
    const int a = mod(params.p * k, m), b = mod(params.q * k, m);
    // the circle factor of the join has weight p
    if (a == 0) {
      out = {false, k, 0.0};
      return out;
    }
    double best = 0;
    const bool fixed = brieskorn_element_has_fixed_point(a, b, m, seed, config, best);
    out.best_residual = std::min(out.best_residual, best);
    if (fixed) {
      out.free = false;
      out.witness_power = k;
      return out;
    }
  }
  if (m == 1) out.best_residual = 0;
  return out;
}

CVec3 phi(const BrieskornPoint& P, PhiVariant variant) {
  require(P.dim() == 3, "phi: defined for W⁵₃ only");
  const Complex lead = variant == PhiVariant::standard ? P.z[0] : P.z0;
  CVec3 v(std::sqrt(2.0) * lead, P.z[1] + kI * P.z[2], P.z[2] + kI * P.z[1]);
  const double n = v.norm();
  require(n > 0, "phi: point is not on W⁵₃");
  return v / n;
}

Eigen::Vector3i phi_weights(const LensActionParams& params, PhiVariant variant) {
  const int p = params.p, q = params.q;
  return {variant == PhiVariant::standard ? 3 * p : 2 * p, 3 * p + q, 3 * p - q};
}

BrieskornPoint deck(const BrieskornPoint& P, PhiVariant variant) {
  BrieskornPoint out = P;
  if (variant == PhiVariant::standard)
    out.z0 *= std::exp(2.0 * kPi / 3.0 * kI);
  else
    out.z[0] = -out.z[0];
  return out;
}

std::vector<BrieskornPoint> fiber(const CVec3& v, PhiVariant variant) {
  if (std::abs(v.norm() - 1.0) > kUnitTol) throw DomainError("fiber: target must be a unit vector");
  // u = L⁻¹v with L = [[√2,0,0],[0,1,i],[0,i,1]]
  CVec3 u;
  u[0] = v[0] / std::sqrt(2.0);
  u[1] = (v[1] - kI * v[2]) / 2.0;
  u[2] = (v[2] - kI * v[1]) / 2.0;
  const Complex s12 = u[1] * u[1] + u[2] * u[2];
  const double n12 = std::norm(u[1]) + std::norm(u[2]);
  std::vector<BrieskornPoint> out;
  if (variant == PhiVariant::standard) {
    // z = c·u, (8/9)z₀³ = −c²Σu², (4/3)|z₀|² + c²|u|² = 4/9
    const Complex sigma = u[0] * u[0] + s12;
    const double uu = u.squaredNorm();
    auto F = [&](double c) {
      return 4.0 / 3.0 * std::pow(9.0 / 8.0 * c * c * std::abs(sigma), 2.0 / 3.0) + c * c * uu - 4.0 / 9.0;
    };
    double lo = 0, hi = 2.0 / 3.0 / std::sqrt(uu);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (F(mid) > 0 ? hi : lo) = mid;
    }
    const double c = 0.5 * (lo + hi);
    const Complex cube = -9.0 / 8.0 * c * c * sigma;
    const int roots = std::abs(sigma) > 1e-14 ? 3 : 1;
    for (int r = 0; r < roots; ++r) {
      BrieskornPoint P;
      P.z0 = roots == 1 ? Complex(0.0) : std::polar(std::cbrt(std::abs(cube)), (std::arg(cube) + 2 * kPi * r) / 3);
      P.z = c * u;
      out.push_back(P);
    }
    return out;
  }
  // swapped: (z₀, z₂, z₃) = c·u, z₁² = −(8/9)c³u₀³ − c²(u₁² + u₂²)
  auto z1sq = [&](double c) { return -8.0 / 9.0 * c * c * c * u[0] * u[0] * u[0] - c * c * s12; };
  auto F = [&](double c) { return 4.0 / 3.0 * c * c * std::norm(u[0]) + std::abs(z1sq(c)) + c * c * n12 - 4.0 / 9.0; };
  const double cmax = 2.0 / 3.0 / std::sqrt(std::norm(u[0]) + n12);
  constexpr int grid = 2000;
  double prev = F(0);
  for (int i = 1; i <= grid; ++i) {
    double a = cmax * (i - 1) / grid, b = cmax * i / grid;
    const double fb = F(b);
    if ((prev < 0) != (fb < 0) || fb == 0) {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        ((F(mid) < 0) == (prev < 0) ? a : b) = mid;
      }
      const double c = 0.5 * (a + b);
      const Complex sq = std::sqrt(z1sq(c));
      const int roots = std::abs(z1sq(c)) > 1e-12 ? 2 : 1;
      for (int r = 0; r < roots; ++r) {
        BrieskornPoint P;
        P.z0 = c * u[0];
        P.z.resize(3);
        P.z << (r == 0 ? sq : -sq), c * u[1], c * u[2];
        out.push_back(P);
      }
    }
    prev = fb;
  }
  if (out.empty()) throw DomainError("fiber: target is not in the image of phi");
  return out;
}

int fiber_count(const CVec3& v, PhiVariant variant) { return static_cast<int>(fiber(v, variant).size()); }

CVec3 rho(int r, const CVec3& v) {
  require(r > 0, "rho: degree must be positive");
  const double a = std::abs(v[0]);
  if (a == 0) return v;
  CVec3 out = v;
  out[0] = a * std::pow(v[0] / a, r);
  return out;
}

LensMetadata lens_metadata(const LensActionParams& params) {
  LensMetadata md;
  const int p = params.p, q = params.q;
  if (!is_free(params)) {
    md.message = "action is not free";
    return md;
  }
  if (params.m % 6 == 0) {
    md.message = "lens type withheld: 6 divides m";
    return md;
  }
  md.emitted = true;
  md.l5 = {p, 3 * p - q, 3 * p + q};
  md.l7 = {p, p, 3 * p - q, 3 * p + q};
  md.message = "L5_" + std::to_string(params.m) + "(" + std::to_string(p) + "," + std::to_string(3 * p - q) + "," +
               std::to_string(3 * p + q) + ")";
  return md;
}

sp2::Sigma7Point join_to_sigma7(const JoinPoint& j, const sp2::MetricParams& P) {
  require(P.mu == 1.0, "join_to_sigma7: requires mu = 1");
  require(j.t >= 0 && j.t <= kPi / 2, "join_to_sigma7: t must lie in [0, pi/2]");
  require(std::abs(std::abs(j.circle) - 1.0) < kUnitTol, "join_to_sigma7: circle component must have modulus 1");
  const double theta = std::arg(j.circle);
  const auto inv = diffeo::psi_inverse(brieskorn::to_real(j.brieskorn), diffeo::Profile::trigonometric);
  const auto x = actions::nonlinear_rotate(inv.x, -theta);
  const sp2::SpElement lift = sp2::horizontal_lift(x.p, sp2::Quaternion::pure(x.w), j.t);
  return {sp2::QMatrix::real(sp2::rotation(theta)) * lift};
}

JoinPoint act_on_join(double theta, const sp2::Quaternion& q, const JoinPoint& j) {
  brieskorn::IsometryElement g;
  g.o2 = sp2::rotation(theta);
  g.rot = algebra::rotation_matrix(q);
  return {std::exp(theta * kI) * j.circle, brieskorn::act(g, j.brieskorn), j.t};
}

}  // namespace gmlab::quotients
