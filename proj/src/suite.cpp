/**
 * @file    suite.cpp
 * @brief   Registered checks, grouped by module
 */
#include "gmlab/suite.hpp"

#include "gmlab/actions.hpp"
#include "gmlab/algebra.hpp"
#include "gmlab/brieskorn.hpp"
#include "gmlab/diffeo.hpp"
#include "gmlab/errors.hpp"
#include "gmlab/quotients.hpp"
#include "gmlab/riemann.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace gmlab::suite {

CheckContext::CheckContext(const SuiteConfig& config, std::string id, double tolerance)
    : config_(config), id_(std::move(id)), tol_(tolerance) {
  if (auto it = config.tolerances.find(id_); it != config.tolerances.end()) tol_ = it->second;
}

numerics::Rng CheckContext::rng(const std::string& label) const {
  return numerics::make_rng(config_.seed, label.empty() ? id_ : id_ + "/" + label);
}

int CheckContext::count(int fallback) const { return config_.samples > 0 ? config_.samples : fallback; }

std::vector<MetricParams> CheckContext::grid(const std::vector<MetricParams>& fallback) const {
  return config_.grid.empty() ? fallback : config_.grid;
}

std::vector<MetricParams> default_grid() {
  const double values[] = {0.3, 0.5, 0.8, 1.0, 1.5};
  std::vector<MetricParams> g;
  for (double mu : values)
    for (double nu : values) g.push_back({mu, nu});
  return g;
}

namespace {

constexpr double kPi = std::numbers::pi;
using algebra::Quaternion;
using brieskorn::BrieskornPoint;
using diffeo::Profile;
using diffeo::SpherePair;
using riemann::Point;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string mu_nu(const MetricParams& P) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "(%g,%g)", P.mu, P.nu);
  return buf;
}

double rel(double value, double expected) { return std::abs(value - expected) / std::max(std::abs(expected), 1e-12); }

/// Worst-case accumulator for residuals that must stay below the tolerance.
struct Worst {
  double value{0};
  int n{0};
  void add(double r) {
    value = std::max(value, std::isnan(r) ? std::numeric_limits<double>::infinity() : r);
    ++n;
  }
  Outcome below(double tol, std::string detail = {}) const { return {value < tol, value, n, std::move(detail)}; }
};

double qdist(const algebra::Element& a, const algebra::Element& b) { return (a - b).cwiseAbs().maxCoeff(); }

SpherePair generic_pair(numerics::Rng& rng, double theta) {
  while (true) {
    const SpherePair x = diffeo::random_pair(3, rng);
    const SpherePair xt = actions::rotated(x, theta);
    const double r = x.p.norm(), rt = xt.p.norm();
    if (x.w.norm() > 1e-3 && xt.w.norm() > 1e-3 && r > 1e-3 && rt > 1e-3 && 1 - r * r > 1e-3 && 1 - rt * rt > 1e-3)
      return x;
  }
}

double pair_dist(const SpherePair& a, const SpherePair& b) { return diffeo::distance(a, b); }

std::vector<Check> build() {
  std::vector<Check> c;

  // ---------------------------------------------------------------- algebra
  c.push_back({"algebra.quaternion_laws", "quaternion algebra", 0, 1e-13, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(1000); ++i) {
                   const Quaternion a = Quaternion::fromVector(numerics::gaussian(rng, 4));
                   const Quaternion b = Quaternion::fromVector(numerics::gaussian(rng, 4));
                   const Quaternion d = Quaternion::fromVector(numerics::gaussian(rng, 4));
                   const double s = a.norm() * b.norm() * d.norm();
                   w.add(algebra::distance((a * b) * d, a * (b * d)) / s);
                   w.add(std::abs((a * b).norm() - a.norm() * b.norm()) / (a.norm() * b.norm()));
                   w.add(algebra::distance((a * b).conj(), b.conj() * a.conj()) / (a.norm() * b.norm()));
                 }
                 return w.below(ctx.tol());
               }});

  c.push_back({"algebra.octonion_laws", "octonion algebra", 0, 1e-13, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 double assoc = 0;
                 for (int i = 0; i < ctx.count(1000); ++i) {
                   const algebra::Element a = numerics::gaussian(rng, 8), b = numerics::gaussian(rng, 8),
                                          d = numerics::gaussian(rng, 8);
                   const double na = a.norm(), nb = b.norm();
                   w.add(std::abs(algebra::mul(a, b).norm() - na * nb) / (na * nb));
                   w.add(qdist(algebra::mul(a, algebra::mul(a, b)), algebra::mul(algebra::mul(a, a), b)) / (na * na * nb));
                   w.add(qdist(algebra::mul(algebra::mul(b, a), a), algebra::mul(b, algebra::mul(a, a))) / (na * na * nb));
                   // Cayley-Dickson pairs against the flat product
                   const auto A = algebra::Octonion::fromVector(a), B = algebra::Octonion::fromVector(b);
                   w.add((Eigen::VectorXd((A * B).vector()) - Eigen::VectorXd(algebra::mul(a, b))).cwiseAbs().maxCoeff() /
                         (na * nb));
                   assoc = std::max(assoc, qdist(algebra::mul(algebra::mul(a, b), d), algebra::mul(a, algebra::mul(b, d))) /
                                               (na * nb * d.norm()));
                 }
                 Outcome o = w.below(ctx.tol(), "associator witness " + num(assoc));
                 o.pass = o.pass && assoc > 1e-2;
                 return o;
               }});

  c.push_back({"algebra.cross_identities", "cross products", 0, 1e-13, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int n : {3, 7})
                   for (int i = 0; i < ctx.count(100); ++i) {
                     const algebra::ImVec a = numerics::gaussian(rng, n), b = numerics::gaussian(rng, n);
                     const double s = a.squaredNorm() * b.squaredNorm();
                     w.add(std::abs(algebra::cross(a, b).squaredNorm() + std::pow(a.dot(b), 2) - s) / s);
                     w.add(algebra::cross(a, a).norm() / a.squaredNorm());
                     w.add((algebra::cross(algebra::cross(a, b), a) - (a.squaredNorm() * b - a.dot(b) * a)).norm() /
                           (a.squaredNorm() * b.norm()));
                     w.add((algebra::cross(algebra::cross(a, b), b) - (a.dot(b) * b - b.squaredNorm() * a)).norm() /
                           (b.squaredNorm() * a.norm()));
                   }
                 w.add((algebra::cross(Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0)) - Eigen::Vector3d(0, 0, 1)).norm());
                 return w.below(ctx.tol());
               }});

  c.push_back({"algebra.sphere_exp", "one-parameter subgroups", 0, 1e-13, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int n : {3, 7})
                   for (int i = 0; i < ctx.count(100); ++i) {
                     const algebra::ImVec p = numerics::gaussian(rng, n);
                     const double s = numerics::uniform(rng, -3, 3), t = numerics::uniform(rng, -3, 3);
                     w.add(std::abs(algebra::sphere_exp(p, t).norm() - 1));
                     w.add(qdist(algebra::mul(algebra::sphere_exp(p, s), algebra::sphere_exp(p, t)),
                                 algebra::sphere_exp(p, s + t)));
                   }
                 w.add(qdist(algebra::sphere_exp(Eigen::Vector3d::Zero(), 0.7), algebra::one(4)));
                 w.add(qdist(algebra::sphere_exp(Eigen::Vector3d(0, 1, 0), kPi / 2), algebra::embed(Eigen::Vector3d(0, 1, 0))));
                 return w.below(ctx.tol());
               }});

  c.push_back({"algebra.trig_quotients", "analytic extension", 0, 1e-12, [](const CheckContext& ctx) {
                 Worst w;
                 w.add(std::abs(algebra::safe_trig_quotients(0).f1 - kPi / 2));
                 w.add(std::abs(algebra::safe_trig_quotients(1).f2 - kPi / 4));
                 w.add(std::abs(algebra::safe_trig_quotients(0.5).f1 - std::sqrt(2.0)));
                 // continuity across the series switch
                 for (double r0 : {0.0, 1.0})
                   for (double d : {0.999e-3, 1.001e-3}) {
                     const double r = r0 == 0 ? d : 1 - d;
                     const long double lr = r;
                     const long double pi = std::numbers::pi_v<long double>;
                     const auto q = algebra::safe_trig_quotients(r);
                     w.add(std::abs(q.f1 - static_cast<double>(sinl(pi * lr / 2) / lr)));
                     w.add(std::abs(q.f2 - static_cast<double>(cosl(pi * lr / 2) / (1 - lr * lr))));
                   }
                 return w.below(ctx.tol());
               }});

  // ---------------------------------------------------------------- diffeo
  c.push_back({"diffeo.psi_residual", "Brieskorn diffeomorphism residuals", 1, 1e-12, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int n : {3, 7})
                   for (int i = 0; i < ctx.count(10000); ++i)
                     w.add(brieskorn::real_residuals(diffeo::psi(diffeo::random_pair(n, rng))).cwiseAbs().maxCoeff());
                 return w.below(ctx.tol(), "rational map, n = 3 and 7");
               }});

  c.push_back({"diffeo.psi_trig_residual", "trigonometric diffeomorphism residuals", 1, 1e-11,
               [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int n : {3, 7})
                   for (int i = 0; i < ctx.count(1000); ++i)
                     w.add(brieskorn::real_residuals(diffeo::psi_trig(diffeo::random_pair(n, rng))).cwiseAbs().maxCoeff());
                 const SpherePair pole{Eigen::Vector3d::Zero(), Eigen::Vector3d(0, 0, 1)};
                 w.add(diffeo::distance(diffeo::psi_trig(pole), diffeo::psi(pole)));
                 return w.below(ctx.tol());
               }});

  c.push_back({"diffeo.inverse_roundtrip", "inverse of the diffeomorphism", 1, 1e-9, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (Profile prof : {Profile::rational, Profile::trigonometric})
                   for (int n : {3, 7})
                     for (int i = 0; i < ctx.count(1000); ++i) {
                       SpherePair x = diffeo::random_pair(n, rng);
                       if (i % 10 == 0) {
                         // boundary stratum p ∥ w
                         const double lambda = numerics::uniform(rng, -2, 2);
                         x.w = lambda * x.p;
                         const double s = std::sqrt(x.p.squaredNorm() + x.w.squaredNorm());
                         x.p /= s;
                         x.w /= s;
                       }
                       const auto inv = diffeo::psi_inverse(diffeo::psi_map(x, prof), prof);
                       w.add(diffeo::distance(inv.x, x));
                     }
                 return w.below(ctx.tol(), "both profiles, n = 3 and 7, every tenth sample on p ∥ w");
               }});

  c.push_back({"diffeo.determinant_bound", "frame determinant lower bound", 1, 1e-9, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 double slack = std::numeric_limits<double>::infinity();
                 for (int i = 0; i < ctx.count(10000); ++i) {
                   const auto b = diffeo::psi(diffeo::random_pair(3, rng));
                   const auto inv = diffeo::psi_inverse(b);
                   const double gap = inv.determinant - diffeo::determinant_bound(b.x0);
                   slack = std::min(slack, gap);
                   w.add(std::max(0.0, -gap));
                 }
                 return w.below(ctx.tol(), "smallest det - bound " + num(slack));
               }});

  c.push_back({"diffeo.orbit_space_identity", "identity on the orbit space", 0, 1e-13, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (Profile prof : {Profile::rational, Profile::trigonometric})
                   for (int i = 0; i < ctx.count(1000); ++i) {
                     const SpherePair x = diffeo::random_pair(3, rng);
                     const auto b = diffeo::psi_map(x, prof);
                     w.add(std::abs(2.0 * brieskorn::Complex(b.x0, b.y0) - diffeo::disc_coordinate(x)));
                     // x and y stay in span{p, w, p×w}
                     Eigen::Matrix3d F;
                     F << x.p, x.w, algebra::cross(x.p, x.w);
                     const Eigen::Vector3d cx = F.colPivHouseholderQr().solve(Eigen::Vector3d(b.x));
                     const Eigen::Vector3d cy = F.colPivHouseholderQr().solve(Eigen::Vector3d(b.y));
                     if (std::abs(F.determinant()) > 1e-3) w.add(std::max((F * cx - b.x).norm(), (F * cy - b.y).norm()));
                   }
                 return w.below(ctx.tol());
               }});

  c.push_back({"diffeo.partial_injective", "injective partial maps", 0, 1e-11, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 std::vector<Eigen::VectorXd> images;
                 for (int i = 0; i < ctx.count(1000); ++i) {
                   const auto b = diffeo::partial_injective(diffeo::random_pair(5, rng));
                   w.add(brieskorn::real_residuals(b).cwiseAbs().maxCoeff());
                   Eigen::VectorXd v(12);
                   v << b.x0, b.y0, b.x, b.y;
                   images.push_back(v);
                 }
                 double closest = std::numeric_limits<double>::infinity();
                 for (size_t i = 0; i < images.size(); ++i)
                   for (size_t j = i + 1; j < images.size(); ++j) closest = std::min(closest, (images[i] - images[j]).norm());
                 Outcome o = w.below(ctx.tol(), "n = 5; closest distinct images " + num(closest));
                 o.pass = o.pass && closest > 1e-8;
                 return o;
               }});

  c.push_back({"diffeo.so3_equivariance", "SO(3) equivariance", 2, 1e-12, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (Profile prof : {Profile::rational, Profile::trigonometric})
                   for (int i = 0; i < ctx.count(1000); ++i)
                     w.add(diffeo::equivariance_check(brieskorn::haar_rotation(rng), diffeo::random_pair(3, rng), prof));
                 return w.below(ctx.tol());
               }});

  c.push_back({"diffeo.g2_equivariance", "G2 equivariance", 2, 1e-9, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 double automorphism = 0;
                 for (int i = 0; i < ctx.count(100); ++i) {
                   const Eigen::MatrixXd g = brieskorn::g2_sample(rng);
                   automorphism = std::max(automorphism, brieskorn::automorphism_residual(g, rng, 5));
                   for (Profile prof : {Profile::rational, Profile::trigonometric})
                     w.add(diffeo::equivariance_check(g, diffeo::random_pair(7, rng), prof));
                 }
                 w.add(automorphism);
                 return w.below(ctx.tol(), "automorphism residual " + num(automorphism));
               }});

  // ---------------------------------------------------------------- actions
  c.push_back({"actions.q_map", "the twisting map Q", 3, 1e-11, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(1000); ++i) {
                   const double theta = numerics::uniform(rng, -kPi, kPi);
                   const SpherePair x = generic_pair(rng, theta);
                   const auto q = actions::q_map(x, theta);
                   w.add(std::abs(q.norm() - 1));
                   w.add(qdist(q, actions::q_map_raw(x, theta)));
                   w.add(qdist(actions::q_map(x, 0.0), algebra::one(4)));
                 }
                 // degenerate samples w = 0, |p| = 1
                 for (int i = 0; i < 20; ++i) {
                   const SpherePair x{numerics::unit_vector(rng, 3), Eigen::Vector3d::Zero()};
                   w.add(std::abs(actions::q_map(x, numerics::uniform(rng, -kPi, kPi)).norm() - 1));
                 }
                 return w.below(ctx.tol());
               }});

  c.push_back({"actions.cocycle", "cocycle law", 3, 1e-11, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(1000); ++i) {
                   const SpherePair x = diffeo::random_pair(3, rng);
                   w.add(actions::cocycle_residual(x, numerics::uniform(rng, -kPi, kPi), numerics::uniform(rng, -kPi, kPi)));
                   w.add(actions::cocycle_residual(x, 0.0, numerics::uniform(rng, -kPi, kPi)));
                 }
                 return w.below(ctx.tol(), "n = 3");
               }});

  c.push_back({"actions.cocycle_octonion", "cocycle law", 3, 1e-10, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(100); ++i)
                   w.add(actions::cocycle_residual(diffeo::random_pair(7, rng), numerics::uniform(rng, -kPi, kPi),
                                                   numerics::uniform(rng, -kPi, kPi)));
                 return w.below(ctx.tol(), "n = 7");
               }});

  c.push_back({"actions.action_law", "nonlinear circle action", 3, 1e-10, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int n : {3, 7})
                   for (int i = 0; i < ctx.count(n == 3 ? 1000 : 100); ++i) {
                     const SpherePair x = diffeo::random_pair(n, rng);
                     const double a = numerics::uniform(rng, -kPi, kPi), b = numerics::uniform(rng, -kPi, kPi);
                     w.add(pair_dist(actions::nonlinear_rotate(actions::nonlinear_rotate(x, a), b),
                                     actions::nonlinear_rotate(x, a + b)));
                     w.add(pair_dist(actions::nonlinear_rotate(x, 2 * kPi), x));
                     w.add(std::abs(diffeo::sphere_residual(actions::nonlinear_rotate(x, a))));
                   }
                 return w.below(ctx.tol());
               }});

  c.push_back({"actions.involution", "exotic involutions", 3, 1e-10, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int n : {3, 7})
                   for (int i = 0; i < ctx.count(n == 3 ? 1000 : 100); ++i) {
                     const SpherePair x = diffeo::random_pair(n, rng);
                     w.add(pair_dist(actions::nonlinear_rotate(actions::nonlinear_rotate(x, kPi), kPi), x));
                   }
                 return w.below(ctx.tol(), "rotation by pi applied twice");
               }});

  c.push_back({"actions.brieskorn_equivalence", "linear model of the nonlinear action", 3, 1e-9,
               [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w, calabi;
                 for (Profile prof : {Profile::trigonometric, Profile::rational})
                   for (int i = 0; i < ctx.count(1000); ++i) {
                     const SpherePair x = diffeo::random_pair(3, rng);
                     w.add(actions::brieskorn_equivalence_residual(x, numerics::uniform(rng, -kPi, kPi), prof));
                     w.add(actions::brieskorn_equivalence_residual(x, 2 * kPi / 3, prof));
                     const double r = actions::brieskorn_equivalence_residual(x, kPi, prof);
                     w.add(r);
                     calabi.add(r);
                   }
                 return w.below(ctx.tol(), "rotation by pi (Calabi involution) worst " + num(calabi.value));
               }});

  c.push_back({"actions.reflection", "O(2) extension", 3, 1e-9, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (Profile prof : {Profile::trigonometric, Profile::rational})
                   for (int i = 0; i < ctx.count(1000); ++i) {
                     const SpherePair x = diffeo::random_pair(3, rng);
                     const double theta = numerics::uniform(rng, -kPi, kPi);
                     w.add(actions::reflection_residual(x, prof));
                     w.add(pair_dist(actions::reflect(actions::nonlinear_rotate(actions::reflect(x), theta, prof)),
                                     actions::nonlinear_rotate(x, -theta, prof)));
                   }
                 return w.below(ctx.tol(), "reflection model and dihedral relation");
               }});

  c.push_back({"actions.quaternion_equivariance", "equivariance under conjugation", 0, 1e-12,
               [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(1000); ++i) {
                   const SpherePair x = diffeo::random_pair(3, rng);
                   const Eigen::Matrix3d R = algebra::rotation_matrix(numerics::unit_quaternion(rng));
                   const double theta = numerics::uniform(rng, -kPi, kPi);
                   w.add(pair_dist(actions::nonlinear_rotate(diffeo::rotate(R, x), theta),
                                   diffeo::rotate(R, actions::nonlinear_rotate(x, theta))));
                 }
                 return w.below(ctx.tol());
               }});

  c.push_back({"actions.nonlinearity", "nonlinear circle action", 0, 1e-3, [](const CheckContext& ctx) {
                 const SpherePair x{Eigen::Vector3d(0.6, 0, 0), Eigen::Vector3d(0, 0.8, 0)};
                 const SpherePair y{Eigen::Vector3d(0, 0, 0.8), Eigen::Vector3d(0.6, 0, 0)};
                 SpherePair s{x.p + y.p, x.w + y.w};
                 const double n = std::sqrt(s.p.squaredNorm() + s.w.squaredNorm());
                 s.p /= n;
                 s.w /= n;
                 const SpherePair a = actions::nonlinear_rotate(x, kPi / 2), b = actions::nonlinear_rotate(y, kPi / 2);
                 SpherePair sum{a.p + b.p, a.w + b.w};
                 const double m = std::sqrt(sum.p.squaredNorm() + sum.w.squaredNorm());
                 sum.p /= m;
                 sum.w /= m;
                 const double gap = pair_dist(actions::nonlinear_rotate(s, kPi / 2), sum);
                 return Outcome{gap > ctx.tol(), gap, 1, "deviation from linearity at quarter turn"};
               }});

  c.push_back({"actions.normal_curve", "normal curve", 0, 1e-9, [](const CheckContext& ctx) {
                 Worst w;
                 for (Profile prof : {Profile::trigonometric, Profile::rational})
                   for (int i = 0; i < 32; ++i) w.add(actions::normal_curve_residual(kPi / 2 * i / 31, prof));
                 const auto b = brieskorn::from_real(diffeo::psi_trig(actions::normal_curve(kPi / 4)));
                 w.add(std::abs(b.z0));
                 return w.below(ctx.tol());
               }});

  c.push_back({"actions.twisted_variant", "twisted actions", 0, 1e-10, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(200); ++i) {
                   const SpherePair x = diffeo::random_pair(3, rng);
                   const double a = numerics::uniform(rng, -kPi, kPi), b = numerics::uniform(rng, -kPi, kPi);
                   w.add(actions::cocycle_residual(x, a, b, Profile::trigonometric, 1));
                   w.add(std::abs(actions::q_map(x, a, Profile::trigonometric, 1).norm() - 1));
                 }
                 return w.below(ctx.tol(), "threefold twist");
               }});

  // ---------------------------------------------------------------- brieskorn
  c.push_back({"brieskorn.action", "O(2) x SO(n) action", 0, 1e-12, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w, g2;
                 for (int i = 0; i < ctx.count(1000); ++i) {
                   const BrieskornPoint P = brieskorn::sample_point(3, rng);
                   w.add(brieskorn::residuals(P).max());
                   auto g = brieskorn::IsometryElement::rotation(numerics::uniform(rng, 0, 2 * kPi), 3);
                   g.rot = brieskorn::haar_rotation(rng);
                   if (i % 2) g.o2(1, 1) = -g.o2(1, 1), g.o2(0, 1) = -g.o2(0, 1);
                   auto h = brieskorn::IsometryElement::rotation(numerics::uniform(rng, 0, 2 * kPi), 3);
                   h.rot = brieskorn::haar_rotation(rng);
                   w.add(brieskorn::residuals(brieskorn::act(g, P)).max());
                   w.add(brieskorn::distance(brieskorn::act(brieskorn::compose(g, h), P),
                                             brieskorn::act(g, brieskorn::act(h, P))));
                   w.add(brieskorn::distance(brieskorn::from_real(brieskorn::to_real(P)), P));
                   w.add(std::abs(brieskorn::disc_projection(brieskorn::act({Eigen::Matrix2d::Identity(), g.rot}, P)) -
                                  brieskorn::disc_projection(P)));
                 }
                 for (int i = 0; i < ctx.count(100); ++i) {
                   brieskorn::IsometryElement g{Eigen::Matrix2d::Identity(), brieskorn::g2_sample(rng)};
                   g2.add(brieskorn::residuals(brieskorn::act(g, brieskorn::sample_point(7, rng))).max());
                 }
                 Outcome o = w.below(ctx.tol(), "G2 residual " + num(g2.value));
                 o.pass = o.pass && g2.value < 1e-9;
                 return o;
               }});

  c.push_back({"brieskorn.beta_unit_speed", "arc-length parametrization", 4, 1e-9, [](const CheckContext& ctx) {
                 Worst w;
                 for (int i = 0; i < 64; ++i) {
                   const double s = 2 * kPi * i / 64;
                   w.add(std::abs(brieskorn::ambient(brieskorn::beta_velocity(s)).norm() - 1));
                   w.add(brieskorn::residuals(brieskorn::beta(s)).max());
                   const BrieskornPoint b = brieskorn::beta(s);
                   w.add(std::max({std::abs(b.z0.imag()), std::abs(b.z[0]), std::abs(b.z[1].imag()), std::abs(b.z[2].real())}));
                 }
                 return w.below(ctx.tol());
               }});

  c.push_back({"brieskorn.beta_geodesic", "normal geodesic of the Brieskorn sphere", 4, 1e-5,
               [](const CheckContext& ctx) {
                 Worst tang, perp;
                 for (int i = 0; i < 64; ++i) {
                   const auto r = brieskorn::beta_geodesic_residual(2 * kPi * (i + 0.5) / 64);
                   tang.add(r.tangential);
                   perp.add(r.orbit_perpendicular);
                 }
                 Outcome o = tang.below(ctx.tol(), "orbit perpendicularity " + num(perp.value));
                 o.pass = o.pass && perp.value < 1e-8;
                 return o;
               }});

  c.push_back({"brieskorn.geodesic_negative_control", "normal geodesic of the Brieskorn sphere", 0, 1e-2,
               [](const CheckContext& ctx) {
                 double worst = 0;
                 for (double s : {0.3, 0.5, 0.9}) {
                   const auto r =
                       brieskorn::curve_geodesic_residual([](double u) { return brieskorn::beta(u * u); }, s);
                   worst = std::max(worst, r.tangential);
                 }
                 return Outcome{worst > ctx.tol(), worst, 3, "reparametrized curve must fail"};
               }});

  c.push_back({"brieskorn.isotropy", "isotropy groups", 6, 1e-12, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 const auto r = brieskorn::isotropy_verify(0.3, rng, ctx.count(100));
                 Worst w;
                 w.add(r.principal);
                 w.add(r.singular_minus);
                 w.add(r.singular_plus);
                 Outcome o = w.below(ctx.tol(), "non-members move at least " + num(r.nonmember_min_move) +
                                                    "; singular+ against the unreflected point " +
                                                    num(r.singular_plus_literal));
                 o.pass = o.pass && r.nonmember_min_move > 1e-6;
                 o.samples = ctx.count(100);
                 return o;
               }});

  c.push_back({"brieskorn.g2_derivations", "G2 automorphisms", 0, 1e-9, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(50); ++i) {
                   const Eigen::MatrixXd D = brieskorn::g2_derivation(numerics::gaussian(rng, 7), numerics::gaussian(rng, 7));
                   w.add((D + D.transpose()).cwiseAbs().maxCoeff());
                   const Eigen::MatrixXd g = brieskorn::g2_sample(rng);
                   const algebra::ImVec x = numerics::gaussian(rng, 7), y = numerics::gaussian(rng, 7);
                   w.add((g * algebra::cross(x, y) - algebra::cross(g * x, g * y)).norm());
                 }
                 w.add((numerics::expm(Eigen::MatrixXd(Eigen::MatrixXd::Zero(7, 7))) - Eigen::MatrixXd::Identity(7, 7)).norm());
                 return w.below(ctx.tol());
               }});

  // ---------------------------------------------------------------- sp2
  c.push_back({"sp2.metric_inner", "left-invariant metrics", 0, 1e-12, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 const MetricParams half{0.5, 0.5};
                 w.add(std::abs(sp2::metric_inner(half, sp2::QMatrix::diag(algebra::kI, 0.0),
                                                  sp2::QMatrix::diag(algebra::kI, 0.0)) - 0.5));
                 w.add(std::abs(sp2::metric_inner(half, sp2::QMatrix::make(0.0, -1.0, 1.0, 0.0),
                                                  sp2::QMatrix::make(0.0, -algebra::kI, algebra::kI, 0.0))));
                 const auto basis = sp2::algebra_basis();
                 auto random_body = [&] {
                   sp2::QMatrix u{};
                   for (const auto& b : basis) u = u + numerics::normal(rng) * b;
                   return u;
                 };
                 for (int i = 0; i < ctx.count(200); ++i) {
                   const auto u = random_body(), v = random_body(), x = random_body();
                   w.add(std::abs(sp2::metric_inner(half, sp2::bracket(u, x), v) + sp2::metric_inner(half, x, sp2::bracket(u, v))));
                 }
                 for (const auto& P : default_grid())
                   for (int a = 0; a < 10; ++a)
                     for (int b = a + 1; b < 10; ++b) w.add(std::abs(sp2::metric_inner(P, basis[a], basis[b])));
                 return w.below(ctx.tol(), "bi-invariance at (1/2,1/2) and basis orthogonality");
               }});

  c.push_back({"sp2.actions_commute", "star and bullet actions", 0, 1e-13, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(100); ++i) {
                   const auto A = sp2::random_element(rng);
                   const auto q = numerics::unit_quaternion(rng), r = numerics::unit_quaternion(rng);
                   Eigen::Matrix2d B = sp2::rotation(numerics::uniform(rng, 0, 2 * kPi));
                   if (i % 2) B.col(1) *= -1;
                   w.add(sp2::max_abs(sp2::star_act(q, sp2::bullet_act(B, r, A)) - sp2::bullet_act(B, r, sp2::star_act(q, A))));
                   w.add(sp2::max_abs(sp2::star_act(1.0, A) - A));
                   w.add(sp2::unitarity_residual(A));
                 }
                 const auto q = numerics::unit_quaternion(rng);
                 w.add(sp2::max_abs(sp2::star_act(q, sp2::QMatrix::identity()) - sp2::QMatrix::diag(1.0, q)));
                 return w.below(ctx.tol());
               }});

  c.push_back({"sp2.isometric_actions", "star and bullet actions", 0, 1e-7, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 const auto basis = sp2::algebra_basis();
                 for (int i = 0; i < ctx.count(50); ++i) {
                   const MetricParams P{numerics::uniform(rng, 0.2, 2), numerics::uniform(rng, 0.2, 2)};
                   const auto A = sp2::random_element(rng);
                   const auto q = numerics::unit_quaternion(rng), r = numerics::unit_quaternion(rng);
                   const Eigen::Matrix2d B = sp2::rotation(numerics::uniform(rng, 0, 2 * kPi));
                   sp2::QMatrix u{}, v{};
                   for (const auto& b : basis) {
                     u = u + numerics::normal(rng) * b;
                     v = v + numerics::normal(rng) * b;
                   }
                   auto push = [&](const sp2::QMatrix& body) {
                     // differential of the composite action along t ↦ A·exp(t body), as a body at the image
                     const sp2::Curve curve = [&](double t) {
                       return sp2::star_act(q, sp2::bullet_act(B, r, A * sp2::exp_body(t * body)));
                     };
                     return sp2::body_velocity(curve, 0.0);
                   };
                   w.add(std::abs(sp2::metric_inner(P, push(u), push(v)) - sp2::metric_inner(P, u, v)));
                 }
                 return w.below(ctx.tol(), "differential by finite differences");
               }});

  c.push_back({"sp2.orbit_equality", "orbit space of the star action", 0, 1e-10, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 bool ok = true;
                 for (int i = 0; i < ctx.count(1000); ++i) {
                   const auto A = sp2::random_element(rng);
                   const auto q1 = numerics::unit_quaternion(rng), q2 = numerics::unit_quaternion(rng);
                   const sp2::Sigma7Point x{A}, y{sp2::star_act(q1, A)}, z{sp2::star_act(q2, sp2::star_act(q1, A))};
                   ok = ok && sp2::orbit_equal(x, x) && sp2::orbit_equal(x, y) && sp2::orbit_equal(y, x) &&
                        sp2::orbit_equal(y, z) && sp2::orbit_equal(x, z);
                   w.add(sp2::orbit_residual(A, sp2::star_act(q1, A)));
                 }
                 ok = ok && !sp2::orbit_equal({sp2::QMatrix::identity()}, {-sp2::QMatrix::identity()});
                 Outcome o = w.below(ctx.tol());
                 o.pass = o.pass && ok;
                 return o;
               }});

  c.push_back({"sp2.lift_basics", "horizontal lift", 0, 1e-12, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(200); ++i) {
                   const Eigen::VectorXd v = numerics::unit_vector(rng, 6);
                   const Eigen::Vector3d p = v.head(3);
                   const Quaternion q = Quaternion::pure(v.tail(3));
                   const double t = numerics::uniform(rng, -4, 4);
                   const auto A = sp2::horizontal_lift(p, q, t);
                   w.add(sp2::unitarity_residual(A));
                   const double c = std::cos(t), s = std::sin(t);
                   w.add(algebra::distance(A(0, 0), c + s * Quaternion::pure(p)));
                   w.add(algebra::distance(A(1, 0), s * q));
                   w.add(sp2::max_abs(sp2::horizontal_lift(p, q, 0.0) - sp2::QMatrix::identity()));
                 }
                 const double t = 0.9;
                 const auto e = algebra::sphere_exp(Eigen::Vector3d(0, 1, 0), t);
                 w.add(sp2::max_abs(sp2::horizontal_lift(Eigen::Vector3d(0, 1, 0), 0.0, t) -
                                    sp2::QMatrix::diag(Quaternion(e[0], e[1], e[2], e[3]), 1.0)));
                 return w.below(ctx.tol());
               }});

  c.push_back({"sp2.alpha_horizontal", "normal geodesic of Sp(2)", 4, 1e-8, [](const CheckContext& ctx) {
                 Worst w;
                 for (const auto& P : ctx.grid(default_grid()))
                   for (int i = 0; i < 32; ++i) w.add(sp2::horizontality_residual(sp2::alpha_curve(), kPi * i / 32, P));
                 for (int i = 0; i < 32; ++i) {
                   const auto a = sp2::normal_geodesic_alpha(kPi * i / 32);
                   w.add(std::abs(a(0, 0).w) + std::abs(a(1, 0).w));
                 }
                 return w.below(ctx.tol());
               }});

  c.push_back({"sp2.euler_arnold_grid", "normal geodesic of Sp(2)", 4, 1e-7, [](const CheckContext& ctx) {
                 Worst w;
                 for (const auto& P : ctx.grid(default_grid()))
                   for (int i = 0; i < 8; ++i) w.add(sp2::euler_arnold_residual(sp2::alpha_curve(), P, 0.1 + 0.37 * i));
                 const sp2::Curve subgroup = [](double t) {
                   return sp2::exp_body(t * sp2::QMatrix::diag(algebra::kI, algebra::kI));
                 };
                 w.add(sp2::euler_arnold_residual(subgroup, {0.5, 0.5}, 0.4));
                 return w.below(ctx.tol());
               }});

  c.push_back({"sp2.lift_horizontal_mu1", "geodesics of the wiedersehen metrics", 4, 1e-8, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(100); ++i) {
                   const Eigen::VectorXd v = numerics::unit_vector(rng, 6);
                   const double nu = numerics::uniform(rng, 0.2, 2);
                   w.add(sp2::lift_is_horizontal(v.head(3), Quaternion::fromVector(Eigen::Vector4d(0, v[3], v[4], v[5])),
                                                 numerics::uniform(rng, -3, 3), {1.0, nu}));
                 }
                 return w.below(ctx.tol());
               }});

  c.push_back({"sp2.lift_horizontal_mu2", "geodesics of the wiedersehen metrics", 9, 1e-3, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 double worst = 0;
                 for (int i = 0; i < ctx.count(100); ++i) {
                   const Eigen::VectorXd v = numerics::unit_vector(rng, 7);
                   worst = std::max(worst, sp2::lift_is_horizontal(v.head(3), Quaternion::fromVector(v.tail(4)),
                                                                  numerics::uniform(rng, 0.3, 3), {2.0, 0.5}));
                 }
                 return Outcome{worst > ctx.tol(), worst, ctx.count(100), "negative control at mu = 2"};
               }});

  c.push_back({"sp2.wiedersehen", "wiedersehen metrics", 4, 1e-10, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 bool ok = true;
                 for (int i = 0; i <= ctx.count(100); ++i) {
                   Eigen::VectorXd v = numerics::unit_vector(rng, 7);
                   if (i == 0) v = Eigen::VectorXd::Unit(7, 1);
                   const auto r = sp2::wiedersehen_check(v.head(3), Quaternion::fromVector(v.tail(4)),
                                                         {1.0, numerics::uniform(rng, 0.2, 2)});
                   ok = ok && r.ok;
                   w.add(std::max({r.residual_pi, r.residual_2pi, r.witness_residual}));
                 }
                 Outcome o = w.below(ctx.tol(), "returns at pi and 2 pi, closed-form witness at pi");
                 o.pass = o.pass && ok;
                 return o;
               }});

  c.push_back({"sp2.metric_matrix", "metric matrix along the normal geodesic", 5, 1e-11, [](const CheckContext& ctx) {
                 Worst w;
                 for (const auto& P : ctx.grid(default_grid()))
                   for (int i = 0; i < 16; ++i) {
                     const double s = kPi / 2 * i / 15;
                     w.add((sp2::metric_matrix(s, P) - sp2::metric_matrix_direct(s, P)).cwiseAbs().maxCoeff());
                   }
                 return w.below(ctx.tol(), "closed forms against Killing-field inner products");
               }});

  c.push_back({"sp2.killing_fields", "Killing fields along the normal geodesic", 0, 1e-11,
               [](const CheckContext& ctx) {
                 Worst w;
                 double literal = 0;
                 for (const auto& P : ctx.grid(default_grid()))
                   for (int i = 0; i < 8; ++i) {
                     const double s = 0.05 + 0.19 * i;
                     const auto kf = sp2::killing_fields_along_alpha(s, P);
                     const auto A = sp2::normal_geodesic_alpha(s);
                     const auto xi = sp2::star_vertical_basis(A);
                     const auto closed = sp2::vertical_closed_forms(s);
                     for (int a = 0; a < 3; ++a) w.add(sp2::max_abs(xi[a] - closed[a]));
                     for (int a = 0; a < 4; ++a) {
                       w.add(sp2::max_abs(kf.projected[a] - kf.closed[a]));
                       for (int b = 0; b < 3; ++b) w.add(std::abs(sp2::metric_inner(P, kf.projected[a], xi[b])));
                     }
                     const auto kp = sp2::killing_fields_along_alpha(s, P, sp2::KillingForm::literal);
                     for (int a = 0; a < 4; ++a) literal = std::max(literal, sp2::max_abs(kp.projected[a] - kp.closed[a]));
                   }
                 return w.below(ctx.tol(), "literal coefficients of the last two fields deviate by " + num(literal));
               }});

  c.push_back({"sp2.memberships", "fixed-point sets", 0, 1e-10, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 bool ok = sp2::in_sigma1({sp2::QMatrix::identity()});
                 for (int i = 0; i < 16; ++i) ok = ok && sp2::in_sigma5({sp2::normal_geodesic_alpha(0.2 * i)});
                 for (int i = 0; i < ctx.count(100); ++i) {
                   const Eigen::VectorXd v = numerics::unit_vector(rng, 7);
                   ok = ok && sp2::in_sigma6_pm1({sp2::horizontal_lift(v.head(3), Quaternion::fromVector(v.tail(4)), kPi / 2)});
                 }
                 return Outcome{ok, ok ? 0.0 : 1.0, ctx.count(100) + 17, ""};
               }});

  c.push_back({"sp2.flat_torus", "flat torus", 0, 1e-8, [](const CheckContext& ctx) {
                 Worst w;
                 double control = std::numeric_limits<double>::infinity();
                 for (double mu : {0.5, 1.0})
                   for (double nu : {0.5, 1.0})
                     for (int i = 0; i < 8; ++i)
                       for (int j = 0; j < 8; ++j) {
                         const auto r = sp2::flat_torus_checks(2 * kPi * i / 8 + 0.1, 2 * kPi * j / 8 + 0.2, {mu, nu});
                         w.add(std::max({r.unitarity, r.star_horizontal, r.euler_arnold, r.bullet_horizontal_first}));
                         control = std::min(control, r.bullet_horizontal_second);
                       }
                 const auto base = sp2::flat_torus(0, 0);
                 const double s = 1 / std::sqrt(2.0);
                 w.add(sp2::max_abs(base - s * sp2::QMatrix::make(1.0, algebra::kI, algebra::kI, 1.0)));
                 Outcome o = w.below(ctx.tol(), "second factor off the bullet-horizontal space by at least " + num(control));
                 o.pass = o.pass && control > 1e-3;
                 return o;
               }});

  c.push_back({"sp2.fixed_point_structure", "fixed-point sets", 0, 1e-9, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 bool ok = true;
                 int found = 0;
                 for (double sign : {1.0, -1.0})
                   for (double qs : {1.0, -1.0}) {
                     const auto fixed = sp2::fixed_point_search(sign * Eigen::Matrix2d::Identity(), qs * algebra::kI, rng,
                                                                ctx.count(20), ctx.tol());
                     found += static_cast<int>(fixed.size());
                     for (const auto& A : fixed)
                       ok = ok && (sign > 0 ? sp2::in_unitary_image({A}, 1e-6) : sp2::in_sigma5({A}, 1e-6));
                   }
                 return Outcome{ok && found > 0, ok ? 0.0 : 1.0, found, std::to_string(found) + " fixed representatives"};
               }});

  c.push_back({"sp2.complex_representation", "matrix exponential", 0, 1e-12, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(100); ++i) {
                   const auto A = sp2::random_element(rng), B = sp2::random_element(rng);
                   w.add((sp2::to_complex(A * B) - sp2::to_complex(A) * sp2::to_complex(B)).cwiseAbs().maxCoeff());
                   w.add(sp2::max_abs(sp2::from_complex(sp2::to_complex(A)) - A));
                 }
                 return w.below(ctx.tol());
               }});

  // ---------------------------------------------------------------- riemann
  c.push_back({"riemann.engine_reference", "curvature engine", 0, 1e-5, [](const CheckContext& ctx) {
                 Worst w;
                 const Eigen::Vector2d e1(1, 0), e2(0, 1);
                 for (double t : {0.4, 1.0, 2.2}) {
                   const Point x = Eigen::Vector2d(t, 0.3);
                   w.add(std::abs(riemann::sectional(riemann::round_sphere2(), x, e1, e2) - 1));
                   const auto G = riemann::christoffel(riemann::round_sphere2(), x);
                   w.add(std::abs(G[0](1, 1) + std::sin(t) * std::cos(t)));
                 }
                 w.add(std::abs(riemann::sectional(riemann::hyperbolic_half_plane(), Point(Eigen::Vector2d(0.2, 1.0)), e1, e2) + 1));
                 const Point x3 = Eigen::Vector3d(0.9, 1.2, 0.4);
                 w.add(std::abs(riemann::scalar(riemann::round_sphere3(), x3) - 6) / 6);
                 const auto ev = riemann::curvature_operator_eigenvalues(riemann::round_sphere3(), x3);
                 w.add(std::max(std::abs(ev.minCoeff() - 1), std::abs(ev.maxCoeff() - 1)));
                 const auto prod = riemann::product(riemann::round_sphere2(), riemann::hyperbolic_half_plane());
                 w.add(std::abs(riemann::scalar(prod, Point(Eigen::Vector4d(1.1, 0.2, 0.3, 0.8))) - (2 - 2)));
                 const auto G0 = riemann::christoffel(riemann::euclidean(3), x3);
                 for (const auto& g : G0) w.add(g.cwiseAbs().maxCoeff());
                 w.add(riemann::bianchi_residual(riemann::sigma32_metric({0.5, 0.5}), Point(Eigen::Vector3d(1.0, 1.3, 0.2))));
                 w.add(riemann::bianchi_residual(riemann::sigma5_orbit_chart({0.5, 0.5}), Point(Eigen::VectorXd::Constant(5, 0.3))));
                 return w.below(ctx.tol(), "spheres, hyperbolic plane, products, Bianchi identity");
               }});

  c.push_back({"riemann.step_consistency", "curvature engine", 0, 1e-3, [](const CheckContext& ctx) {
                 Worst w;
                 const auto M = riemann::sigma32_metric({0.5, 0.5});
                 const Point x = Eigen::Vector3d(1.0, 1.3, 0.0);
                 const riemann::Steps fine{0.5e-4, 0.5e-3};
                 const auto a = riemann::curvature_operator_eigenvalues(M, x);
                 const auto b = riemann::curvature_operator_eigenvalues(M, x, fine);
                 w.add((a - b).cwiseAbs().maxCoeff() / a.cwiseAbs().maxCoeff());
                 return w.below(ctx.tol() / 10, "halved steps");
               }});

  c.push_back({"riemann.sigma2_values", "curvature of the two-sphere fixed-point set", 7, 1e-3,
               [](const CheckContext& ctx) {
                 Worst w;
                 const Eigen::Vector2d e1(1, 0), e2(0, 1);
                 for (const auto& P : ctx.grid(default_grid())) {
                   const auto cf = riemann::sigma2_curvature_closed(P);
                   const auto M = riemann::sigma2_metric(P);
                   w.add(rel(riemann::sigma2_curvature_at_zero(P), cf.at_zero));
                   w.add(rel(riemann::sectional(M, Point(Eigen::Vector2d(kPi / 4, 0)), e1, e2), cf.at_quarter));
                   w.add(rel(riemann::sectional(M, Point(Eigen::Vector2d(kPi / 2, 0)), e1, e2), cf.at_half));
                 }
                 // closure at the pole: c(s) = 4s² + O(s⁴)
                 const double s = 1e-3;
                 w.add(rel(sp2::metric_matrix(s, {0.5, 0.5})(2, 2), 4 * s * s));
                 return w.below(ctx.tol(), "relative errors at s = 0, pi/4, pi/2");
               }});

  c.push_back({"riemann.sigma2_negative", "negative curvature of the two-sphere fixed-point set", 9, 0.0,
               [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 auto params = ctx.grid(default_grid());
                 for (int i = 0; i < 20; ++i) params.push_back({numerics::uniform(rng, 0.05, 4), numerics::uniform(rng, 0.05, 4)});
                 const Eigen::Vector2d e1(1, 0), e2(0, 1);
                 double worst = -std::numeric_limits<double>::infinity();
                 for (const auto& P : params) {
                   const auto M = riemann::sigma2_metric(P);
                   double lowest = std::numeric_limits<double>::infinity();
                   for (int i = 1; i <= 16; ++i)
                     lowest = std::min(lowest, riemann::sectional(M, Point(Eigen::Vector2d(kPi / 2 * i / 16, 0)), e1, e2));
                   worst = std::max(worst, lowest);
                 }
                 return Outcome{worst < ctx.tol(), worst, static_cast<int>(params.size()),
                                "largest per-metric minimum curvature"};
               }});

  c.push_back({"riemann.sigma31_bounds", "curvature of the three-sphere fixed-point set", 0, 1e-3,
               [](const CheckContext& ctx) {
                 Worst w;
                 for (const auto& P : ctx.grid(default_grid())) {
                   const auto M = riemann::sigma31_metric(P);
                   const auto e = riemann::min_max_sectional(
                       M, riemann::box_grid(Eigen::Vector3d(0.02, kPi / 2, 0), Eigen::Vector3d(kPi / 2, kPi / 2, 0), {41, 1, 1}));
                   const auto [lo, hi] = riemann::sigma31_bounds(P);
                   w.add(rel(std::min(e.min, e.max), lo));
                   w.add(rel(e.max, hi));
                   // rotational symmetry in the sphere factor
                   const auto a = riemann::curvature_operator_eigenvalues(M, Point(Eigen::Vector3d(0.7, 0.5, 0.1)));
                   const auto b = riemann::curvature_operator_eigenvalues(M, Point(Eigen::Vector3d(0.7, 2.1, 1.9)));
                   w.add((a - b).cwiseAbs().maxCoeff() * 1e-3 / 1e-6);
                 }
                 return w.below(ctx.tol(), "range endpoints attained to grid resolution");
               }});

  c.push_back({"riemann.sigma32_specialization", "metric of the second three-dimensional fixed-point set", 0, 1e-12,
               [](const CheckContext& ctx) {
                 Worst w;
                 for (double nu : {0.3, 0.5, 1.2}) {
                   const auto A = riemann::sigma32_metric({1.0, nu});
                   const auto B = riemann::sigma32_metric_mu1(nu);
                   for (const auto& x : riemann::box_grid(Eigen::Vector3d(0.1, 0.1, 0), Eigen::Vector3d(3.0, 3.0, 0), {10, 10, 1}))
                     w.add((A(x) - B(x)).cwiseAbs().maxCoeff());
                 }
                 return w.below(ctx.tol());
               }});

  c.push_back({"riemann.sigma32_pullback", "metric of the second three-dimensional fixed-point set", 0, 1e-8,
               [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(40); ++i) {
                   const MetricParams P{numerics::uniform(rng, 0.3, 1.5), numerics::uniform(rng, 0.3, 1.5)};
                   const Point x = Eigen::Vector3d(numerics::uniform(rng, 0.2, 2.9), numerics::uniform(rng, 0.2, 2.9),
                                                   numerics::uniform(rng, -3, 3));
                   w.add((riemann::sigma32_metric(P)(x) - riemann::sigma32_pullback_metric(P)(x)).cwiseAbs().maxCoeff());
                 }
                 return w.below(ctx.tol(), "closed components against quotient-metric pullback");
               }});

  c.push_back({"riemann.sigma32_deck", "gluing isometry", 0, 1e-9, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(100); ++i) {
                   const MetricParams P{numerics::uniform(rng, 0.3, 1.5), numerics::uniform(rng, 0.3, 1.5)};
                   const auto M = riemann::sigma32_metric(P);
                   const Eigen::Vector3d x(numerics::uniform(rng, 0.2, 2.9), numerics::uniform(rng, 0.2, 2.9),
                                           numerics::uniform(rng, -3, 3));
                   Eigen::Matrix3d J = Eigen::Matrix3d::Identity();
                   J(0, 0) = -1;
                   J(2, 1) = 2 * kPi * std::sin(x[1]);
                   const Eigen::MatrixXd pulled = J.transpose() * M(Point(riemann::sigma32_deck(x))) * J;
                   w.add((pulled - M(Point(x))).cwiseAbs().maxCoeff());
                 }
                 return w.below(ctx.tol());
               }});

  c.push_back({"riemann.sigma32_scalar", "scalar curvature of the second three-dimensional fixed-point set", 7, 1e-3,
               [](const CheckContext& ctx) {
                 Worst w;
                 double literal = 0;
                 const double nu = 0.5;
                 const auto M = riemann::sigma32_metric({1.0, nu});
                 for (int i = 0; i < 12; ++i)
                   for (double psi : {0.3, 1.9}) {
                     const double omega = 0.05 + 1.4 * i / 11;
                     const double fd = riemann::scalar(M, riemann::sigma32_polar_point(omega, psi));
                     const double closed = riemann::sigma32_scalar_literal(omega, nu);
                     w.add(rel(fd, -closed));
                     literal = std::max(literal, rel(fd, closed));
                   }
                 return w.below(ctx.tol(), "against the closed form with its overall sign reversed; the literal form is off by " +
                                               num(literal) + " relative");
               }});

  c.push_back({"riemann.sigma32_min_k", "curvature range of the second three-dimensional fixed-point set", 7, 2e-2,
               [](const CheckContext& ctx) {
                 const MetricParams P{0.5, 0.5};
                 const auto M = riemann::sigma32_metric(P);
                 const auto e = riemann::min_max_sectional(
                     M, riemann::box_grid(Eigen::Vector3d(0.05, 0.05, 0), Eigen::Vector3d(kPi - 0.05, kPi - 0.05, 0), {20, 20, 1}));
                 const double formula = riemann::sigma32_min_k_formula(P);
                 const double emin = rel(e.min, formula), eratio = rel(e.min / e.max, 1.0 / 145);
                 std::string detail = "min " + num(e.min) + " max " + num(e.max) + " ratio " + num(e.min / e.max);
                 for (const MetricParams& Q : {MetricParams{0.8, 0.3}, MetricParams{0.6, 0.6}, MetricParams{0.4, 0.8}}) {
                   const auto eq = riemann::min_max_sectional(
                       riemann::sigma32_metric(Q),
                       riemann::box_grid(Eigen::Vector3d(0.05, 0.05, 0), Eigen::Vector3d(kPi - 0.05, kPi - 0.05, 0), {20, 20, 1}));
                   detail += "; at " + mu_nu(Q) + " min " + num(eq.min) + " vs formula " + num(riemann::sigma32_min_k_formula(Q));
                 }
                 const double worst = std::max(emin / 0.5, eratio);
                 return Outcome{emin < 1e-2 && eratio < ctx.tol(), worst, 400, detail};
               }});

  c.push_back({"riemann.sigma32_frontier", "nonnegative curvature frontier", 9, 0.5, [](const CheckContext& ctx) {
                 int agree = 0, total = 0;
                 std::string detail;
                 for (int i = 0; i < 6; ++i)
                   for (int j = 0; j < 6; ++j) {
                     const MetricParams P{0.2 + 0.3 * i, 0.2 + 0.3 * j};
                     const double f = riemann::sigma32_frontier(P);
                     if (std::abs(f) < ctx.tol()) continue;
                     const auto e = riemann::min_max_sectional(
                         riemann::sigma32_metric(P),
                         riemann::box_grid(Eigen::Vector3d(0.05, 0.05, 0), Eigen::Vector3d(kPi - 0.05, kPi - 0.05, 0), {16, 16, 1}));
                     ++total;
                     if ((e.min < 0) == (f < 0)) ++agree;
                     else detail += " disagreement at " + mu_nu(P);
                   }
                 const double boundary = riemann::sigma32_frontier({1.0, 4.0 / 11});
                 detail = std::to_string(agree) + "/" + std::to_string(total) + " sign agreements; frontier at (1,4/11) " +
                          num(boundary) + detail;
                 return Outcome{agree == total && std::abs(boundary) < 1e-12, static_cast<double>(total - agree), total, detail};
               }});

  c.push_back({"riemann.hemisphere", "orbit space of the second three-dimensional fixed-point set", 7, 1e-3,
               [](const CheckContext& ctx) {
                 Worst w;
                 const Eigen::Vector2d e1(1, 0), e2(0, 1);
                 auto params = ctx.grid(default_grid());
                 params.push_back({1.0, 0.5});
                 double spread = 0;
                 for (const auto& P : params) {
                   const auto M = riemann::hemisphere_metric(P);
                   double lo = 1e300, hi = -1e300;
                   for (int i = 0; i < 8; ++i)
                     for (double psi : {0.4, 2.0}) {
                       const double omega = 0.1 + 1.3 * i / 7;
                       const Point x = riemann::sigma32_polar_point(omega, psi).head(2);
                       const double K = riemann::sectional(M, x, e1, e2);
                       w.add(rel(K, riemann::hemisphere_curvature_closed(omega, P.mu)));
                       lo = std::min(lo, K);
                       hi = std::max(hi, K);
                     }
                   if (P.mu == 1.0) spread = std::max(spread, hi - lo);
                 }
                 w.add(spread);
                 return w.below(ctx.tol(), "curvature spread at mu = 1: " + num(spread));
               }});

  auto berger_check = [](const std::string& name, std::function<riemann::ChartMetric(const MetricParams&)> metric,
                         std::function<std::pair<double, double>(const MetricParams&)> extremes,
                         std::vector<MetricParams> pinned) {
    return [=](const CheckContext& ctx) {
      Worst w;
      auto params = ctx.grid(default_grid());
      params.insert(params.end(), pinned.begin(), pinned.end());
      for (const auto& P : params) {
        const auto M = metric(P);
        const auto [lo, hi] = extremes(P);
        for (const Point& x : {Point(Eigen::Vector3d(0, 0, 0)), Point(Eigen::Vector3d(0.2, -0.3, 0.1))}) {
          const auto ev = riemann::curvature_operator_eigenvalues(M, x);
          w.add(std::abs(ev.minCoeff() - lo) / std::max(1.0, std::abs(lo)));
          w.add(std::abs(ev.maxCoeff() - hi) / std::max(1.0, std::abs(hi)));
        }
      }
      return w.below(ctx.tol(), name);
    };
  };

  c.push_back({"riemann.l3", "Berger metric on the lens space fixed-point set", 7, 1e-3,
               berger_check(
                   "extremes 9mu nu/(4mu+nu) and 4 - 27mu nu/(4mu+nu); constant curvature 1 at (1, 1/2)",
                   riemann::l3_metric,
                   [](const MetricParams& P) { return riemann::berger_extremes(1.0, riemann::l3_hopf_parameter(P)); },
                   {{1.0, 0.5}})});

  c.push_back({"riemann.sigma30", "Berger metric on the unitary fixed-point set", 0, 1e-3,
               berger_check("Hopf parameter mu", riemann::sigma30_metric,
                            [](const MetricParams& P) { return riemann::berger_extremes(1.0, P.mu); }, {})});

  c.push_back({"riemann.p3", "Berger metric on the projective fixed-point set", 0, 1e-3,
               berger_check("scale nu, Hopf parameter 4mu/(4mu+nu)", riemann::p3_metric,
                            [](const MetricParams& P) {
                              return riemann::berger_extremes(P.nu, 4 * P.mu / (4 * P.mu + P.nu));
                            },
                            {})});

  c.push_back({"riemann.l3_frontier", "Berger metric on the lens space fixed-point set", 0, 0.0,
               [](const CheckContext& ctx) {
                 int agree = 0, total = 0;
                 for (int i = 0; i < 8; ++i)
                   for (int j = 0; j < 8; ++j) {
                     const MetricParams P{0.2 + 0.4 * i, 0.2 + 0.4 * j};
                     const double f = 4 * (4 * P.mu + P.nu) - 27 * P.mu * P.nu;
                     if (std::abs(f) < 0.05) continue;
                     const double kmin = riemann::curvature_operator_eigenvalues(riemann::l3_metric(P), Point(Eigen::Vector3d::Zero())).minCoeff();
                     ++total;
                     if ((kmin < ctx.tol()) == (f < 0)) ++agree;
                   }
                 return Outcome{agree == total, static_cast<double>(total - agree), total,
                                std::to_string(agree) + "/" + std::to_string(total) + " sign agreements"};
               }});

  c.push_back({"riemann.sigma5_component", "curvature component along the normal geodesic", 0, 1e-6,
               [](const CheckContext& ctx) {
                 const MetricParams P{0.5, 0.5};
                 const double mid = riemann::sigma5_curvature_component(P, kPi / 4);
                 const double lo = riemann::sigma5_curvature_component(P, kPi / 4 - 0.2);
                 const double hi = riemann::sigma5_curvature_component(P, kPi / 4 + 0.2);
                 const bool ok = std::abs(mid) < ctx.tol() && std::abs(lo) > 1e-3 && std::abs(hi) > 1e-3;
                 return Outcome{ok, std::abs(mid), 3,
                                "values " + num(lo) + ", " + num(mid) + ", " + num(hi) + "; closed magnitude at 0: " +
                                    num(riemann::sigma5_component_closed_at_zero(P))};
               }});

  // ---------------------------------------------------------------- quotients
  c.push_back({"quotients.freeness", "free cyclic actions", 8, 1e-6, [](const CheckContext& ctx) {
                 quotients::FixedPointOracle config;
                 config.samples = ctx.count(200);
                 config.threshold = ctx.tol();
                 int total = 0, agree = 0, trivial = 0;
                 std::string detail;
                 for (int m = 1; m <= 12; ++m)
                   for (int p = -6; p <= 6; ++p)
                     for (int q = -6; q <= 6; ++q) {
                       const quotients::LensActionParams L{m, p, q};
                       const bool predicate = quotients::is_free(L);
                       if (m == 1) {
                         if (!predicate) ++trivial;
                         continue;
                       }
                       const auto oracle = quotients::fixed_point_oracle(L, ctx.rng().operator()(), config);
                       ++total;
                       if (oracle.free == predicate) ++agree;
                       else if (detail.size() < 200)
                         detail += " (" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
                     }
                 detail = std::to_string(agree) + "/" + std::to_string(total) + " agree for m = 2..12; for m = 1 the group is trivial and " +
                          std::to_string(trivial) + " triples are reported non-free by the predicate" + detail;
                 return Outcome{agree == total, static_cast<double>(total - agree), total, detail};
               }});

  c.push_back({"quotients.freeness_symmetry", "free cyclic actions", 0, 0.0, [](const CheckContext&) {
                 int bad = 0, n = 0;
                 for (int m = 1; m <= 12; ++m)
                   for (int p = -6; p <= 6; ++p)
                     for (int q = -6; q <= 6; ++q) {
                       const bool f = quotients::is_free({m, p, q});
                       ++n;
                       if (f != quotients::is_free({m, p, -q})) ++bad;
                       // shifting representatives only changes the nonvanishing conditions
                       const int p2 = p + m, q2 = q + m;
                       const bool nz = p != 0 && 3 * p != q && 3 * p != -q && p2 != 0 && 3 * p2 != q2 && 3 * p2 != -q2;
                       if (nz && f != quotients::is_free({m, p2, q2})) ++bad;
                     }
                 bool ok = bad == 0 && quotients::is_free({7, 1, 0}) && !quotients::is_free({2, 1, 3});
                 return Outcome{ok, static_cast<double>(bad), n, ""};
               }});

  auto phi_battery = [](quotients::PhiVariant variant) {
    return [variant](const CheckContext& ctx) {
      auto rng = ctx.rng();
      Worst w;
      double deck = 0;
      for (int i = 0; i < ctx.count(1000); ++i) {
        const BrieskornPoint P = brieskorn::sample_point(3, rng);
        const auto v = quotients::phi(P, variant);
        w.add(std::abs(v.norm() - 1));
        const quotients::LensActionParams L{1 + static_cast<int>(rng() % 12), static_cast<int>(rng() % 13) - 6,
                                            static_cast<int>(rng() % 13) - 6};
        const int k = static_cast<int>(rng() % 12);
        const auto moved = quotients::phi(brieskorn::act(quotients::generator_power(L, k), P), variant);
        const Eigen::Vector3i wt = quotients::phi_weights(L, variant);
        Eigen::Vector3cd expected;
        for (int a = 0; a < 3; ++a) expected[a] = std::polar(1.0, 2 * kPi * wt[a] * k / L.m) * v[a];
        w.add((moved - expected).cwiseAbs().maxCoeff());
        deck = std::max(deck, (quotients::phi(quotients::deck(P, variant), variant) - v).cwiseAbs().maxCoeff());
      }
      Outcome o = w.below(ctx.tol(), "deck invariance defect " + num(deck));
      o.pass = o.pass && deck == 0.0;
      return o;
    };
  };

  c.push_back({"quotients.phi", "branched covering", 8, 1e-12, phi_battery(quotients::PhiVariant::standard)});
  c.push_back({"quotients.phi_swapped", "branched covering", 8, 1e-12, phi_battery(quotients::PhiVariant::swapped)});

  c.push_back({"quotients.phi_example", "branched covering", 8, 1e-15, [](const CheckContext& ctx) {
                 const auto v = quotients::phi(brieskorn::beta(kPi / 4));
                 const double d = (v - Eigen::Vector3cd(0, 0, brieskorn::Complex(0, 1))).cwiseAbs().maxCoeff();
                 return Outcome{d < ctx.tol(), d, 1, "image of the singular-orbit point"};
               }});

  auto fiber_battery = [](quotients::PhiVariant variant, int generic, int branch, BrieskornPoint branch_point) {
    return [=](const CheckContext& ctx) {
      auto rng = ctx.rng();
      Worst w;
      bool counts = quotients::fiber_count(quotients::phi(branch_point, variant), variant) == branch;
      for (int i = 0; i < ctx.count(200); ++i) {
        const BrieskornPoint P = brieskorn::sample_point(3, rng);
        const auto v = quotients::phi(P, variant);
        const auto f = quotients::fiber(v, variant);
        counts = counts && static_cast<int>(f.size()) == generic;
        double nearest = 1e300;
        for (const auto& Q : f) {
          nearest = std::min(nearest, brieskorn::distance(Q, P));
          w.add(brieskorn::residuals(Q).max());
          w.add((quotients::phi(Q, variant) - v).cwiseAbs().maxCoeff());
          // the deck transformation permutes the fiber
          const auto D = quotients::deck(Q, variant);
          double hit = 1e300;
          for (const auto& R : f) hit = std::min(hit, brieskorn::distance(D, R));
          w.add(hit);
        }
        w.add(nearest);
      }
      bool domain_error = false;
      try {
        quotients::fiber_count(Eigen::Vector3cd(2, 0, 0), variant);
      } catch (const DomainError&) {
        domain_error = true;
      }
      Outcome o = w.below(ctx.tol(), "generic count " + std::to_string(generic) + ", branch count " + std::to_string(branch));
      o.pass = o.pass && counts && domain_error;
      return o;
    };
  };

  c.push_back({"quotients.fiber_counts", "branched covering", 8, 1e-10,
               fiber_battery(quotients::PhiVariant::standard, 3, 1, brieskorn::beta(kPi / 4))});
  {
    // z₁ = 0 is the branch locus of the swapped map
    BrieskornPoint branch;
    branch.z0 = 0.5;
    branch.z = Eigen::Vector3cd(0, 0, brieskorn::Complex(0, 1.0 / 3));
    c.push_back({"quotients.fiber_counts_swapped", "branched covering", 0, 1e-10,
                 fiber_battery(quotients::PhiVariant::swapped, 2, 1, branch)});
  }

  c.push_back({"quotients.rho", "degree-r join map", 0, 1e-13, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 for (int i = 0; i < ctx.count(500); ++i) {
                   Eigen::Vector3cd v;
                   for (int a = 0; a < 3; ++a) v[a] = {numerics::normal(rng), numerics::normal(rng)};
                   v.normalize();
                   const int r = 1 + static_cast<int>(rng() % 5);
                   w.add((quotients::rho(1, v) - v).cwiseAbs().maxCoeff());
                   w.add(std::abs(quotients::rho(r, v).norm() - 1));
                   const double alpha = numerics::uniform(rng, -kPi, kPi);
                   Eigen::Vector3cd u = v;
                   u[0] *= std::polar(1.0, alpha);
                   Eigen::Vector3cd expected = quotients::rho(r, v);
                   expected[0] *= std::polar(1.0, r * alpha);
                   w.add((quotients::rho(r, u) - expected).cwiseAbs().maxCoeff());
                   Eigen::Vector3cd e = v;
                   e[0] = 0;
                   e.normalize();
                   w.add((quotients::rho(r, e) - e).cwiseAbs().maxCoeff());
                 }
                 return w.below(ctx.tol());
               }});

  c.push_back({"quotients.lens_metadata", "lens-space parameters", 0, 0.0, [](const CheckContext&) {
                 const auto a = quotients::lens_metadata({7, 1, 0});
                 const auto b = quotients::lens_metadata({6, 1, 1});
                 const auto d = quotients::lens_metadata({2, 1, 3});
                 const bool ok = a.emitted && a.l5 == std::vector<int>{1, 3, 3} && a.l7 == std::vector<int>{1, 1, 3, 3} &&
                                 !b.emitted && !d.emitted;
                 return Outcome{ok, ok ? 0.0 : 1.0, 3, a.message + "; " + b.message};
               }});

  c.push_back({"quotients.join", "join decomposition of the exotic sphere", 0, 1e-10, [](const CheckContext& ctx) {
                 auto rng = ctx.rng();
                 Worst w;
                 bool s5 = true;
                 for (int i = 0; i < ctx.count(100); ++i) {
                   const MetricParams P{1.0, numerics::uniform(rng, 0.2, 2)};
                   quotients::JoinPoint j{std::polar(1.0, numerics::uniform(rng, -kPi, kPi)), brieskorn::sample_point(3, rng),
                                          numerics::uniform(rng, 0, kPi / 2)};
                   quotients::JoinPoint a = j, b = j;
                   a.t = b.t = 0;
                   b.brieskorn = brieskorn::sample_point(3, rng);
                   w.add(sp2::orbit_residual(quotients::join_to_sigma7(a, P).rep, quotients::join_to_sigma7(b, P).rep));
                   w.add(sp2::orbit_residual(quotients::join_to_sigma7(a, P).rep, sp2::QMatrix::real(sp2::rotation(std::arg(j.circle)))));
                   a = b = j;
                   a.t = b.t = kPi / 2;
                   b.circle = std::polar(1.0, numerics::uniform(rng, -kPi, kPi));
                   const auto pa = quotients::join_to_sigma7(a, P);
                   w.add(sp2::orbit_residual(pa.rep, quotients::join_to_sigma7(b, P).rep));
                   s5 = s5 && sp2::in_sigma5(pa, 1e-9);
                   const double theta = numerics::uniform(rng, -kPi, kPi);
                   const auto q = numerics::unit_quaternion(rng);
                   w.add(sp2::orbit_residual(quotients::join_to_sigma7(quotients::act_on_join(theta, q, j), P).rep,
                                             sp2::bullet_act(sp2::rotation(theta), q, quotients::join_to_sigma7(j, P).rep)));
                 }
                 Outcome o = w.below(ctx.tol(), "endpoint identifications and equivariance at orbit level");
                 o.pass = o.pass && s5;
                 return o;
               }});

  return c;
}

}  // namespace

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = build();
  return checks;
}

bool glob_match(const std::string& pattern, const std::string& id) { return fnmatch(pattern.c_str(), id.c_str(), 0) == 0; }

std::vector<const Check*> select(const std::string& filter) {
  std::vector<const Check*> out;
  for (const auto& c : registry())
    if (filter.empty() || glob_match(filter, c.id)) out.push_back(&c);
  return out;
}

ReportEntry run_check(const Check& check, const SuiteConfig& config) {
  const CheckContext ctx(config, check.id, check.tolerance);
  ReportEntry e{check.id, check.anchor, check.criterion, "fail", 0, 0, ctx.tol(), {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = check.run(ctx);
    e.status = o.pass ? "pass" : "fail";
    e.worst = o.worst;
    e.samples = o.samples;
    e.detail = o.detail;
  } catch (const std::exception& ex) {
    e.status = "fail";
    e.worst = std::numeric_limits<double>::infinity();
    e.detail = std::string("exception: ") + ex.what();
  }
  e.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return e;
}

}  // namespace gmlab::suite
