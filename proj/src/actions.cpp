#include "gmlab/actions.hpp"

#include "gmlab/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace gmlab::actions {

using algebra::conj;
using algebra::embed;
using algebra::mul;

namespace {

algebra::TrigQuotients quotients(double r, Profile profile, int m) {
  if (profile == Profile::rational) {
    require(m == 0, "twisted variants exist only for the trigonometric profile");
    return algebra::rational_quotients(r);
  }
  return algebra::safe_trig_quotients(std::min(r, 1.0), 2 * m + 1);
}

// cos(kπr/2) − p̂ sin(kπr/2) and its rational analogue ((1 − p)/|1 − p|)².
Element half_turn(const algebra::ImVec& p, double sign, Profile profile, int m) {
  const double r = p.norm();
  const auto [f1, f2] = quotients(r, profile, m);
  Element e = sign * f1 * embed(p);
  e[0] = (1 - r * r) * f2;
  return e;
}

brieskorn::BrieskornPoint as_point(const brieskorn::BrieskornRealForm& b) { return brieskorn::from_real(b); }

}  // namespace

SpherePair rotated(const SpherePair& x, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {x.p * c - x.w * s, x.p * s + x.w * c};
}

Element q_map(const SpherePair& x, double theta, Profile profile, int m) {
  const SpherePair xt = rotated(x, theta);
  const double a = std::min(x.p.norm(), 1.0), b = std::min(xt.p.norm(), 1.0);
  const auto qa = quotients(a, profile, m), qb = quotients(b, profile, m);
  const Element P = embed(x.p), W = embed(x.w), Pt = embed(xt.p), Wt = embed(xt.w);
  return mul(mul(W, Wt, conj(W)), conj(Wt)) * (qa.f2 * qb.f2) - mul(Pt, P) * (qa.f1 * qb.f1) +
         mul(W, Pt, conj(W)) * (qa.f2 * qb.f1) - mul(Wt, P, conj(Wt)) * (qa.f1 * qb.f2);
}

Element q_map_raw(const SpherePair& x, double theta, Profile profile, int m) {
  const SpherePair xt = rotated(x, theta);
  const double wn = x.w.norm(), wtn = xt.w.norm();
  if (wn < 1e-12 || wtn < 1e-12) throw DomainError("q_map_raw: w and w_θ must be nonzero");
  const Element W = embed(x.w / wn), Wt = embed(xt.w / wtn);
  const Element e1 = half_turn(x.p, -1, profile, m), e2 = half_turn(xt.p, 1, profile, m);
  return mul(mul(mul(mul(mul(W, e1), Wt), conj(W)), e2), conj(Wt));
}

double cocycle_residual(const SpherePair& x, double theta, double tau, Profile profile, int m) {
  const Element lhs = mul(q_map(x, theta, profile, m), q_map(rotated(x, theta), tau, profile, m));
  return (lhs - q_map(x, theta + tau, profile, m)).cwiseAbs().maxCoeff();
}

SpherePair nonlinear_rotate(const SpherePair& x, double theta, Profile profile, int m) {
  const Element Q = q_map(x, theta, profile, m);
  const SpherePair xt = rotated(x, theta);
  return {algebra::imaginary(mul(Q, embed(xt.p), conj(Q))), algebra::imaginary(mul(Q, embed(xt.w), conj(Q)))};
}

SpherePair reflect(const SpherePair& x) { return {x.p, -x.w}; }

double brieskorn_equivalence_residual(const SpherePair& x, double theta, Profile profile) {
  const auto moved = as_point(diffeo::psi_map(nonlinear_rotate(x, theta, profile), profile));
  const auto base = as_point(diffeo::psi_map(x, profile));
  const auto expected = brieskorn::act(brieskorn::IsometryElement::rotation(theta, x.dim()), base);
  return brieskorn::distance(moved, expected);
}

double reflection_residual(const SpherePair& x, Profile profile) {
  brieskorn::IsometryElement r = brieskorn::IsometryElement::identity(x.dim());
  r.o2(1, 1) = -1;
  const auto lhs = as_point(diffeo::psi_map(reflect(x), profile));
  return brieskorn::distance(lhs, brieskorn::act(r, as_point(diffeo::psi_map(x, profile))));
}

SpherePair normal_curve(double s, Profile profile) {
  const double r = std::cos(s), sn = std::sin(s);
  double C, S;
  if (profile == Profile::trigonometric) {
    C = std::cos(std::numbers::pi * r);
    S = std::sin(std::numbers::pi * r);
  } else {
    const double d = (1 + r * r) * (1 + r * r);
    C = ((1 - r * r) * (1 - r * r) - 4 * r * r) / d;
    S = 4 * r * (1 - r * r) / d;
  }
  SpherePair x;
  x.p = Eigen::Vector3d(0, r, 0);
  x.w = Eigen::Vector3d(-S * sn, 0, C * sn);
  return x;
}

brieskorn::IsometryElement identification(Profile profile) {
  constexpr double s0 = 0.3;
  const auto target = as_point(diffeo::psi_map(normal_curve(s0, profile), profile));
  const std::array<Eigen::Vector3d, 4> signs{Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(-1, -1, 1),
                                              Eigen::Vector3d(-1, 1, -1), Eigen::Vector3d(1, -1, -1)};
  const std::array<Eigen::Vector2d, 4> planar{Eigen::Vector2d(1, 1), Eigen::Vector2d(-1, -1), Eigen::Vector2d(1, -1),
                                               Eigen::Vector2d(-1, 1)};
  brieskorn::IsometryElement best = brieskorn::IsometryElement::identity(3);
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& o : planar)
    for (const auto& d : signs) {
      brieskorn::IsometryElement g{o.asDiagonal(), Eigen::Matrix3d(d.asDiagonal())};
      const double dist = brieskorn::distance(brieskorn::act(g, brieskorn::beta(s0)), target);
      if (dist < best_d) {
        best_d = dist;
        best = g;
      }
    }
  return best;
}

double normal_curve_residual(double s, Profile profile) {
  static const brieskorn::IsometryElement g_trig = identification(Profile::trigonometric);
  static const brieskorn::IsometryElement g_rat = identification(Profile::rational);
  const auto& g = profile == Profile::trigonometric ? g_trig : g_rat;
  const auto image = as_point(diffeo::psi_map(normal_curve(s, profile), profile));
  return brieskorn::distance(image, brieskorn::act(g, brieskorn::beta(s)));
}

}  // namespace gmlab::actions
