/**
 * @file    test_sp2.cpp
 * @brief   Sp(2), its left-invariant metrics, the two S³ actions and horizontal geodesics
 */
#include "gmlab/errors.hpp"
#include "gmlab/sp2.hpp"

#include <doctest.h>

#include <numbers>

using namespace gmlab;
using algebra::Quaternion;
using sp2::QMatrix;

namespace {

constexpr double kPi = std::numbers::pi;

Quaternion q_of(const Eigen::Vector4d& v) { return Quaternion::fromVector(v); }

QMatrix random_body(numerics::Rng& rng) {
  QMatrix u{};
  for (const auto& b : sp2::algebra_basis()) u = u + numerics::normal(rng) * b;
  return u;
}

}  // namespace

TEST_CASE("metric inner product matches its defining formula") {
  auto rng = numerics::make_rng(13, "test.metric");
  for (int i = 0; i < 50; ++i) {
    const QMatrix u = random_body(rng), v = random_body(rng);
    const sp2::MetricParams P{numerics::uniform(rng, 0.1, 2), numerics::uniform(rng, 0.1, 2)};
    const double ref = P.mu * u(0, 0).vector().dot(v(0, 0).vector()) + u(1, 0).vector().dot(v(1, 0).vector()) +
                       P.nu * u(1, 1).vector().dot(v(1, 1).vector());
    CHECK(sp2::metric_inner(P, u, v) == doctest::Approx(ref).epsilon(1e-14));
    CHECK(sp2::algebra_residual(u) < 1e-15);
  }
}

TEST_CASE("random elements are symplectic and the actions preserve this") {
  auto rng = numerics::make_rng(13, "test.elements");
  for (int i = 0; i < 50; ++i) {
    const auto A = sp2::random_element(rng);
    CHECK(sp2::unitarity_residual(A) < 1e-13);
    CHECK(sp2::unitarity_residual(sp2::star_act(numerics::unit_quaternion(rng), A)) < 1e-13);
    CHECK(sp2::unitarity_residual(sp2::bullet_act(sp2::rotation(0.3), numerics::unit_quaternion(rng), A)) < 1e-13);
  }
  CHECK_THROWS_AS(sp2::star_act(Quaternion(2.0), QMatrix::identity()), ContractViolation);
}

TEST_CASE("star action is a left action and commutes with the bullet action") {
  auto rng = numerics::make_rng(13, "test.star");
  for (int i = 0; i < 50; ++i) {
    const auto A = sp2::random_element(rng);
    const auto q = numerics::unit_quaternion(rng), r = numerics::unit_quaternion(rng);
    CHECK(sp2::max_abs(sp2::star_act(q, sp2::star_act(r, A)) - sp2::star_act(q * r, A)) < 1e-14);
    CHECK(sp2::max_abs(sp2::star_act(q, sp2::bullet_act(sp2::rotation(1.1), r, A)) -
                       sp2::bullet_act(sp2::rotation(1.1), r, sp2::star_act(q, A))) < 1e-14);
    CHECK(sp2::orbit_equal({A}, {sp2::star_act(q, A)}));
  }
}

TEST_CASE("horizontal lift with w = 0 is diag(e^{tp}, 1)") {
  const Eigen::Vector3d p(0, 0.6, 0.8);
  for (double t : {0.3, 1.7}) {
    const auto A = sp2::horizontal_lift(p, 0.0, t);
    const Quaternion e(std::cos(t), 0, 0.6 * std::sin(t), 0.8 * std::sin(t));
    CHECK(algebra::distance(A(0, 0), e) < 1e-15);
    CHECK(algebra::distance(A(1, 1), Quaternion(1)) < 1e-15);
    CHECK(A(0, 1).norm() + A(1, 0).norm() < 1e-15);
  }
}

TEST_CASE("lift is horizontal for μ = 1 and not for μ = 2") {
  auto rng = numerics::make_rng(13, "test.lift");
  double worst = 0, control = 0;
  for (int i = 0; i < 30; ++i) {
    const Eigen::VectorXd v = numerics::unit_vector(rng, 7);
    const Eigen::Vector3d p = v.head(3);
    const Quaternion w = q_of(v.tail(4));
    const double t = numerics::uniform(rng, 0.2, 3);
    worst = std::max(worst, sp2::lift_is_horizontal(p, w, t, {1.0, 0.7}));
    control = std::max(control, sp2::lift_is_horizontal(p, w, t, {2.0, 0.7}));
  }
  CHECK(worst < 1e-8);
  CHECK(control > 1e-3);
}

TEST_CASE("wiedersehen return") {
  auto rng = numerics::make_rng(13, "test.wiedersehen");
  for (int i = 0; i < 30; ++i) {
    const Eigen::VectorXd v = numerics::unit_vector(rng, 7);
    const auto r = sp2::wiedersehen_check(v.head(3), q_of(v.tail(4)), {1.0, 0.5});
    CHECK(r.ok);
  }
  const Eigen::VectorXd v = numerics::unit_vector(rng, 7);
  const auto A = sp2::horizontal_lift(v.head(3), q_of(v.tail(4)), kPi);
  CHECK(sp2::orbit_equal({A}, {-QMatrix::identity()}));
}

TEST_CASE("normal geodesic solves the Euler-Arnold equation on a parameter grid") {
  for (double mu : {0.3, 1.0, 1.5})
    for (double nu : {0.3, 0.8})
      for (double t : {0.2, 1.0}) CHECK(sp2::euler_arnold_residual(sp2::alpha_curve(), {mu, nu}, t) < 1e-7);
}

TEST_CASE("a non-geodesic curve fails the Euler-Arnold test") {
  const sp2::Curve c = [](double t) {
    return sp2::exp_body(t * QMatrix::diag(algebra::kI, 0.0)) * sp2::exp_body(t * t * QMatrix::make(0.0, -1.0, 1.0, 0.0));
  };
  CHECK(sp2::euler_arnold_residual(c, {0.5, 0.5}, 0.7) > 1e-3);
}

TEST_CASE("metric matrix closed forms") {
  for (double mu : {0.5, 1.2})
    for (double nu : {0.4, 1.0})
      for (double s = 0.0; s <= kPi / 2; s += 0.1)
        CHECK((sp2::metric_matrix(s, {mu, nu}) - sp2::metric_matrix_direct(s, {mu, nu})).cwiseAbs().maxCoeff() < 1e-11);
  const double s = 1e-3;
  CHECK(sp2::metric_matrix(s, {0.5, 0.5})(2, 2) == doctest::Approx(4 * s * s).epsilon(1e-5));
}

TEST_CASE("the exponential of a body is symplectic and one-parameter") {
  auto rng = numerics::make_rng(13, "test.exp");
  const QMatrix u = random_body(rng);
  CHECK(sp2::unitarity_residual(sp2::exp_body(u)) < 1e-13);
  CHECK(sp2::max_abs(sp2::exp_body(0.4 * u) * sp2::exp_body(0.6 * u) - sp2::exp_body(u)) < 1e-13);
}

TEST_CASE("fixed-point sets") {
  CHECK(sp2::in_sigma1({QMatrix::identity()}));
  CHECK(sp2::in_sigma5({sp2::normal_geodesic_alpha(0.4)}));
  CHECK(sp2::in_unitary_image({QMatrix::diag(algebra::kI, 1.0)}));
  CHECK_FALSE(sp2::in_unitary_image({QMatrix::diag(algebra::kJ, algebra::kK)}));
}
