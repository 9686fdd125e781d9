/**
 * @file    test_actions.cpp
 * @brief   The twisting map Q and the nonlinear circle actions
 */
#include "gmlab/actions.hpp"
#include "gmlab/errors.hpp"

#include <doctest.h>

#include <numbers>

using namespace gmlab;
using diffeo::Profile;
using diffeo::SpherePair;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Q at θ = 0 is the identity and Q is a unit") {
  auto rng = numerics::make_rng(11, "test.q");
  for (int i = 0; i < 200; ++i) {
    const SpherePair x = diffeo::random_pair(3, rng);
    CHECK((actions::q_map(x, 0.0) - algebra::one(4)).norm() < 1e-14);
    CHECK(actions::q_map(x, numerics::uniform(rng, -kPi, kPi)).norm() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("expanded Q agrees with the quotient definition") {
  auto rng = numerics::make_rng(11, "test.qraw");
  for (Profile prof : {Profile::trigonometric, Profile::rational})
    for (int i = 0; i < 200; ++i) {
      const SpherePair x = diffeo::random_pair(3, rng);
      const double t = numerics::uniform(rng, -3, 3);
      CHECK((actions::q_map(x, t, prof) - actions::q_map_raw(x, t, prof)).norm() < 1e-11);
    }
  const SpherePair degenerate{Eigen::Vector3d(1, 0, 0), Eigen::Vector3d::Zero()};
  CHECK_THROWS_AS(actions::q_map_raw(degenerate, 0.3), DomainError);
  CHECK(actions::q_map(degenerate, 0.3).norm() == doctest::Approx(1.0));
}

TEST_CASE("cocycle law for n = 3 and n = 7") {
  auto rng = numerics::make_rng(11, "test.cocycle");
  for (int n : {3, 7})
    for (int i = 0; i < 100; ++i)
      CHECK(actions::cocycle_residual(diffeo::random_pair(n, rng), numerics::uniform(rng, -3, 3), numerics::uniform(rng, -3, 3)) <
            1e-11);
}

TEST_CASE("nonlinear rotation is an action of the circle") {
  auto rng = numerics::make_rng(11, "test.action");
  for (int i = 0; i < 100; ++i) {
    const SpherePair x = diffeo::random_pair(3, rng);
    const double a = numerics::uniform(rng, -3, 3), b = numerics::uniform(rng, -3, 3);
    CHECK(diffeo::distance(actions::nonlinear_rotate(actions::nonlinear_rotate(x, a), b), actions::nonlinear_rotate(x, a + b)) <
          1e-10);
    CHECK(diffeo::distance(actions::nonlinear_rotate(x, 2 * kPi), x) < 1e-10);
    CHECK(diffeo::distance(actions::nonlinear_rotate(actions::nonlinear_rotate(x, kPi), kPi), x) < 1e-10);
  }
}

TEST_CASE("the action is conjugate to the linear Brieskorn rotation") {
  auto rng = numerics::make_rng(11, "test.equiv");
  for (Profile prof : {Profile::trigonometric, Profile::rational})
    for (int i = 0; i < 100; ++i) {
      const SpherePair x = diffeo::random_pair(3, rng);
      CHECK(actions::brieskorn_equivalence_residual(x, numerics::uniform(rng, -kPi, kPi), prof) < 1e-9);
      CHECK(actions::brieskorn_equivalence_residual(x, kPi, prof) < 1e-9);
      CHECK(actions::reflection_residual(x, prof) < 1e-12);
    }
}

TEST_CASE("the action is not linear") {
  const SpherePair x{Eigen::Vector3d(0.6, 0, 0), Eigen::Vector3d(0, 0.8, 0)};
  CHECK(diffeo::distance(actions::nonlinear_rotate(x, 0.9), actions::rotated(x, 0.9)) > 1e-2);
}

TEST_CASE("normal curve maps onto the Brieskorn normal geodesic") {
  for (Profile prof : {Profile::trigonometric, Profile::rational})
    for (double s = 0; s < kPi / 2; s += 0.05) CHECK(actions::normal_curve_residual(s, prof) < 1e-12);
}

TEST_CASE("twisted variants satisfy the cocycle law; the rational profile has none") {
  auto rng = numerics::make_rng(11, "test.twist");
  for (int m : {1, 2})
    for (int i = 0; i < 50; ++i)
      CHECK(actions::cocycle_residual(diffeo::random_pair(3, rng), 0.8, -1.9, Profile::trigonometric, m) < 1e-10);
  CHECK_THROWS_AS(actions::q_map(diffeo::random_pair(3, rng), 0.3, Profile::rational, 1), ContractViolation);
}
