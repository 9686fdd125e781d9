/**
 * @file    test_diffeo.cpp
 * @brief   The equivariant diffeomorphisms onto the Brieskorn spheres
 */
#include "gmlab/brieskorn.hpp"
#include "gmlab/diffeo.hpp"
#include "gmlab/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gmlab;
using diffeo::Profile;
using diffeo::SpherePair;

TEST_CASE("rational map matches the coefficient-by-coefficient reference") {
  auto rng = numerics::make_rng(3, "test.psi");
  for (int i = 0; i < 500; ++i) {
    const SpherePair x = diffeo::random_pair(3, rng);
    const auto got = diffeo::psi(x);
    const auto ref = oracle::rational_map(x.p, x.w);
    CHECK(got.x0 == doctest::Approx(ref.x0).epsilon(1e-14));
    CHECK(got.y0 == doctest::Approx(ref.y0).epsilon(1e-14));
    CHECK((Eigen::Vector3d(got.x) - ref.x).norm() < 1e-14);
    CHECK((Eigen::Vector3d(got.y) - ref.y).norm() < 1e-14);
    CHECK(oracle::real_equations(ref.x0, ref.y0, ref.x, ref.y).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("both profiles land on the Brieskorn sphere for n = 3 and 7") {
  auto rng = numerics::make_rng(3, "test.psi.land");
  for (Profile prof : {Profile::rational, Profile::trigonometric})
    for (int n : {3, 7})
      for (int i = 0; i < 300; ++i) {
        const auto b = diffeo::psi_map(diffeo::random_pair(n, rng), prof);
        CHECK(oracle::real_equations(b.x0, b.y0, b.x, b.y).cwiseAbs().maxCoeff() < 1e-12);
      }
}

TEST_CASE("known points") {
  // p = 0: x₀ = ½, y₀ = 0 and the image sits on the singular orbit
  const SpherePair north{Eigen::Vector3d::Zero(), Eigen::Vector3d(0, 0, 1)};
  const auto b = diffeo::psi(north);
  CHECK(b.x0 == doctest::Approx(0.5));
  CHECK(b.y0 == doctest::Approx(0.0));
  CHECK(b.x.norm() < 1e-15);
  CHECK(Eigen::Vector3d(b.y).isApprox(Eigen::Vector3d(0, 0, -1.0 / 3)));
  // w = 0: x₀ = −½, x = p/3, y = 0
  const SpherePair south{Eigen::Vector3d(1, 0, 0), Eigen::Vector3d::Zero()};
  const auto s = diffeo::psi(south);
  CHECK(s.x0 == doctest::Approx(-0.5));
  CHECK(s.y.norm() < 1e-15);
  CHECK((Eigen::Vector3d(s.x) - Eigen::Vector3d(1.0 / 3, 0, 0)).norm() < 1e-15);
}

TEST_CASE("inverse recovers the pair away from and on the boundary stratum") {
  auto rng = numerics::make_rng(3, "test.inverse");
  for (Profile prof : {Profile::rational, Profile::trigonometric})
    for (int i = 0; i < 300; ++i) {
      SpherePair x = diffeo::random_pair(3, rng);
      if (i % 3 == 0) {
        x.w = 0.7 * x.p;
        const double s = std::sqrt(x.p.squaredNorm() + x.w.squaredNorm());
        x.p /= s;
        x.w /= s;
      }
      CHECK(diffeo::distance(diffeo::psi_inverse(diffeo::psi_map(x, prof), prof).x, x) < 1e-9);
    }
}

TEST_CASE("frame determinant stays above its lower bound") {
  CHECK(diffeo::determinant_bound(0.5) == doctest::Approx(256.0 / (9 * 256)));
  auto rng = numerics::make_rng(3, "test.det");
  for (int i = 0; i < 2000; ++i) {
    const auto b = diffeo::psi(diffeo::random_pair(3, rng));
    CHECK(diffeo::psi_inverse(b).determinant >= diffeo::determinant_bound(b.x0) - 1e-9);
  }
}

TEST_CASE("orbit-space coordinate is twice z₀") {
  auto rng = numerics::make_rng(3, "test.disc");
  for (int i = 0; i < 100; ++i) {
    const SpherePair x = diffeo::random_pair(3, rng);
    const auto b = diffeo::psi(x);
    const auto d = diffeo::disc_coordinate(x);
    CHECK(d.real() == doctest::Approx(2 * b.x0).epsilon(1e-14));
    CHECK(d.imag() == doctest::Approx(2 * b.y0).epsilon(1e-14));
  }
}

TEST_CASE("SO(3) equivariance for both profiles") {
  auto rng = numerics::make_rng(3, "test.so3");
  for (Profile prof : {Profile::rational, Profile::trigonometric})
    for (int i = 0; i < 200; ++i)
      CHECK(diffeo::equivariance_check(brieskorn::haar_rotation(rng), diffeo::random_pair(3, rng), prof) < 1e-12);
}

TEST_CASE("G2 equivariance; a generic SO(7) element breaks it") {
  auto rng = numerics::make_rng(3, "test.g2");
  for (int i = 0; i < 20; ++i)
    CHECK(diffeo::equivariance_check(brieskorn::g2_sample(rng), diffeo::random_pair(7, rng)) < 1e-9);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(7, 7);
  A(0, 1) = -0.8;
  A(1, 0) = 0.8;
  const Eigen::MatrixXd R = numerics::expm(A);
  double worst = 0;
  for (int i = 0; i < 20; ++i) worst = std::max(worst, diffeo::equivariance_check(R, diffeo::random_pair(7, rng)));
  CHECK(worst > 1e-3);
}

TEST_CASE("preconditions") {
  const SpherePair bad{Eigen::Vector3d(1, 1, 0), Eigen::Vector3d::Zero()};
  CHECK_THROWS_AS(diffeo::psi(bad), ContractViolation);
  const SpherePair mixed{Eigen::Vector3d(1, 0, 0), Eigen::VectorXd::Zero(7)};
  CHECK_THROWS_AS(diffeo::psi(mixed), ContractViolation);
}
