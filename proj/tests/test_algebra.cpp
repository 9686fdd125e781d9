/**
 * @file    test_algebra.cpp
 * @brief   Quaternions, octonions, cross products and the removable-singularity quotients
 */
#include "gmlab/algebra.hpp"
#include "gmlab/numerics.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numbers>

using namespace gmlab;
using algebra::Quaternion;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTight = 1e-13;
}  // namespace

TEST_CASE("quaternion units multiply by the Hamilton rules") {
  using algebra::kI, algebra::kJ, algebra::kK;
  CHECK(algebra::distance(kI * kJ, kK) == 0.0);
  CHECK(algebra::distance(kJ * kK, kI) == 0.0);
  CHECK(algebra::distance(kK * kI, kJ) == 0.0);
  CHECK(algebra::distance(kI * kI, Quaternion(-1)) == 0.0);
  CHECK(algebra::distance(kI * kJ * kK, Quaternion(-1)) == 0.0);
}

TEST_CASE("quaternion product agrees with the reference product") {
  auto rng = numerics::make_rng(7, "test.quaternion");
  for (int i = 0; i < 200; ++i) {
    const Eigen::Vector4d a = numerics::gaussian(rng, 4), b = numerics::gaussian(rng, 4);
    const Eigen::Vector4d got = (Quaternion::fromVector(a) * Quaternion::fromVector(b)).vector();
    CHECK((got - oracle::hamilton(a, b)).norm() < kTight);
    const Quaternion q = Quaternion::fromVector(a);
    CHECK(algebra::distance(q * q.inverse(), Quaternion(1)) < kTight);
  }
}

TEST_CASE("octonion product agrees with the reference doubling and is alternative") {
  auto rng = numerics::make_rng(7, "test.octonion");
  double worst_assoc = 0;
  for (int i = 0; i < 200; ++i) {
    const algebra::Element a = numerics::gaussian(rng, 8), b = numerics::gaussian(rng, 8), c = numerics::gaussian(rng, 8);
    const oracle::V8 ref = oracle::doubling(oracle::V8(a), oracle::V8(b));
    CHECK((Eigen::VectorXd(algebra::mul(a, b)) - Eigen::VectorXd(ref)).norm() < kTight * a.norm() * b.norm());
    // Moufang identity (ab)(ca) = a((bc)a)
    const auto lhs = algebra::mul(algebra::mul(a, b), algebra::mul(c, a));
    const auto rhs = algebra::mul(a, algebra::mul(algebra::mul(b, c), a));
    CHECK((lhs - rhs).norm() < 1e-12 * a.squaredNorm() * b.norm() * c.norm());
    CHECK(std::abs(algebra::mul(a, b).norm() - a.norm() * b.norm()) < kTight * a.norm() * b.norm());
    worst_assoc = std::max(worst_assoc, (algebra::mul(algebra::mul(a, b), c) - algebra::mul(a, algebra::mul(b, c))).norm());
  }
  CHECK(worst_assoc > 1e-2);
}

TEST_CASE("quaternion embedding is a subalgebra of the octonions") {
  auto rng = numerics::make_rng(7, "test.embed");
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector4d a = numerics::gaussian(rng, 4), b = numerics::gaussian(rng, 4);
    algebra::Element A = Eigen::VectorXd::Zero(8), B = Eigen::VectorXd::Zero(8);
    A.head(4) = a;
    B.head(4) = b;
    const algebra::Element P = algebra::mul(A, B);
    CHECK((P.head(4) - oracle::hamilton(a, b)).norm() < kTight);
    CHECK(P.tail(4).norm() == 0.0);
  }
}

TEST_CASE("cross product in dimension 3 matches the determinant formula") {
  auto rng = numerics::make_rng(7, "test.cross3");
  for (int i = 0; i < 100; ++i) {
    const Eigen::Vector3d a = numerics::gaussian(rng, 3), b = numerics::gaussian(rng, 3);
    CHECK((Eigen::Vector3d(algebra::cross(a, b)) - oracle::cross3(a, b)).norm() < kTight);
  }
}

TEST_CASE("seven-dimensional cross product satisfies the Lagrange identity") {
  auto rng = numerics::make_rng(7, "test.cross7");
  for (int i = 0; i < 100; ++i) {
    const algebra::ImVec a = numerics::gaussian(rng, 7), b = numerics::gaussian(rng, 7);
    const algebra::ImVec c = algebra::cross(a, b);
    CHECK(std::abs(c.dot(a)) < 1e-12);
    CHECK(std::abs(c.dot(b)) < 1e-12);
    CHECK(std::abs(c.squaredNorm() - (a.squaredNorm() * b.squaredNorm() - std::pow(a.dot(b), 2))) < 1e-11);
  }
}

TEST_CASE("sphere exponential is a unit-speed great circle") {
  const Eigen::Vector3d p(0.3, -0.4, 1.2);
  const double n = p.norm();
  for (double t : {-2.0, 0.0, 0.5, 3.0}) {
    const algebra::Element e = algebra::sphere_exp(p, t);
    CHECK(e[0] == doctest::Approx(std::cos(t * n)).epsilon(1e-14));
    CHECK((e.tail(3) - p / n * std::sin(t * n)).norm() < kTight);
  }
}

TEST_CASE("trigonometric quotients at their special points") {
  CHECK(algebra::safe_trig_quotients(0).f1 == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(algebra::safe_trig_quotients(0).f2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(algebra::safe_trig_quotients(1).f1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(algebra::safe_trig_quotients(1).f2 == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(algebra::safe_trig_quotients(0.5).f1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  for (double r = 0.01; r < 1; r += 0.07) {
    const auto q = algebra::safe_trig_quotients(r, 3);
    CHECK(q.f1 == doctest::Approx(std::sin(3 * kPi * r / 2) / r).epsilon(1e-12));
    CHECK(q.f2 == doctest::Approx(std::cos(3 * kPi * r / 2) / (1 - r * r)).epsilon(1e-12));
  }
  CHECK(algebra::rational_quotients(0.5).f1 == doctest::Approx(1.6));
  CHECK(algebra::rational_quotients(0.5).f2 == doctest::Approx(0.8));
}

TEST_CASE("rotation matrix of a unit quaternion is the conjugation map") {
  auto rng = numerics::make_rng(7, "test.rotation");
  for (int i = 0; i < 50; ++i) {
    const Quaternion q = numerics::unit_quaternion(rng);
    const Eigen::Vector3d v = numerics::gaussian(rng, 3);
    const Eigen::Vector3d direct = (q * Quaternion::pure(v) * q.conj()).imag();
    CHECK((algebra::rotation_matrix(q) * v - direct).norm() < kTight * 10);
    CHECK(algebra::rotation_matrix(q).determinant() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("mul rejects mismatched lengths") {
  CHECK_THROWS(algebra::mul(algebra::one(4), algebra::one(8)));
}
