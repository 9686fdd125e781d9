/**
 * @file    test_brieskorn.cpp
 * @brief   Brieskorn spheres, the normal geodesic and isotropy groups
 */
#include "gmlab/brieskorn.hpp"
#include "gmlab/errors.hpp"

#include <doctest.h>

#include <numbers>

using namespace gmlab;
using brieskorn::BrieskornPoint;
using brieskorn::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

double cubic(const BrieskornPoint& P) {
  Complex s = 8.0 / 9.0 * P.z0 * P.z0 * P.z0;
  for (int i = 0; i < P.dim(); ++i) s += P.z[i] * P.z[i];
  return std::abs(s);
}

double sphere(const BrieskornPoint& P) {
  double s = 4.0 / 3.0 * std::norm(P.z0);
  for (int i = 0; i < P.dim(); ++i) s += std::norm(P.z[i]);
  return std::abs(s - 4.0 / 9.0);
}

}  // namespace

TEST_CASE("normal geodesic lies on the sphere and has the expected endpoints") {
  for (int i = 0; i <= 40; ++i) {
    const auto P = brieskorn::beta(2 * kPi * i / 40);
    CHECK(cubic(P) < 1e-15);
    CHECK(sphere(P) < 1e-15);
  }
  const auto q = brieskorn::beta(kPi / 4);
  CHECK(std::abs(q.z0) < 1e-16);
  CHECK(std::abs(q.z[1] - std::sqrt(2.0) / 3) < 1e-15);
  CHECK(std::abs(q.z[2] - Complex(0, std::sqrt(2.0) / 3)) < 1e-15);
  const auto o = brieskorn::beta(0);
  CHECK(std::abs(o.z0 + 0.5) < 1e-16);
  CHECK(std::abs(o.z[1] - 1.0 / 3) < 1e-16);
}

TEST_CASE("normal geodesic has unit speed by finite differences") {
  const double h = 1e-5;
  for (double s : {0.1, 0.7, 1.3, 2.9}) {
    const Eigen::VectorXd v = (brieskorn::ambient(brieskorn::beta(s + h)) - brieskorn::ambient(brieskorn::beta(s - h))) / (2 * h);
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK((v - brieskorn::ambient(brieskorn::beta_velocity(s))).norm() < 1e-9);
  }
}

TEST_CASE("normal geodesic passes the geodesic test; a reparametrization fails it") {
  for (double s : {0.2, 0.6, 1.1}) {
    const auto r = brieskorn::beta_geodesic_residual(s);
    CHECK(r.tangential < 1e-5);
    CHECK(r.orbit_perpendicular < 1e-8);
  }
  const auto bad = brieskorn::curve_geodesic_residual([](double u) { return brieskorn::beta(u * u); }, 0.6);
  CHECK(bad.tangential > 1e-2);
}

TEST_CASE("group action preserves the sphere and composes") {
  auto rng = numerics::make_rng(5, "test.act");
  for (int i = 0; i < 100; ++i) {
    const auto P = brieskorn::sample_point(3, rng);
    CHECK(brieskorn::residuals(P).max() < 1e-14);
    auto g = brieskorn::IsometryElement::rotation(numerics::uniform(rng, 0, 2 * kPi), 3);
    g.rot = brieskorn::haar_rotation(rng);
    const auto h = brieskorn::IsometryElement::rotation(0.4, 3);
    CHECK(brieskorn::residuals(brieskorn::act(g, P)).max() < 1e-14);
    CHECK(brieskorn::distance(brieskorn::act(brieskorn::compose(g, h), P), brieskorn::act(g, brieskorn::act(h, P))) < 1e-14);
  }
}

TEST_CASE("rotation acts with weights 2 and 3") {
  const auto P = brieskorn::beta(0.3);
  const double theta = 0.7;
  const auto Q = brieskorn::act(brieskorn::IsometryElement::rotation(theta, 3), P);
  CHECK(std::abs(Q.z0 - std::polar(1.0, 2 * theta) * P.z0) < 1e-15);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(Q.z[i] - std::polar(1.0, 3 * theta) * P.z[i]) < 1e-15);
}

TEST_CASE("principal isotropy fixes the normal geodesic pointwise") {
  for (const auto& g : brieskorn::principal_isotropy())
    for (double s : {0.1, 0.3, 0.5, 1.0}) {
      const auto P = brieskorn::beta_hat(s);
      CHECK(brieskorn::distance(brieskorn::act(g, P), P) < 1e-12);
    }
}

TEST_CASE("the element (−1, diag(1,−1,−1)) fixes β(0.3)") {
  const brieskorn::IsometryElement g{-Eigen::Matrix2d::Identity(), Eigen::Vector3d(1, -1, -1).asDiagonal()};
  const auto P = brieskorn::beta(0.3);
  CHECK(brieskorn::distance(brieskorn::act(g, P), P) < 1e-15);
}

TEST_CASE("isotropy report") {
  auto rng = numerics::make_rng(5, "test.isotropy");
  const auto r = brieskorn::isotropy_verify(0.3, rng, 100);
  CHECK(r.principal < 1e-12);
  CHECK(r.singular_minus < 1e-12);
  CHECK(r.singular_plus < 1e-12);
  CHECK(r.nonmember_min_move > 1e-6);
  CHECK(r.singular_plus_literal > 1e-3);
}

TEST_CASE("G2 derivations are skew and integrate to automorphisms") {
  auto rng = numerics::make_rng(5, "test.g2");
  for (int i = 0; i < 20; ++i) {
    const Eigen::MatrixXd D = brieskorn::g2_derivation(numerics::gaussian(rng, 7), numerics::gaussian(rng, 7));
    CHECK((D + D.transpose()).norm() < 1e-12 * (1 + D.norm()));
    const Eigen::MatrixXd g = brieskorn::g2_sample(rng);
    CHECK((g.transpose() * g - Eigen::MatrixXd::Identity(7, 7)).norm() < 1e-12);
    CHECK(brieskorn::automorphism_residual(g, rng, 10) < 1e-12);
  }
}

TEST_CASE("disc projection and real form round trip") {
  auto rng = numerics::make_rng(5, "test.disc");
  for (int i = 0; i < 50; ++i) {
    const auto P = brieskorn::sample_point(7, rng);
    CHECK(std::abs(brieskorn::disc_projection(P)) <= 1.0 + 1e-12);
    CHECK(brieskorn::distance(brieskorn::from_real(brieskorn::to_real(P)), P) == 0.0);
  }
  BrieskornPoint off = brieskorn::beta(0.2);
  off.z0 += 0.1;
  CHECK_THROWS_AS(brieskorn::disc_projection(off), ContractViolation);
}
