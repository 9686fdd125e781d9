/**
 * @file    test_numerics.cpp
 * @brief   Random streams, matrix exponential, minimizers
 */
#include "gmlab/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace gmlab;

TEST_CASE("streams depend only on seed and key") {
  auto a = numerics::make_rng(42, "alpha"), b = numerics::make_rng(42, "alpha"), c = numerics::make_rng(42, "beta");
  auto d = numerics::make_rng(43, "alpha");
  const auto x = a(), y = b(), z = c(), w = d();
  CHECK(x == y);
  CHECK(x != z);
  CHECK(x != w);
}

TEST_CASE("unit vectors and quaternions are normalized") {
  auto rng = numerics::make_rng(1, "test.units");
  for (int i = 0; i < 100; ++i) {
    CHECK(numerics::unit_vector(rng, 6).norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(numerics::unit_quaternion(rng).norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("matrix exponential of a plane rotation generator") {
  Eigen::MatrixXd J(2, 2);
  J << 0, -1.3, 1.3, 0;
  const Eigen::MatrixXd R = numerics::expm(J);
  CHECK(R(0, 0) == doctest::Approx(std::cos(1.3)).epsilon(1e-14));
  CHECK(R(1, 0) == doctest::Approx(std::sin(1.3)).epsilon(1e-14));
  Eigen::MatrixXcd Z(1, 1);
  Z(0, 0) = {0, 2.0};
  CHECK(std::abs(numerics::expm(Z)(0, 0) - std::polar(1.0, 2.0)) < 1e-14);
}

TEST_CASE("simplex search finds the minimum of a shifted quadratic") {
  const auto r = numerics::nelder_mead(
      [](const Eigen::VectorXd& x) { return std::pow(x[0] - 1, 2) + 3 * std::pow(x[1] + 2, 2); },
      Eigen::Vector2d(0, 0), 0.5, 1e-10);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.x[1] == doctest::Approx(-2.0).epsilon(1e-5));
}

TEST_CASE("least squares solves a consistent nonlinear system") {
  const auto r = numerics::least_squares(
      [](const Eigen::VectorXd& x) {
        Eigen::VectorXd f(3);
        f << x[0] * x[0] + x[1] * x[1] - 1, x[0] - x[1], x[0] * x[1] - 0.5;
        return f;
      },
      Eigen::Vector2d(0.9, 0.3), 3);
  CHECK(r.x[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
  CHECK(r.value < 1e-12);
}

TEST_CASE("Richardson difference is exact on cubics") {
  const double d = numerics::richardson([](double x) { return x * x * x - 2 * x; }, 0.7, 1e-2);
  CHECK(d == doctest::Approx(3 * 0.49 - 2).epsilon(1e-12));
}
