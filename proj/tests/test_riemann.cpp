/**
 * @file    test_riemann.cpp
 * @brief   Finite-difference curvature engine and the metrics of the fixed-point sets
 */
#include "gmlab/errors.hpp"
#include "gmlab/riemann.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numbers>

using namespace gmlab;
using riemann::Point;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRel = 1e-3;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-12); }

const Eigen::Vector2d e1(1, 0), e2(0, 1);

}  // namespace

TEST_CASE("reference metrics: sign and normalization of the curvature") {
  CHECK(riemann::sectional(riemann::round_sphere2(), Point(Eigen::Vector2d(1.0, 0.2)), e1, e2) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(riemann::sectional(riemann::hyperbolic_half_plane(), Point(Eigen::Vector2d(0.0, 0.7)), e1, e2) ==
        doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(riemann::scalar(riemann::round_sphere3(), Point(Eigen::Vector3d(1.0, 1.2, 0.3))) == doctest::Approx(6.0).epsilon(1e-6));
  const auto G = riemann::christoffel(riemann::euclidean(2), Point(Eigen::Vector2d(0.3, 0.4)));
  CHECK(G[0].norm() + G[1].norm() < 1e-12);
}

TEST_CASE("outside the chart the engine refuses") {
  CHECK_THROWS_AS(riemann::riemann_tensor(riemann::sigma2_metric({0.5, 0.5}), Point(Eigen::Vector2d(-0.3, 0))), DomainError);
}

TEST_CASE("two-sphere fixed-point set: Gauss curvature of a rotational metric") {
  for (double mu : {0.5, 1.0})
    for (double nu : {0.5, 1.3}) {
      const sp2::MetricParams P{mu, nu};
      const auto G = [&](double s) { return 0.25 * sp2::metric_matrix(s, P)(2, 2); };
      const auto M = riemann::sigma2_metric(P);
      for (double s : {0.3, kPi / 4, 1.2}) {
        const double engine = riemann::sectional(M, Point(Eigen::Vector2d(s, 0)), e1, e2);
        CHECK(rel(engine, oracle::rotational_curvature(G, s)) < 1e-5);
      }
    }
}

TEST_CASE("two-sphere fixed-point set: closed values") {
  const sp2::MetricParams P{0.5, 0.5};
  CHECK(riemann::sigma2_curvature_at_zero(P) == doctest::Approx(14.5).epsilon(kRel));
  CHECK(riemann::sectional(riemann::sigma2_metric(P), Point(Eigen::Vector2d(kPi / 4, 0)), e1, e2) ==
        doctest::Approx(4.0 / 3).epsilon(kRel));
  CHECK(riemann::sectional(riemann::sigma2_metric(P), Point(Eigen::Vector2d(kPi / 2, 0)), e1, e2) ==
        doctest::Approx(-0.8).epsilon(kRel));
  for (double mu : {0.3, 1.5})
    for (double nu : {0.3, 1.5}) {
      const auto c = riemann::sigma2_curvature_closed({mu, nu});
      CHECK(c.at_zero == doctest::Approx(12 / nu - 8 - 3 * mu));
      CHECK(c.at_quarter == doctest::Approx(4 * nu / (1 + mu)));
      CHECK(c.at_half == doctest::Approx(-nu * (1 + 2 * mu) / (mu * (4 * mu + nu))));
    }
}

TEST_CASE("Berger metrics against the classical plane curvatures") {
  for (double eps2 : {0.25, 1.0, 1.6})
    for (double scale : {1.0, 0.5}) {
      const auto [horizontal, vertical] = oracle::berger_planes(scale, eps2);
      const auto ev = riemann::curvature_operator_eigenvalues(riemann::berger_metric(scale, eps2), Point(Eigen::Vector3d::Zero()));
      CHECK(ev.minCoeff() == doctest::Approx(std::min(horizontal, vertical)).epsilon(kRel));
      CHECK(ev.maxCoeff() == doctest::Approx(std::max(horizontal, vertical)).epsilon(kRel));
    }
}

TEST_CASE("lens-space fixed-point set has constant curvature 1 at (1, ½)") {
  const auto ev = riemann::curvature_operator_eigenvalues(riemann::l3_metric({1.0, 0.5}), Point(Eigen::Vector3d(0.1, 0.2, -0.1)));
  CHECK(ev.minCoeff() == doctest::Approx(1.0).epsilon(kRel));
  CHECK(ev.maxCoeff() == doctest::Approx(1.0).epsilon(kRel));
  const sp2::MetricParams P{0.5, 0.5};
  const auto e = riemann::curvature_operator_eigenvalues(riemann::l3_metric(P), Point(Eigen::Vector3d::Zero()));
  CHECK(e.minCoeff() == doctest::Approx(9 * 0.25 / 2.5).epsilon(kRel));
  CHECK(e.maxCoeff() == doctest::Approx(4 - 27 * 0.25 / 2.5).epsilon(kRel));
}

TEST_CASE("second three-dimensional fixed-point set") {
  const sp2::MetricParams P{0.5, 0.5};
  const auto M = riemann::sigma32_metric(P);
  const Point x = Eigen::Vector3d(0.9, 1.4, 0.3);
  CHECK((M(x) - riemann::sigma32_pullback_metric(P)(x)).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(riemann::bianchi_residual(M, x) < 1e-6);
  const auto e = riemann::min_max_sectional(
      M, riemann::box_grid(Eigen::Vector3d(0.05, 0.05, 0), Eigen::Vector3d(kPi - 0.05, kPi - 0.05, 0), {12, 12, 1}));
  CHECK(rel(e.min / e.max, 1.0 / 145) < 2e-2);
  CHECK(riemann::sigma32_frontier({1.0, 4.0 / 11}) == doctest::Approx(0.0));
}

TEST_CASE("scalar curvature at μ = 1 is the literal closed form with the opposite sign") {
  const double nu = 0.7;
  const auto M = riemann::sigma32_metric({1.0, nu});
  for (double omega : {0.2, 0.8, 1.3}) {
    const double fd = riemann::scalar(M, riemann::sigma32_polar_point(omega, 0.5));
    CHECK(rel(fd, -riemann::sigma32_scalar_literal(omega, nu)) < kRel);
  }
}

TEST_CASE("orbit-space hemisphere is round exactly at μ = 1") {
  const auto round = riemann::hemisphere_metric({1.0, 0.5});
  const auto other = riemann::hemisphere_metric({0.5, 0.5});
  double lo = 1e9, hi = -1e9, lo2 = 1e9, hi2 = -1e9;
  for (double omega : {0.2, 0.7, 1.2}) {
    const Point x = riemann::sigma32_polar_point(omega, 0.8).head(2);
    const double k = riemann::sectional(round, x, e1, e2), k2 = riemann::sectional(other, x, e1, e2);
    lo = std::min(lo, k), hi = std::max(hi, k);
    lo2 = std::min(lo2, k2), hi2 = std::max(hi2, k2);
  }
  CHECK(lo == doctest::Approx(1.0).epsilon(kRel));
  CHECK(hi == doctest::Approx(1.0).epsilon(kRel));
  CHECK(hi2 - lo2 > 1e-2);
}

TEST_CASE("curvature component along the five-dimensional set vanishes at π/4 only") {
  const sp2::MetricParams P{0.5, 0.5};
  CHECK(std::abs(riemann::sigma5_curvature_component(P, kPi / 4)) < 1e-6);
  CHECK(std::abs(riemann::sigma5_curvature_component(P, kPi / 4 - 0.2)) > 1e-3);
}

TEST_CASE("box grid and scan metadata") {
  const auto g = riemann::box_grid(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 2), {3, 2});
  REQUIRE(g.size() == 6);
  CHECK(g.front().isApprox(Eigen::Vector2d(0, 0)));
  CHECK(g.back().isApprox(Eigen::Vector2d(1, 2)));
  for (const auto& id : riemann::scan_metric_ids()) {
    const auto [lo, hi] = riemann::scan_box(id);
    CHECK(riemann::metric_by_id(id, {0.5, 0.5}).contains(lo));
    CHECK(riemann::metric_by_id(id, {0.5, 0.5}).contains(hi));
  }
  CHECK_THROWS(riemann::metric_by_id("torus", {0.5, 0.5}));
}
