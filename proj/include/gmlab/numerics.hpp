/**
 * @file    numerics.hpp
 * @brief   Seeded random streams, matrix exponentials, minimizers and difference quotients
 */
#pragma once

#include "gmlab/algebra.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <type_traits>
#include <random>
#include <string_view>

namespace gmlab::numerics {

using Rng = std::mt19937_64;

std::uint64_t fnv1a(std::string_view text);
std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream for a named consumer; filters never perturb other streams.
Rng make_rng(std::uint64_t seed, std::string_view key);

double uniform(Rng& rng, double lo, double hi);
double normal(Rng& rng);
Eigen::VectorXd gaussian(Rng& rng, int n);
Eigen::VectorXd unit_vector(Rng& rng, int n);
algebra::Quaternion unit_quaternion(Rng& rng);

Eigen::MatrixXd expm(const Eigen::MatrixXd& a);
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

struct MinimizeResult {
  Eigen::VectorXd x;
  double value{0};
  int iterations{0};
  bool converged{false};
};

/// Simplex minimization (GSL nmsimplex2).
MinimizeResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                           double step, double size_tol = 1e-9, int max_iter = 4000);

/// Nonlinear least squares min ‖r(x)‖² (Levenberg-Marquardt with forward-difference Jacobian).
MinimizeResult least_squares(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual,
                             const Eigen::VectorXd& x0, int residual_count, int max_evals = 2000);

/// Central difference with one Richardson pass: (4D(h) − D(2h))/3.
template <class F>
auto richardson(const F& f, double x, double h) {
  using R = std::decay_t<decltype(f(x))>;
  const R d1 = (1.0 / (2 * h)) * (f(x + h) - f(x - h));
  const R d2 = (1.0 / (4 * h)) * (f(x + 2 * h) - f(x - 2 * h));
  return R((1.0 / 3.0) * (4.0 * d1 - d2));
}

}  // namespace gmlab::numerics
