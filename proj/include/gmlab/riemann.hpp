/**
 * @file    riemann.hpp
 * @brief   Finite-difference curvature of coordinate metrics, and the metrics of the fixed-point sets
 */
#pragma once

#include "gmlab/sp2.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace gmlab::riemann {

using Point = Eigen::VectorXd;

struct ChartMetric {
  int dim{0};
  std::function<Eigen::MatrixXd(const Point&)> components;
  /// True where the chart is valid with the finite-difference margin; empty means everywhere.
  std::function<bool(const Point&)> domain;
  std::string name;

  Eigen::MatrixXd operator()(const Point& x) const { return components(x); }
  bool contains(const Point& x) const { return !domain || domain(x); }
};

struct Steps {
  double metric{1e-4};       ///< first derivatives of g
  double christoffel{1e-3};  ///< derivatives of Γ
};

/// Γ^k_{ij} stored as gamma[k](i, j).
using Christoffel = std::vector<Eigen::MatrixXd>;

/// Lowered tensor R_{mijk} = ⟨R(e_j, e_k)e_i, e_m⟩.
struct RiemannTensor {
  int dim{0};
  std::vector<double> data;
  double& operator()(int m, int i, int j, int k) { return data[((m * dim + i) * dim + j) * dim + k]; }
  double operator()(int m, int i, int j, int k) const { return data[((m * dim + i) * dim + j) * dim + k]; }
};

Christoffel christoffel(const ChartMetric& M, const Point& x, const Steps& steps = {});
RiemannTensor riemann_tensor(const ChartMetric& M, const Point& x, const Steps& steps = {});

/// ⟨R(u,v)v,u⟩ / (|u|²|v|² − ⟨u,v⟩²).
double sectional(const ChartMetric& M, const Point& x, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                 const Steps& steps = {});
double scalar(const ChartMetric& M, const Point& x, const Steps& steps = {});
/// Generalized eigenvalues of the curvature operator on Λ², ascending; in dimension 3 these are the sectional extremes.
Eigen::VectorXd curvature_operator_eigenvalues(const ChartMetric& M, const Point& x, const Steps& steps = {});
double bianchi_residual(const ChartMetric& M, const Point& x, const Steps& steps = {});

struct CurvatureReport {
  Point point;
  double k_min{0}, k_max{0}, scalar{0};
  Steps steps;
  int richardson_passes{1};
};

CurvatureReport curvature_report(const ChartMetric& M, const Point& x, const Steps& steps = {});

struct Extremes {
  double min{0}, max{0};
  Point argmin, argmax;
};

/// Extremes of the sectional curvature over grid points, refined by simplex search on each side.
Extremes min_max_sectional(const ChartMetric& M, const std::vector<Point>& grid, bool refine = true);

/// Regular grid over a box, endpoints included.
std::vector<Point> box_grid(const Point& lo, const Point& hi, const std::vector<int>& counts);

/// h_ab = g_ab − g_aφ g_bφ / g_φφ on the remaining coordinates, φ evaluated at 0.
ChartMetric orbit_space_metric(const ChartMetric& M, int killing_index);

// Reference metrics.
ChartMetric euclidean(int dim);
ChartMetric round_sphere2();
ChartMetric round_sphere3();
ChartMetric hyperbolic_half_plane();
ChartMetric product(const ChartMetric& a, const ChartMetric& b);

using sp2::MetricParams;

/// ds² + ¼c(s)dφ² in (s, φ).
ChartMetric sigma2_metric(const MetricParams& P);
struct Sigma2Values {
  double at_zero, at_quarter, at_half;
};
Sigma2Values sigma2_curvature_closed(const MetricParams& P);
/// Richardson limit of the finite-difference curvature at s → 0.
double sigma2_curvature_at_zero(const MetricParams& P);

/// μ(dt² + f(t)(da² + sin²a db²)), f = ν sin²t/(ν + 4μ sin²t).
ChartMetric sigma31_metric(const MetricParams& P);
std::pair<double, double> sigma31_bounds(const MetricParams& P);

ChartMetric sigma32_metric(const MetricParams& P);
ChartMetric sigma32_metric_mu1(double nu);
/// Pullback of the quotient metric through (t,θ,φ) ↦ γ̃ with p = j cos θ, w = i sin θ cos φ + k sin θ sin φ.
ChartMetric sigma32_pullback_metric(const MetricParams& P);
Eigen::Vector3d sigma32_deck(const Eigen::Vector3d& x);
/// Chart point (t, θ, 0) of the polar coordinates (ω, ψ).
Point sigma32_polar_point(double omega, double psi);
/// Literal closed form for the scalar curvature at μ = 1, before its sign correction.
double sigma32_scalar_literal(double omega, double nu);
double sigma32_min_k_formula(const MetricParams& P);
double sigma32_frontier(const MetricParams& P);

ChartMetric hemisphere_metric(const MetricParams& P);
double hemisphere_curvature_closed(double omega, double mu);

/// scale·(σ₁² + σ₂² + ε²σ₃²) in the chart q = (√(1−|x|²), x).
ChartMetric berger_metric(double scale, double eps2);
std::pair<double, double> berger_extremes(double scale, double eps2);
ChartMetric l3_metric(const MetricParams& P);
ChartMetric sigma30_metric(const MetricParams& P);
ChartMetric p3_metric(const MetricParams& P);
double l3_hopf_parameter(const MetricParams& P);

/// Chart (s, θ, a₁, a₂, a₃) ↦ D(θ)·α̃(s)·diag(1, q̄(a)) of the quotient by ★.
ChartMetric sigma5_orbit_chart(const MetricParams& P);
/// ⟨R(∂s, ∂a₁)∂a₂, ∂a₃⟩ at (s, 0, 0, 0, 0).
double sigma5_curvature_component(const MetricParams& P, double s);
double sigma5_component_closed_at_zero(const MetricParams& P);

/// Metric ids understood by the scan command.
std::vector<std::string> scan_metric_ids();
ChartMetric metric_by_id(const std::string& id, const MetricParams& P);
/// Default box for scans of each metric.
std::pair<Point, Point> scan_box(const std::string& id);

}  // namespace gmlab::riemann
