/**
 * @file    actions.hpp
 * @brief   Nonlinear circle actions on unit spheres in Im ⊕ Im and their Brieskorn models
 */
#pragma once

#include "gmlab/brieskorn.hpp"
#include "gmlab/diffeo.hpp"

namespace gmlab::actions {

using algebra::Element;
using diffeo::Profile;
using diffeo::SpherePair;

/// Linear rotation p_θ = p cos θ − w sin θ, w_θ = p sin θ + w cos θ.
SpherePair rotated(const SpherePair& x, double theta);

/// Expanded analytic form of Q; m selects the (2m+1)-twisted variant of the trigonometric profile.
Element q_map(const SpherePair& x, double theta, Profile profile = Profile::trigonometric, int m = 0);
/// Quotient definition with normalized w and w_θ; undefined where either vanishes.
Element q_map_raw(const SpherePair& x, double theta, Profile profile = Profile::trigonometric, int m = 0);

double cocycle_residual(const SpherePair& x, double theta, double tau, Profile profile = Profile::trigonometric,
                        int m = 0);

SpherePair nonlinear_rotate(const SpherePair& x, double theta, Profile profile = Profile::trigonometric, int m = 0);
/// (p, w) ↦ (p, −w).
SpherePair reflect(const SpherePair& x);

/// Distance between the image of the nonlinear rotation and the linear Brieskorn rotation.
double brieskorn_equivalence_residual(const SpherePair& x, double theta, Profile profile = Profile::trigonometric);
/// Distance between psi(p, −w) and the reflection (z̄₀, z̄) applied to psi(p, w).
double reflection_residual(const SpherePair& x, Profile profile = Profile::trigonometric);

/// s ↦ (j cos s, (−S sin s, 0, C sin s)) with (C, S) = (cos, sin)(π cos s) or their rational analogues.
SpherePair normal_curve(double s, Profile profile = Profile::trigonometric);

/// Fixed element g with psi(normal_curve(s)) = g·β(s), selected once among diagonal sign elements.
brieskorn::IsometryElement identification(Profile profile = Profile::trigonometric);
double normal_curve_residual(double s, Profile profile = Profile::trigonometric);

}  // namespace gmlab::actions
