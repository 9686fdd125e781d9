/**
 * @file    quotients.hpp
 * @brief   Free cyclic actions on the join S¹ ∗ W⁵₃, the branched covering φ and the join map into Σ⁷
 */
#pragma once

#include "gmlab/brieskorn.hpp"
#include "gmlab/sp2.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace gmlab::quotients {

using brieskorn::BrieskornPoint;
using brieskorn::Complex;
using CVec3 = Eigen::Vector3cd;

struct LensActionParams {
  int m{1};
  int p{0};
  int q{0};
};

/// p ≠ 0, 3p ± q ≠ 0 and m coprime to p, 3p − q, 3p + q.
bool is_free(const LensActionParams& params);

/// Power k of the generator as an isometry of W⁵₃: (D(2πpk/m), rotation by 2πqk/m about the first axis).
brieskorn::IsometryElement generator_power(const LensActionParams& params, int k);

struct FixedPointOracle {
  int samples{200};
  double threshold{1e-6};
};

struct OracleResult {
  bool free{true};
  int witness_power{0};   ///< power with a fixed point, 0 if none
  double best_residual{0};
};

/// Searches every nontrivial power for fixed points on the join, by least squares from sampled W⁵₃ points.
OracleResult fixed_point_oracle(const LensActionParams& params, std::uint64_t seed,
                                const FixedPointOracle& config = {});

enum class PhiVariant { standard, swapped };

/// Normalized (√2 z₁, z₂ + iz₃, z₃ + iz₂); the swapped variant uses z₀ in place of z₁.
CVec3 phi(const BrieskornPoint& P, PhiVariant variant = PhiVariant::standard);
/// Weights of the ℤ_m action on the image of φ, in units of 2π/m.
Eigen::Vector3i phi_weights(const LensActionParams& params, PhiVariant variant = PhiVariant::standard);
/// Deck transformation of φ: z₀ ↦ e^{2πi/3}z₀, or z₁ ↦ −z₁ for the swapped variant.
BrieskornPoint deck(const BrieskornPoint& P, PhiVariant variant = PhiVariant::standard);

/// All points of W⁵₃ mapped to the unit vector v.
std::vector<BrieskornPoint> fiber(const CVec3& v, PhiVariant variant = PhiVariant::standard);
int fiber_count(const CVec3& v, PhiVariant variant = PhiVariant::standard);

/// (|v₁|(v₁/|v₁|)^r, v₂, v₃).
CVec3 rho(int r, const CVec3& v);

struct LensMetadata {
  bool emitted{false};
  std::string message;
  std::vector<int> l5;  ///< L⁵_m weights (p, 3p − q, 3p + q)
  std::vector<int> l7;  ///< L⁷_m weights (p, p, 3p − q, 3p + q)
};

/// Lens-space parameters of a free quotient; withheld when 6 divides m or the action is not free.
LensMetadata lens_metadata(const LensActionParams& params);

struct JoinPoint {
  Complex circle{1.0, 0.0};
  BrieskornPoint brieskorn;
  double t{0};
};

/// π(D(arg ζ)·γ̃_{x′}(t)) with x′ the nonlinear rotation by −arg ζ of the trigonometric inverse of b.
sp2::Sigma7Point join_to_sigma7(const JoinPoint& j, const sp2::MetricParams& P);

/// Action of (D(θ), R(q)) on join points.
JoinPoint act_on_join(double theta, const sp2::Quaternion& q, const JoinPoint& j);

}  // namespace gmlab::quotients
