/**
 * @file    diffeo.hpp
 * @brief   Equivariant diffeomorphisms from the unit sphere in Im ⊕ Im onto Brieskorn spheres
 *
 * x and y are combinations of p, w and p×w whose coefficients depend only on |p|², ⟨p,w⟩
 * and |w|². Both the rational and the trigonometric map share this frame structure, which
 * is what the inverse solves against.
 */
#pragma once

#include "gmlab/algebra.hpp"
#include "gmlab/brieskorn.hpp"

#include <Eigen/Dense>

namespace gmlab::diffeo {

using algebra::ImVec;
using brieskorn::BrieskornRealForm;

struct SpherePair {
  ImVec p, w;
  int dim() const { return static_cast<int>(p.size()); }
};

double sphere_residual(const SpherePair& x);
SpherePair random_pair(int n, numerics::Rng& rng);

enum class Profile { rational, trigonometric };

/// x = a_p p + a_w w + a_x p×w, y = b_p p + b_w w + b_x p×w.
struct FrameCoefficients {
  double ap{0}, aw{0}, ax{0};
  double bp{0}, bw{0}, bx{0};
};

FrameCoefficients frame_coefficients(Profile profile, double pp, double pw, double ww);

BrieskornRealForm psi(const SpherePair& x);
BrieskornRealForm psi_trig(const SpherePair& x);
BrieskornRealForm psi_map(const SpherePair& x, Profile profile);

struct InverseResult {
  SpherePair x;
  double determinant{0};
};

/// Lower bound 256/(9(3−2x₀)⁸) for the rational frame determinant.
double determinant_bound(double x0);

/// Recovers (p, w) by solving M·[p; w; p×w] = [x; y; x×y].
InverseResult psi_inverse(const BrieskornRealForm& b, Profile profile = Profile::rational);

BrieskornRealForm partial_injective(const SpherePair& x);

/// Diagonal rotation or G₂ action g·(p, w).
SpherePair rotate(const Eigen::MatrixXd& g, const SpherePair& x);
BrieskornRealForm rotate(const Eigen::MatrixXd& g, const BrieskornRealForm& b);

double distance(const BrieskornRealForm& a, const BrieskornRealForm& b);
double distance(const SpherePair& a, const SpherePair& b);

double equivariance_check(const Eigen::MatrixXd& g, const SpherePair& x, Profile profile = Profile::rational);

/// |w|² − |p|² − 2i⟨p,w⟩, the orbit-space coordinate of (p, w).
brieskorn::Complex disc_coordinate(const SpherePair& x);

}  // namespace gmlab::diffeo
