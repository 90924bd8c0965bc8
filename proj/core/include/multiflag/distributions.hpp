#pragma once

#include <Eigen/Core>

#include <vector>

#include "multiflag/arm.hpp"
#include "multiflag/linalg.hpp"
#include "multiflag/poly.hpp"

namespace multiflag {

/// Ambient index of x_i^r (r is 0-based here, 1-based in the printed form).
inline int ambient_index(int m, int i, int r) { return i * (m + 1) + r; }
inline int ambient_dim(int m, int k) { return (m + 1) * (k + 1); }

PolyScalar coord(int m, int k, int i, int r);

/// Z_i = sum_r (x_{i+1}^r - x_i^r) d/dx_i^r, i = 0..k-1.
PolyField gen_Z(int i, int m, int k);
/// N_i = sum_r (x_{i+1}^r - x_i^r)(d/dx_{i+1}^r - d/dx_i^r), i = 0..k-1.
PolyField gen_N(int i, int m, int k);
/// A_j = <x_{j+1} - x_j, x_j - x_{j-1}>, j = 1..k-1.
PolyScalar gen_A(int j, int m, int k);
/// A_{i,j} = <x_{i+1} - x_i, x_{j+1} - x_j>, i, j = 0..k-1.
PolyScalar gen_A_pair(int i, int j, int m, int k);
/// Psi_i = |x_{i+1} - x_i|^2 - 1, i = 0..k-1.
PolyScalar gen_Psi(int i, int m, int k);
/// Y_level = sum_{i<level} (prod_{t=i+1}^{level-1} A_t) Z_i on the length-k ambient space.
PolyField gen_Y(int level, int m, int k);
/// V_k = sum_s (x_k^s - x_{k-1}^s) d/dx_k^s.
PolyField gen_V(int m, int k);

/// Generators (x_k^r - x_{k-1}^r) Y_k + d/dx_k^r of the top distribution.
Frame frame_Dk(int m, int k);

/// frame_Dk(m, k) evaluated at c directly from the points, without the
/// polynomial expansion of Y_k.
Eigen::MatrixXd evaluate_Dk(const ArmConfig& c);

/// Fiber-sphere tangent fields d/dx_k^r - (x_k^r - x_{k-1}^r) V_k.
Frame frame_vertical(int m, int k);

struct FlagSpec {
  int m = 0;
  int k = 0;
  std::vector<Frame> frames;  // frames[j] generates D_j, j = 0..k

  const Frame& member(int j) const { return frames.at(j); }
  int expected_rank(int j) const { return j == 0 ? (k + 1) * m + 1 : (k - j + 1) * m + 1; }
};

inline constexpr int kMaxFlagAmbient = 25;

FlagSpec build_flag(int m, int k);

int rank_at(const Frame& f, const Eigen::VectorXd& p, double rel_tol = kDefaultRankTol);

/// Maximal subfamily of f that is pointwise independent at p.
Frame independent_subframe(const Frame& f, const Eigen::VectorXd& p,
                           double rel_tol = kDefaultRankTol);

/// Orthonormal basis of the Cauchy characteristic space at p. The fields of f
/// must be independent at p (RankDeficientFrame otherwise).
Eigen::MatrixXd cauchy_char_at(const Frame& f, const Eigen::VectorXd& p,
                               double rel_tol = kDefaultRankTol);

/// Span of f(p) together with all pairwise brackets [f_a, f_b](p).
Eigen::MatrixXd bracket_closure_at(const Frame& f, const Eigen::VectorXd& p,
                                   double rel_tol = kDefaultRankTol);

/// Checks the jump rule on an EKR sequence; throws RuleViolation.
void check_ekr_sequence(const std::vector<int>& js, int m);

/// Pseudo-normal form with zero constants. Coordinates: t, x^0_1..x^0_m,
/// then x^l_1..x^l_m for each level l.
Frame ekr_normal_form(const std::vector<int>& js, int m);

/// Ranks at p of D_k, D_{k-1} = D_k + [D_k, D_k], ... down to D_0, computed
/// with polynomial brackets and a pointwise basis kept at each step.
std::vector<int> bracket_rank_growth(const Frame& top, const Eigen::VectorXd& p, int steps,
                                     double rel_tol = kDefaultRankTol);

}  // namespace multiflag
