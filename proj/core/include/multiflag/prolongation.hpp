#pragma once

#include <Eigen/Core>

#include <functional>

#include "multiflag/arm.hpp"

namespace multiflag {

inline constexpr double kUnitTol = 1e-12;
inline constexpr double kPushforwardTol = 1e-6;

/// Coefficients of a unit vector of D_k in its global orthonormal frame.
struct FiberDirection {
  Eigen::VectorXd coeffs;
};

/// Throws NonUnitDirection unless |coeffs| = 1 within kUnitTol.
FiberDirection make_direction(const Eigen::VectorXd& coeffs);

/// Appends x_{k+1} = x_k + coeffs. Throws NonUnitDirection, DimensionMismatch.
ArmConfig prolong_config(const ArmConfig& c, const FiberDirection& d);

/// Drops x_k.
ArmConfig drop_last(const ArmConfig& c);

/// x_k -> 2 x_{k-1} - x_k.
ArmConfig flip_last(const ArmConfig& c);

/// Evaluates the generators of D_{k+1} at a level-(k+1) configuration.
using FrameEvaluator = std::function<Eigen::MatrixXd(const ArmConfig&)>;

struct PushforwardReport {
  double max_sine = 0.0;
  Eigen::MatrixXd pushed;  // image of the first prolongation of D_k
  Eigen::MatrixXd target;  // D_{k+1} generators
};

/// Pushes the first prolongation of D_k at the preimage (drop_last(c),
/// x_{k+1} - x_k) through the derivative of prolong_config and compares it
/// with D_{k+1} at c. Throws SpanMismatch when the largest principal sine
/// exceeds rel_tol. An empty target uses evaluate_Dk.
PushforwardReport verify_pushforward(const ArmConfig& c, double rel_tol = kPushforwardTol,
                                     const FrameEvaluator& target = {});

}  // namespace multiflag
