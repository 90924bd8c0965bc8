#pragma once

#include <Eigen/Core>

#include <vector>

#include "multiflag/arm.hpp"

namespace multiflag {

inline constexpr double kChartDelta = 1e-6;

/// Point of the configuration space in hyperspherical coordinates: base point
/// x_0 and one block of m angles per link. thetas[l] parametrises z_{l+1}.
/// Angles are stored 0-based: thetas[l][0] is theta^1.
struct HsPoint {
  int m = 0;
  int k = 0;
  Eigen::VectorXd x0;
  std::vector<Eigen::VectorXd> thetas;

  /// Chart coordinate vector (x_0, theta_0, ..., theta_{k-1}).
  Eigen::VectorXd flat() const;
};

/// Unit vector phi(theta) in R^{m+1}: phi^{m+1} = cos theta^1, ...,
/// phi^1 = sin theta^1 ... sin theta^m.
Eigen::VectorXd hs_phi(const Eigen::VectorXd& theta);

/// Columns d phi / d theta^j, j = 1..m.
Eigen::MatrixXd hs_dphi(const Eigen::VectorXd& theta);

/// Forward chart Jacobian at rho = 1: columns (phi, d phi/d theta^1, ..., d phi/d theta^m).
Eigen::MatrixXd chart_jacobian(const Eigen::VectorXd& theta);

/// Inverse of chart_jacobian: rows phi^T and (d phi/d theta^j)^T / |d phi/d theta^j|^2.
Eigen::MatrixXd chart_jacobian_inverse(const Eigen::VectorXd& theta);

ArmConfig hs_forward(const HsPoint& h);

/// Throws ChartSingular when sin theta^j <= kChartDelta for some j <= m-1.
HsPoint hs_inverse(const ArmConfig& c);

bool chart_regular(const HsPoint& h, double delta = kChartDelta);

/// A_i = <phi_{i-1}, phi_i>, i = 1..k-1.
double hs_A(const HsPoint& h, int i);

/// Columns X^0_{k-1}, X^1_{k-1}, ..., X^m_{k-1} in chart coordinates.
Eigen::MatrixXd hs_frame(const HsPoint& h);

/// Chart components of the ambient tangent vectors v (columns) at hs_forward(h);
/// radial components are dropped.
Eigen::MatrixXd hs_pushforward(const HsPoint& h, const Eigen::MatrixXd& v);

}  // namespace multiflag
