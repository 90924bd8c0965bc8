#pragma once

#include <Eigen/Core>

#include <vector>

#include "multiflag/error.hpp"

namespace multiflag {

inline constexpr double kDefaultValidationTol = 1e-9;

/// Configuration of an articulated arm with k unit links in R^{m+1}.
///
/// Points x_0..x_k are stored block-major in one ambient vector of length
/// (m+1)(k+1); this is also the coordinate order used by the polynomial
/// vector fields. The type is a plain value: validate_config() checks the
/// link constraints.
class ArmConfig {
 public:
  ArmConfig() = default;
  ArmConfig(int m, int k, Eigen::VectorXd coords);
  ArmConfig(int m, int k, const std::vector<Eigen::VectorXd>& points);

  int m() const { return m_; }
  int k() const { return k_; }
  int block() const { return m_ + 1; }
  int point_count() const { return static_cast<int>(coords_.size()) / (m_ + 1); }

  const Eigen::VectorXd& ambient() const { return coords_; }

  Eigen::VectorXd point(int i) const { return coords_.segment(i * block(), block()); }
  /// z_i = x_i - x_{i-1}, i = 1..k.
  Eigen::VectorXd segment(int i) const { return point(i) - point(i - 1); }

  void set_point(int i, const Eigen::VectorXd& x) { coords_.segment(i * block(), block()) = x; }

  std::vector<Eigen::VectorXd> points() const;

  /// Configuration of the first `level` links (x_0..x_level).
  ArmConfig truncated(int level) const;

  bool operator==(const ArmConfig& other) const {
    return m_ == other.m_ && k_ == other.k_ && coords_ == other.coords_;
  }

 private:
  int m_ = 0;
  int k_ = 0;
  Eigen::VectorXd coords_;
};

struct SegmentRep {
  Eigen::VectorXd base;
  std::vector<Eigen::VectorXd> segments;
};

/// Throws DimensionTooSmall, LengthMismatch or BadLinkLength.
void validate_config(const ArmConfig& c, double tol = kDefaultValidationTol);

/// Builds and validates in one step.
ArmConfig make_config(int m, int k, const std::vector<Eigen::VectorXd>& points,
                      double tol = kDefaultValidationTol);

/// <x_{j+1} - x_j, x_j - x_{j-1}> for j = 1..k-1; zero iff level j+1 is vertical.
double a_fn(const ArmConfig& c, int j);

/// <x_{i+1} - x_i, x_{j+1} - x_j> for i, j = 0..k-1.
double a_pair(const ArmConfig& c, int i, int j);

bool is_cartan(const ArmConfig& c, double tol);

SegmentRep to_segments(const ArmConfig& c);
ArmConfig from_segments(const SegmentRep& s, double tol = kDefaultValidationTol);

/// Straight arm along the first axis starting at the origin.
ArmConfig straight_arm(int m, int k);

}  // namespace multiflag
