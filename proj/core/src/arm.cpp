#include "multiflag/arm.hpp"

#include <cmath>
#include <sstream>

namespace multiflag {

ArmConfig::ArmConfig(int m, int k, Eigen::VectorXd coords) : m_(m), k_(k), coords_(std::move(coords)) {
  if (m_ < 0 || coords_.size() % (m_ + 1) != 0) {
    throw Error(ErrorCode::DimensionMismatch, "ambient vector length is not a multiple of m+1");
  }
}

ArmConfig::ArmConfig(int m, int k, const std::vector<Eigen::VectorXd>& points) : m_(m), k_(k) {
  if (m_ < 0) throw Error(ErrorCode::DimensionTooSmall, "negative m");
  coords_.resize(static_cast<Eigen::Index>(points.size()) * (m_ + 1));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != m_ + 1) {
      std::ostringstream os;
      os << "point " << i << " has " << points[i].size() << " coordinates, expected " << m_ + 1;
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    coords_.segment(static_cast<Eigen::Index>(i) * (m_ + 1), m_ + 1) = points[i];
  }
}

std::vector<Eigen::VectorXd> ArmConfig::points() const {
  std::vector<Eigen::VectorXd> out;
  out.reserve(point_count());
  for (int i = 0; i < point_count(); ++i) out.push_back(point(i));
  return out;
}

ArmConfig ArmConfig::truncated(int level) const {
  if (level < 0 || level > k_) throw Error(ErrorCode::IndexOutOfRange, "truncation level");
  return ArmConfig(m_, level, Eigen::VectorXd(coords_.head((level + 1) * block())));
}

void validate_config(const ArmConfig& c, double tol) {
  if (c.m() < 2) throw Error(ErrorCode::DimensionTooSmall, "m must be >= 2");
  if (c.k() < 1) throw Error(ErrorCode::LengthMismatch, "k must be >= 1");
  if (c.point_count() != c.k() + 1) {
    std::ostringstream os;
    os << "expected " << c.k() + 1 << " points, got " << c.point_count();
    throw Error(ErrorCode::LengthMismatch, os.str());
  }
  for (int i = 1; i <= c.k(); ++i) {
    const double residual = c.segment(i).squaredNorm() - 1.0;
    if (!(std::abs(residual) <= tol)) {
      std::ostringstream os;
      os << "link " << i << " residual " << residual;
      throw Error(ErrorCode::BadLinkLength, os.str());
    }
  }
}

ArmConfig make_config(int m, int k, const std::vector<Eigen::VectorXd>& points, double tol) {
  ArmConfig c(m, k, points);
  validate_config(c, tol);
  return c;
}

double a_fn(const ArmConfig& c, int j) {
  if (j < 1 || j > c.k() - 1) throw Error(ErrorCode::IndexOutOfRange, "a_fn index must be in 1..k-1");
  return c.segment(j + 1).dot(c.segment(j));
}

double a_pair(const ArmConfig& c, int i, int j) {
  if (i < 0 || j < 0 || i > c.k() - 1 || j > c.k() - 1) {
    throw Error(ErrorCode::IndexOutOfRange, "a_pair indices must be in 0..k-1");
  }
  return c.segment(i + 1).dot(c.segment(j + 1));
}

bool is_cartan(const ArmConfig& c, double tol) {
  for (int j = 1; j <= c.k() - 1; ++j) {
    if (!(std::abs(a_fn(c, j)) > tol)) return false;
  }
  return true;
}

SegmentRep to_segments(const ArmConfig& c) {
  SegmentRep s;
  s.base = c.point(0);
  for (int i = 1; i <= c.k(); ++i) s.segments.push_back(c.segment(i));
  return s;
}

ArmConfig from_segments(const SegmentRep& s, double tol) {
  const int m = static_cast<int>(s.base.size()) - 1;
  const int k = static_cast<int>(s.segments.size());
  std::vector<Eigen::VectorXd> pts;
  pts.push_back(s.base);
  for (int i = 0; i < k; ++i) {
    const double residual = s.segments[i].squaredNorm() - 1.0;
    if (!(std::abs(residual) <= tol)) {
      std::ostringstream os;
      os << "segment " << i + 1 << " squared-norm residual " << residual;
      throw Error(ErrorCode::NonUnitSegment, os.str());
    }
    pts.push_back(pts.back() + s.segments[i]);
  }
  return ArmConfig(m, k, pts);
}

ArmConfig straight_arm(int m, int k) {
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i <= k; ++i) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m + 1);
    x(0) = i;
    pts.push_back(x);
  }
  return ArmConfig(m, k, pts);
}

}  // namespace multiflag
