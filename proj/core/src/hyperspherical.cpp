#include "multiflag/hyperspherical.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace multiflag {

namespace {

void check_theta(const HsPoint& h) {
  if (h.m < 1 || h.k < 1 || h.x0.size() != h.m + 1 || static_cast<int>(h.thetas.size()) != h.k) {
    throw Error(ErrorCode::DimensionMismatch, "hyperspherical point shape");
  }
  for (const auto& t : h.thetas) {
    if (t.size() != h.m) throw Error(ErrorCode::DimensionMismatch, "angle block size");
  }
}

void check_regular(const HsPoint& h) {
  for (int l = 0; l < h.k; ++l) {
    for (int j = 0; j + 1 < h.m; ++j) {
      if (std::sin(h.thetas[l][j]) <= kChartDelta) {
        std::ostringstream os;
        os << "block " << l << " angle " << j + 1 << " at sin " << std::sin(h.thetas[l][j]);
        throw Error(ErrorCode::ChartSingular, os.str());
      }
    }
  }
}

}  // namespace

Eigen::VectorXd HsPoint::flat() const {
  Eigen::VectorXd v(m + 1 + k * m);
  v.head(m + 1) = x0;
  for (int l = 0; l < k; ++l) v.segment(m + 1 + l * m, m) = thetas[l];
  return v;
}

Eigen::VectorXd hs_phi(const Eigen::VectorXd& theta) {
  const int m = static_cast<int>(theta.size());
  Eigen::VectorXd phi(m + 1);
  double prod = 1.0;  // prod_{t <= s} sin theta^t
  for (int s = 0; s < m; ++s) {
    phi[m - s] = prod * std::cos(theta[s]);
    prod *= std::sin(theta[s]);
  }
  phi[0] = prod;
  return phi;
}

Eigen::MatrixXd hs_dphi(const Eigen::VectorXd& theta) {
  const int m = static_cast<int>(theta.size());
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(m + 1, m);
  for (int j = 0; j < m; ++j) {
    double prod = 1.0;  // prod_{t <= s} sin theta^t with factor j differentiated
    for (int s = 0; s < m; ++s) {
      if (s == j) {
        D(m - s, j) = -prod * std::sin(theta[s]);
        prod *= std::cos(theta[s]);
      } else {
        D(m - s, j) = s < j ? 0.0 : prod * std::cos(theta[s]);
        prod *= std::sin(theta[s]);
      }
    }
    D(0, j) = prod;
  }
  return D;
}

Eigen::MatrixXd chart_jacobian(const Eigen::VectorXd& theta) {
  const int m = static_cast<int>(theta.size());
  Eigen::MatrixXd J(m + 1, m + 1);
  J.col(0) = hs_phi(theta);
  J.rightCols(m) = hs_dphi(theta);
  return J;
}

Eigen::MatrixXd chart_jacobian_inverse(const Eigen::VectorXd& theta) {
  const int m = static_cast<int>(theta.size());
  const Eigen::MatrixXd D = hs_dphi(theta);
  Eigen::MatrixXd Inv(m + 1, m + 1);
  Inv.row(0) = hs_phi(theta).transpose();
  for (int j = 0; j < m; ++j) {
    // |d phi / d theta^j| = prod_{t < j} sin theta^t
    double n = 1.0;
    for (int t = 0; t < j; ++t) n *= std::sin(theta[t]);
    Inv.row(j + 1) = D.col(j).transpose() / (n * n);
  }
  return Inv;
}

ArmConfig hs_forward(const HsPoint& h) {
  check_theta(h);
  std::vector<Eigen::VectorXd> pts{h.x0};
  for (int l = 0; l < h.k; ++l) pts.push_back(pts.back() + hs_phi(h.thetas[l]));
  return ArmConfig(h.m, h.k, pts);
}

HsPoint hs_inverse(const ArmConfig& c) {
  const int m = c.m();
  HsPoint h;
  h.m = m;
  h.k = c.k();
  h.x0 = c.point(0);
  for (int l = 0; l < c.k(); ++l) {
    const Eigen::VectorXd z = c.segment(l + 1);
    Eigen::VectorXd th(m);
    // theta^s from the tail norm sqrt(z_1^2 + ... + z_{m+1-s}^2) and z^{m+2-s}.
    for (int s = 1; s <= m - 1; ++s) {
      const double tail = z.head(m + 1 - s).norm();
      th[s - 1] = std::atan2(tail, z[m + 1 - s]);
      if (std::sin(th[s - 1]) <= kChartDelta) {
        std::ostringstream os;
        os << "segment " << l + 1 << " angle " << s;
        throw Error(ErrorCode::ChartSingular, os.str());
      }
    }
    double last = std::atan2(z[0], z[1]);
    if (last < 0) last += 2 * std::numbers::pi;
    th[m - 1] = last;
    h.thetas.push_back(th);
  }
  return h;
}

bool chart_regular(const HsPoint& h, double delta) {
  for (const auto& t : h.thetas) {
    for (int j = 0; j + 1 < h.m; ++j) {
      if (std::sin(t[j]) <= delta) return false;
    }
  }
  return true;
}

double hs_A(const HsPoint& h, int i) {
  check_theta(h);
  if (i < 1 || i > h.k - 1) throw Error(ErrorCode::IndexOutOfRange, "A index");
  return hs_phi(h.thetas[i - 1]).dot(hs_phi(h.thetas[i]));
}

Eigen::MatrixXd hs_frame(const HsPoint& h) {
  check_theta(h);
  check_regular(h);
  const int m = h.m, k = h.k;
  const int n = m + 1 + k * m;
  std::vector<Eigen::VectorXd> phi(k);
  for (int l = 0; l < k; ++l) phi[l] = hs_phi(h.thetas[l]);

  // Z_0 on x_0; Z_i on the angles of block i-1 with B_i^j.
  std::vector<Eigen::VectorXd> Z(k, Eigen::VectorXd::Zero(n));
  Z[0].head(m + 1) = phi[0];
  for (int i = 1; i < k; ++i) {
    const Eigen::MatrixXd Inv = chart_jacobian_inverse(h.thetas[i - 1]);
    Z[i].segment(m + 1 + (i - 1) * m, m) = Inv.bottomRows(m) * phi[i];
  }

  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(n, m + 1);
  for (int i = 0; i < k; ++i) {
    double f = 1.0;
    for (int j = i + 1; j <= k - 1; ++j) f *= phi[j - 1].dot(phi[j]);
    F.col(0) += f * Z[i];
  }
  for (int j = 0; j < m; ++j) F(m + 1 + (k - 1) * m + j, j + 1) = 1.0;
  return F;
}

Eigen::MatrixXd hs_pushforward(const HsPoint& h, const Eigen::MatrixXd& v) {
  check_theta(h);
  const int m = h.m, k = h.k, b = m + 1;
  if (v.rows() != (k + 1) * b) throw Error(ErrorCode::DimensionMismatch, "ambient vector length");
  Eigen::MatrixXd out(b + k * m, v.cols());
  out.topRows(b) = v.topRows(b);
  for (int l = 0; l < k; ++l) {
    const Eigen::MatrixXd Inv = chart_jacobian_inverse(h.thetas[l]);
    const Eigen::MatrixXd dz = v.middleRows((l + 1) * b, b) - v.middleRows(l * b, b);
    out.middleRows(b + l * m, m) = Inv.bottomRows(m) * dz;
  }
  return out;
}

}  // namespace multiflag
