#include "multiflag/linalg.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>

namespace multiflag {

namespace {

int rank_from_singular(const Eigen::VectorXd& s, double rel_tol) {
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > rel_tol * s[0]) ++r;
  }
  return r;
}

}  // namespace

int numerical_rank(const Eigen::MatrixXd& M, double rel_tol) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  return rank_from_singular(svd.singularValues(), rel_tol);
}

Eigen::MatrixXd column_space(const Eigen::MatrixXd& M, double rel_tol) {
  if (M.size() == 0) return Eigen::MatrixXd(M.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU);
  const int r = rank_from_singular(svd.singularValues(), rel_tol);
  return svd.matrixU().leftCols(r);
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double rel_tol) {
  const Eigen::Index n = M.cols();
  if (M.rows() == 0) return Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const int r = rank_from_singular(svd.singularValues(), rel_tol);
  return svd.matrixV().rightCols(n - r);
}

std::vector<int> independent_columns(const Eigen::MatrixXd& M, double rel_tol) {
  std::vector<int> out;
  if (M.size() == 0) return out;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  const int r = numerical_rank(M, rel_tol);
  const auto& perm = qr.colsPermutation().indices();
  for (int i = 0; i < r; ++i) out.push_back(perm[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::VectorXd principal_sines(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  if (A.cols() == 0) return Eigen::VectorXd(0);
  const Eigen::MatrixXd C = A.transpose() * B;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(C);
  Eigen::VectorXd cosines = svd.singularValues();
  Eigen::VectorXd s(A.cols());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double c = i < cosines.size() ? std::min(1.0, cosines[i]) : 0.0;
    s[i] = std::sqrt(std::max(0.0, 1.0 - c * c));
  }
  std::sort(s.data(), s.data() + s.size(), std::greater<double>());
  return s;
}

double span_distance(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double rel_tol) {
  const Eigen::MatrixXd QA = column_space(A, rel_tol);
  const Eigen::MatrixXd QB = column_space(B, rel_tol);
  if (QA.cols() != QB.cols()) return 1.0;
  if (QA.cols() == 0) return 0.0;
  // Projection residual is accurate for small angles, unlike sqrt(1 - cos^2).
  return containment_gap(QA, QB, rel_tol);
}

double containment_gap(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double rel_tol) {
  const Eigen::MatrixXd QA = column_space(A, rel_tol);
  if (QA.cols() == 0) return 0.0;
  const Eigen::MatrixXd QB = column_space(B, rel_tol);
  const Eigen::MatrixXd R = QA - QB * (QB.transpose() * QA);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(R);
  return svd.singularValues()[0];
}

}  // namespace multiflag
