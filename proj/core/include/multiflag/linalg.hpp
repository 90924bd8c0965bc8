#pragma once

#include <Eigen/Core>

#include <vector>

namespace multiflag {

inline constexpr double kDefaultRankTol = 1e-8;

/// Count of singular values above rel_tol * sigma_max.
int numerical_rank(const Eigen::MatrixXd& M, double rel_tol = kDefaultRankTol);

/// Orthonormal basis (columns) of the column space of M.
Eigen::MatrixXd column_space(const Eigen::MatrixXd& M, double rel_tol = kDefaultRankTol);

/// Orthonormal basis of ker M.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double rel_tol = kDefaultRankTol);

/// Indices of a maximal independent subset of columns (column-pivoted QR).
std::vector<int> independent_columns(const Eigen::MatrixXd& M, double rel_tol = kDefaultRankTol);

/// Sines of the principal angles between span(A) and span(B), both given
/// by orthonormal columns of equal count; largest first.
Eigen::VectorXd principal_sines(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

/// Largest principal-angle sine between two spans; 1 if the dimensions differ.
double span_distance(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                     double rel_tol = kDefaultRankTol);

/// How far span(A) sticks out of span(B): ||(I - P_B) Q_A||_2. Zero iff span(A) is inside span(B).
double containment_gap(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                       double rel_tol = kDefaultRankTol);

}  // namespace multiflag
