#pragma once

#include <Eigen/Core>

#include <random>

#include "multiflag/arm.hpp"

namespace testsupport {

inline Eigen::VectorXd random_unit(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(dim);
  do {
    for (int i = 0; i < dim; ++i) v[i] = g(rng);
  } while (v.norm() < 1e-3);
  return v / v.norm();
}

// Unconditioned random configuration: x_0 in the unit cube, Gaussian directions.
inline multiflag::ArmConfig random_config(int m, int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Eigen::VectorXd> pts;
  Eigen::VectorXd x(m + 1);
  for (int r = 0; r <= m; ++r) x[r] = u(rng);
  pts.push_back(x);
  for (int i = 1; i <= k; ++i) {
    x = x + random_unit(m + 1, rng);
    pts.push_back(x);
  }
  return multiflag::ArmConfig(m, k, pts);
}

// Random unit vector orthogonal to the given unit vector.
inline Eigen::VectorXd random_orthogonal(const Eigen::VectorXd& n, std::mt19937_64& rng) {
  Eigen::VectorXd v;
  do {
    v = random_unit(static_cast<int>(n.size()), rng);
    v -= v.dot(n) * n;
  } while (v.norm() < 1e-3);
  return v / v.norm();
}

inline Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

}  // namespace testsupport
