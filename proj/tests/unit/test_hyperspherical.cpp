#include "doctest.h"

#include <cmath>
#include <numbers>

#include "multiflag/distributions.hpp"
#include "multiflag/hyperspherical.hpp"
#include "multiflag/linalg.hpp"
#include "support.hpp"

using namespace multiflag;

namespace {

HsPoint random_hs(int m, int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> inner(0.1, std::numbers::pi - 0.1);
  std::uniform_real_distribution<double> last(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> u(-1, 1);
  HsPoint h;
  h.m = m;
  h.k = k;
  h.x0 = Eigen::VectorXd(m + 1);
  for (int r = 0; r <= m; ++r) h.x0[r] = u(rng);
  for (int l = 0; l < k; ++l) {
    Eigen::VectorXd t(m);
    for (int j = 0; j + 1 < m; ++j) t[j] = inner(rng);
    t[m - 1] = last(rng);
    h.thetas.push_back(t);
  }
  return h;
}

}  // namespace

TEST_CASE("phi examples") {
  CHECK(hs_phi(Eigen::Vector2d(0, 0)) == Eigen::Vector3d(0, 0, 1));
  CHECK(hs_phi(Eigen::Vector3d(0, 0, 0)) == Eigen::Vector4d(0, 0, 0, 1));
  const Eigen::VectorXd z = hs_phi(Eigen::Vector2d(std::numbers::pi / 2, std::numbers::pi / 2));
  CHECK((z - Eigen::Vector3d(1, 0, 0)).norm() <= 1e-15);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const HsPoint h = random_hs(3, 1, rng);
    CHECK(std::abs(hs_phi(h.thetas[0]).norm() - 1.0) <= 1e-14);
  }
}

TEST_CASE("dphi against central differences") {
  std::mt19937_64 rng(42);
  const HsPoint h = random_hs(4, 1, rng);
  const Eigen::VectorXd t = h.thetas[0];
  const Eigen::MatrixXd D = hs_dphi(t);
  for (int j = 0; j < 4; ++j) {
    Eigen::VectorXd tp = t, tm = t;
    tp[j] += 1e-6;
    tm[j] -= 1e-6;
    CHECK(((hs_phi(tp) - hs_phi(tm)) / 2e-6 - D.col(j)).norm() <= 1e-8);
    double n = 1.0;
    for (int s = 0; s < j; ++s) n *= std::sin(t[s]);
    CHECK(D.col(j).norm() == doctest::Approx(n).epsilon(1e-13));
  }
}

TEST_CASE("chart Jacobian inverse") {
  std::mt19937_64 rng(43);
  for (int m : {2, 3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXd t = random_hs(m, 1, rng).thetas[0];
      const Eigen::MatrixXd I = chart_jacobian_inverse(t) * chart_jacobian(t);
      CHECK((I - Eigen::MatrixXd::Identity(m + 1, m + 1)).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("forward / inverse round trip") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + trial % 2;
    const HsPoint h = random_hs(m, 3, rng);
    const ArmConfig c = hs_forward(h);
    CHECK_NOTHROW(validate_config(c, 1e-13));
    const ArmConfig back = hs_forward(hs_inverse(c));
    CHECK((back.ambient() - c.ambient()).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("inverse of a straight arm gives constant blocks") {
  const Eigen::VectorXd z = hs_phi(Eigen::Vector2d(1.0, 2.0));
  std::vector<Eigen::VectorXd> pts{Eigen::Vector3d::Zero()};
  for (int i = 0; i < 3; ++i) pts.push_back(pts.back() + z);
  const HsPoint h = hs_inverse(ArmConfig(2, 3, pts));
  for (const auto& t : h.thetas) CHECK((t - Eigen::Vector2d(1.0, 2.0)).norm() <= 1e-12);
}

TEST_CASE("north pole is chart singular") {
  const ArmConfig c(2, 1, std::vector<Eigen::VectorXd>{Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0, 0, 1)});
  try {
    hs_inverse(c);
    FAIL("expected ChartSingular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChartSingular);
  }
}

TEST_CASE("A_i in the chart") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 1000; ++trial) {
    const HsPoint h = random_hs(2 + trial % 2, 4, rng);
    const ArmConfig c = hs_forward(h);
    for (int i = 1; i <= 3; ++i) CHECK(std::abs(hs_A(h, i) - a_fn(c, i)) <= 1e-12);
  }
  HsPoint eq = random_hs(3, 3, rng);
  eq.thetas[1] = eq.thetas[0];
  CHECK(hs_A(eq, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(hs_A(eq, 3), Error);

  // theta^1 = pi/2 then pi/2 apart in the last angle: orthogonal segments.
  HsPoint orth;
  orth.m = 2;
  orth.k = 2;
  orth.x0 = Eigen::Vector3d::Zero();
  orth.thetas = {Eigen::Vector2d(std::numbers::pi / 2, 0.3),
                 Eigen::Vector2d(std::numbers::pi / 2, 0.3 + std::numbers::pi / 2)};
  CHECK(std::abs(hs_A(orth, 1)) <= 1e-15);
}

TEST_CASE("hyperspherical frame spans the top distribution") {
  std::mt19937_64 rng(46);
  for (int m : {2, 3}) {
    for (int k = 1; k <= 4; ++k) {
      const Frame D = frame_Dk(m, k);
      for (int trial = 0; trial < 30; ++trial) {
        const HsPoint h = random_hs(m, k, rng);
        const Eigen::MatrixXd F = hs_frame(h);
        const Eigen::MatrixXd P = hs_pushforward(h, D.evaluate(hs_forward(h).ambient()));
        CHECK(span_distance(F, P) <= 1e-8);
        // X^i_{k-1} are coordinate directions of the last block
        for (int i = 1; i <= m; ++i) {
          CHECK(F.col(i).sum() == 1.0);
          CHECK(F(m + 1 + (k - 1) * m + i - 1, i) == 1.0);
        }
      }
    }
  }
}
