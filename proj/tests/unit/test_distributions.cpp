#include "doctest.h"

#include <cmath>

#include "multiflag/distributions.hpp"
#include "support.hpp"

using namespace multiflag;

TEST_CASE("Z and N support") {
  const int m = 2, k = 3;
  const PolyField Z = gen_Z(1, m, k);
  for (int i = 0; i < ambient_dim(m, k); ++i) {
    const bool in_block = i >= 3 && i < 6;
    CHECK(Z[i].is_zero() != in_block);
  }
  const Eigen::VectorXd v = gen_Z(1, m, k).evaluate(straight_arm(m, k).ambient());
  CHECK(v.segment(3, 3) == Eigen::Vector3d(1, 0, 0));

  const PolyField N = gen_N(1, m, k);
  for (int r = 0; r <= m; ++r) {
    CHECK(N[ambient_index(m, 2, r)] == -1.0 * N[ambient_index(m, 1, r)]);
    CHECK(N[ambient_index(m, 1, r)] == -1.0 * Z[ambient_index(m, 1, r)]);
  }
  CHECK_THROWS_AS(gen_Z(3, m, k), Error);
}

TEST_CASE("Y recursion holds as a polynomial identity") {
  // Y_l on a longer arm is Y_l of the shorter one, so the longest arm covers all k.
  for (auto [m, k] : {std::pair{2, 6}, std::pair{3, 5}}) {
    CHECK(gen_Y(1, m, k) == gen_Z(0, m, k));
    for (int l = 2; l <= k; ++l) {
      const PolyField rec = gen_A(l - 1, m, k) * gen_Y(l - 1, m, k) + gen_Z(l - 1, m, k);
      CHECK(gen_Y(l, m, k) == rec);
    }
  }
  const PolyField y2 = gen_A(1, 2, 3) * gen_Z(0, 2, 3) + gen_Z(1, 2, 3);
  CHECK(gen_Y(2, 2, 3) == y2);
}

TEST_CASE("top distribution: rank and tangency") {
  std::mt19937_64 rng(31);
  const int m = 2, k = 4;
  const Frame D = frame_Dk(m, k);
  REQUIRE(D.size() == m + 1);
  std::vector<Eigen::VectorXd> grads;
  for (int i = 0; i < k; ++i) grads.push_back(Eigen::VectorXd());
  for (int trial = 0; trial < 1000; ++trial) {
    const ArmConfig c = testsupport::random_config(m, k, rng);
    const Eigen::MatrixXd E = D.evaluate(c.ambient());
    CHECK(numerical_rank(E) == m + 1);
    if (trial < 100) {
      for (int i = 0; i < k; ++i) {
        const Eigen::VectorXd g = gen_Psi(i, m, k).gradient_at(c.ambient());
        CHECK((g.transpose() * E).cwiseAbs().maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("k = 1: top distribution is the Z_0 lift plus the fiber tangent") {
  // Z_0 alone stretches the link; Z_0 + V_1 translates x_0 and x_1 together along z_1.
  std::mt19937_64 rng(32);
  const int m = 2;
  const PolyField lift = gen_Z(0, m, 1) + gen_V(m, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const ArmConfig c = testsupport::random_config(m, 1, rng);
    Eigen::MatrixXd expected(6, 4);
    expected << lift.evaluate(c.ambient()), frame_vertical(m, 1).evaluate(c.ambient());
    CHECK(span_distance(frame_Dk(m, 1).evaluate(c.ambient()), expected) <= 1e-10);
  }
}

TEST_CASE("vertical frame") {
  std::mt19937_64 rng(33);
  for (int m : {2, 3}) {
    const int k = 3;
    const Frame L = frame_vertical(m, k);
    const Frame D = frame_Dk(m, k);
    const PolyField V = gen_V(m, k);
    for (int trial = 0; trial < 100; ++trial) {
      const ArmConfig c = testsupport::random_config(m, k, rng);
      const Eigen::MatrixXd E = L.evaluate(c.ambient());
      CHECK(numerical_rank(E) == m);
      CHECK((V.evaluate(c.ambient()).transpose() * E).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(containment_gap(E, D.evaluate(c.ambient())) <= 1e-8);
    }
  }
}

TEST_CASE("rank_at corner cases") {
  const Eigen::VectorXd p = straight_arm(2, 2).ambient();
  const PolyField z = gen_Z(0, 2, 2);
  CHECK(rank_at(Frame({z, z}), p) == 1);
  CHECK(rank_at(Frame({PolyField(9)}), p) == 0);
  CHECK(rank_at(frame_Dk(2, 2), p) == 3);
  CHECK_THROWS_AS(rank_at(frame_Dk(2, 2), Eigen::VectorXd::Zero(4)), Error);
}

TEST_CASE("flag ranks and bracket closure") {
  std::mt19937_64 rng(34);
  const FlagSpec flag = build_flag(2, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const ArmConfig c = testsupport::random_config(2, 3, rng);
    std::vector<int> ranks;
    for (int j = 3; j >= 0; --j) ranks.push_back(rank_at(flag.member(j), c.ambient()));
    CHECK(ranks == std::vector<int>{3, 5, 7, 9});
    for (int j = 3; j >= 1; --j) {
      const Frame sub = independent_subframe(flag.member(j), c.ambient());
      CHECK(span_distance(bracket_closure_at(sub, c.ambient()),
                          flag.member(j - 1).evaluate(c.ambient())) <= 1e-8);
    }
  }
  CHECK_THROWS_AS(build_flag(4, 5), Error);
}

TEST_CASE("flag ranks are unchanged at a vertical point") {
  // x_2 - x_1 orthogonal to x_1 - x_0.
  const ArmConfig c = make_config(2, 3, {testsupport::vec({0, 0, 0}), testsupport::vec({1, 0, 0}),
                                         testsupport::vec({1, 1, 0}), testsupport::vec({1, 2, 0})});
  const FlagSpec flag = build_flag(2, 3);
  for (int j = 0; j <= 3; ++j) CHECK(rank_at(flag.member(j), c.ambient()) == flag.expected_rank(j));
}

TEST_CASE("Cauchy characteristics") {
  std::mt19937_64 rng(35);
  for (int m : {2, 3}) {
    const int k = 3;
    const FlagSpec flag = build_flag(m, k);
    for (int trial = 0; trial < 5; ++trial) {
      const ArmConfig c = testsupport::random_config(m, k, rng);
      for (int j = 1; j <= k; ++j) {
        const Frame sub = independent_subframe(flag.member(j), c.ambient());
        CHECK(cauchy_char_at(sub, c.ambient()).cols() == (k - j) * m);
      }
    }
  }
  const Eigen::VectorXd p = Eigen::VectorXd::Zero(4);
  const Frame coords({PolyField::coordinate(4, 0), PolyField::coordinate(4, 2)});
  CHECK(cauchy_char_at(coords, p).cols() == 2);
  const Frame dup({PolyField::coordinate(4, 0), PolyField::coordinate(4, 0)});
  try {
    cauchy_char_at(dup, p);
    FAIL("expected RankDeficientFrame");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficientFrame);
  }
}

TEST_CASE("sandwich inclusion detects verticality") {
  std::mt19937_64 rng(36);
  const int m = 2, k = 3, l = 3;
  const FlagSpec flag = build_flag(m, k);
  for (int trial = 0; trial < 10; ++trial) {
    ArmConfig c = testsupport::random_config(m, k, rng);
    const Eigen::MatrixXd Lc =
        cauchy_char_at(independent_subframe(flag.member(l - 2), c.ambient()), c.ambient());
    CHECK(containment_gap(flag.member(l).evaluate(c.ambient()), Lc) > 0.01);

    // Make z_3 orthogonal to z_2 so that A_2 = 0.
    const Eigen::VectorXd z3 = testsupport::random_orthogonal(c.segment(2), rng);
    c.set_point(3, c.point(2) + z3);
    REQUIRE(std::abs(a_fn(c, 2)) <= 1e-12);
    const Eigen::MatrixXd Lv =
        cauchy_char_at(independent_subframe(flag.member(l - 2), c.ambient()), c.ambient());
    CHECK(containment_gap(flag.member(l).evaluate(c.ambient()), Lv) <= 1e-8);
  }
}

TEST_CASE("EKR normal forms") {
  for (int m : {2, 3}) {
    const Frame f1 = ekr_normal_form({1}, m);
    const Eigen::VectorXd o1 = Eigen::VectorXd::Zero(2 * m + 1);
    CHECK(bracket_rank_growth(f1, o1, 1) == std::vector<int>{m + 1, 2 * m + 1});

    for (const auto& js : std::vector<std::vector<int>>{{1, 1}, {1, 2}}) {
      const Frame f = ekr_normal_form(js, m);
      const Eigen::VectorXd o = Eigen::VectorXd::Zero(3 * m + 1);
      CHECK(bracket_rank_growth(f, o, 2) == std::vector<int>{m + 1, 2 * m + 1, 3 * m + 1});
    }
  }
  for (const auto& js : std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 1, 3}, {1, 2, 3, 3}}) {
    const int k = static_cast<int>(js.size());
    const Eigen::VectorXd o = Eigen::VectorXd::Zero((k + 1) * 3 + 1);
    std::vector<int> expect;
    for (int j = k; j >= 0; --j) expect.push_back(j == 0 ? (k + 1) * 3 + 1 : (k - j + 1) * 3 + 1);
    CHECK(bracket_rank_growth(ekr_normal_form(js, 3), o, k) == expect);
  }
  try {
    ekr_normal_form({1, 3}, 2);
    FAIL("expected RuleViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RuleViolation);
  }
  CHECK_THROWS_AS(ekr_normal_form({2}, 2), Error);
  CHECK_THROWS_AS(ekr_normal_form({1, 2, 3, 4}, 2), Error);
}
