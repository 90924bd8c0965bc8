#include "multiflag/prolongation.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "multiflag/distributions.hpp"
#include "multiflag/error.hpp"
#include "multiflag/linalg.hpp"

namespace multiflag {

namespace {

const Frame& cached_frame_Dk(int m, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Frame> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({m, k});
  if (it == cache.end()) it = cache.emplace(std::make_pair(m, k), frame_Dk(m, k)).first;
  return it->second;
}

}  // namespace

FiberDirection make_direction(const Eigen::VectorXd& coeffs) {
  if (std::abs(coeffs.squaredNorm() - 1.0) > kUnitTol) {
    std::ostringstream os;
    os << "direction has squared norm " << coeffs.squaredNorm();
    throw Error(ErrorCode::NonUnitDirection, os.str());
  }
  return FiberDirection{coeffs};
}

ArmConfig prolong_config(const ArmConfig& c, const FiberDirection& d) {
  if (d.coeffs.size() != c.m() + 1) throw Error(ErrorCode::DimensionMismatch, "direction has wrong length");
  make_direction(d.coeffs);
  const int b = c.m() + 1;
  Eigen::VectorXd x(c.ambient().size() + b);
  x.head(c.ambient().size()) = c.ambient();
  x.tail(b) = c.point(c.k()) + d.coeffs;
  return ArmConfig(c.m(), c.k() + 1, x);
}

ArmConfig drop_last(const ArmConfig& c) {
  if (c.k() < 1) throw Error(ErrorCode::LengthMismatch, "nothing to drop");
  return c.truncated(c.k() - 1);
}

ArmConfig flip_last(const ArmConfig& c) {
  ArmConfig out = c;
  out.set_point(c.k(), 2.0 * c.point(c.k() - 1) - c.point(c.k()));
  return out;
}

PushforwardReport verify_pushforward(const ArmConfig& c, double rel_tol, const FrameEvaluator& target) {
  const int m = c.m(), k = c.k() - 1, b = m + 1;
  if (k < 1) throw Error(ErrorCode::LengthMismatch, "pushforward needs a level >= 2 configuration");
  const ArmConfig base = drop_last(c);
  const Eigen::VectorXd d = c.segment(k + 1);
  const int n = static_cast<int>(c.ambient().size());

  // Psi(q, nu) = (q, x_k + nu): the fiber block is the identity on x_{k+1}
  // and the base block copies x_k into x_{k+1}.
  Eigen::MatrixXd pushed = Eigen::MatrixXd::Zero(n, b);
  Eigen::MatrixXd tangent = null_space(d.transpose());
  pushed.block(n - b, 0, b, m) = tangent.leftCols(m);
  const Eigen::VectorXd nu = cached_frame_Dk(m, k).evaluate(base.ambient()) * d;
  pushed.col(m).head(n - b) = nu;
  pushed.col(m).tail(b) = nu.segment(k * b, b);

  PushforwardReport rep;
  rep.pushed = pushed;
  rep.target = target ? target(c) : evaluate_Dk(c);
  rep.max_sine = span_distance(rep.pushed, rep.target);
  if (!(rep.max_sine <= rel_tol)) {
    std::ostringstream os;
    os << "largest principal sine " << rep.max_sine << " exceeds " << rel_tol;
    throw Error(ErrorCode::SpanMismatch, os.str());
  }
  return rep;
}

}  // namespace multiflag
