#include "multiflag/sampler.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace multiflag {

namespace {

constexpr double kDegenerateDraw = 1e-6;
// Failed draws on one segment before the whole configuration is redrawn.
constexpr int kSegmentRetries = 200;

struct Condition {
  Eigen::VectorXd normal;
  bool required;
};

Eigen::VectorXd gaussian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = g(rng);
  return v;
}

// Monitored conditions for the letter at `level`: the vertical normal z_{l-1}
// and one anchor direction per earlier vertical level.
std::vector<Condition> conditions(const RvtWord& w, int level, const std::vector<Eigen::VectorXd>& pts) {
  const Letter& x = w.at(level);
  std::vector<Condition> out;
  out.push_back({pts[level - 1] - pts[level - 2], x.vertical()});
  for (const auto& a : anchors_before(w, level)) {
    out.push_back({pts[level - 1] - pts[a.level - 2], x.contains(a.index)});
  }
  return out;
}

// Orthonormal basis of the required normals (Gram-Schmidt, dependent ones dropped).
std::vector<Eigen::VectorXd> required_basis(const std::vector<Condition>& conds) {
  std::vector<Eigen::VectorXd> basis;
  for (const auto& c : conds) {
    if (!c.required) continue;
    Eigen::VectorXd v = c.normal;
    for (const auto& b : basis) v -= v.dot(b) * b;
    // Twice is enough for numerical orthogonality.
    for (const auto& b : basis) v -= v.dot(b) * b;
    if (v.norm() > 1e-9 * std::max(1.0, c.normal.norm())) basis.push_back(v / v.norm());
  }
  return basis;
}

bool draw_segment(const std::vector<Condition>& conds, int dim, double margin, std::mt19937_64& rng,
                  Eigen::VectorXd& z, long& draws) {
  const auto basis = required_basis(conds);
  if (static_cast<int>(basis.size()) >= dim) {
    throw Error(ErrorCode::InfeasibleLetter, "required conditions leave no unit direction");
  }
  for (int attempt = 0; attempt < kSegmentRetries; ++attempt) {
    ++draws;
    Eigen::VectorXd v = gaussian(dim, rng);
    for (const auto& b : basis) v -= v.dot(b) * b;
    for (const auto& b : basis) v -= v.dot(b) * b;
    if (v.norm() < kDegenerateDraw) continue;
    v /= v.norm();
    bool ok = true;
    for (const auto& c : conds) {
      if (!c.required && std::abs(v.dot(c.normal)) < margin) {
        ok = false;
        break;
      }
    }
    if (ok) {
      z = v;
      return true;
    }
  }
  return false;
}

Eigen::VectorXd base_point(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd x(m + 1);
  for (int r = 0; r <= m; ++r) x[r] = u(rng);
  return x;
}

}  // namespace

std::vector<ArmConfig> sample_in_class(const SampleSpec& spec) {
  const RvtWord& w = spec.word;
  const int k = w.size();
  const int m = spec.m;
  if (m < 2) throw Error(ErrorCode::DimensionTooSmall, "m must be >= 2");
  if (!is_admissible(w)) {
    throw Error(ErrorCode::InfeasibleLetter, "word " + to_string(w) + " is not admissible");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<ArmConfig> out;
  for (int n = 0; n < spec.count; ++n) {
    long draws = 0;
    const long budget = static_cast<long>(kDrawBudget) * k;
    for (;;) {
      std::vector<Eigen::VectorXd> pts{base_point(m, rng)};
      Eigen::VectorXd z = gaussian(m + 1, rng);
      ++draws;
      pts.push_back(pts[0] + z / z.norm());
      bool ok = true;
      for (int l = 2; l <= k && ok; ++l) {
        ok = draw_segment(conditions(w, l, pts), m + 1, spec.margin, rng, z, draws);
        if (ok) pts.push_back(pts.back() + z);
      }
      if (ok) {
        out.emplace_back(m, k, pts);
        break;
      }
      if (draws > budget) {
        std::ostringstream os;
        os << "word " << to_string(w) << " after " << draws << " draws";
        throw Error(ErrorCode::RejectionBudgetExceeded, os.str());
      }
    }
  }
  return out;
}

std::vector<ArmConfig> sample_cartan(int m, int k, std::uint64_t seed, double margin, int count) {
  SampleSpec spec;
  spec.word = RvtWord(std::vector<Letter>(k, Letter::R()));
  spec.m = m;
  spec.seed = seed;
  spec.margin = margin;
  spec.count = count;
  return sample_in_class(spec);
}

}  // namespace multiflag
