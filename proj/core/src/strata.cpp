#include "multiflag/strata.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "multiflag/distributions.hpp"

namespace multiflag {

std::vector<VBlock> v_blocks(const RvtWord& w) {
  if (w.depth() > 1) throw Error(ErrorCode::DepthExceeded, "stratum equations need a depth-1 word");
  std::vector<VBlock> out;
  for (int l = 1; l <= w.size(); ++l) {
    const Letter& x = w.at(l);
    if (x.kind() == Letter::Kind::V) {
      out.push_back({l, 0});
    } else if (x.kind() == Letter::Kind::T) {
      if (out.empty()) throw Error(ErrorCode::InfeasibleLetter, "T without a preceding V");
      out.back().tangencies++;
    }
  }
  return out;
}

PolyScalar phi_bar(int h, int j, int m, int k) {
  const int n = ambient_dim(m, k);
  PolyScalar s(n);
  for (int r = 0; r <= m; ++r) {
    s += (coord(m, k, h + j + 1, r) - coord(m, k, h + j, r)) * (coord(m, k, h + j, r) - coord(m, k, h - 1, r));
  }
  return s;
}

StratumSystem defining_equations(const RvtWord& w, int m) {
  StratumSystem sys;
  sys.word = w;
  sys.m = m;
  sys.k = w.size();
  sys.blocks = v_blocks(w);
  for (const auto& b : sys.blocks) {
    const int h = b.vertical_level - 1;
    for (int j = 0; j <= b.tangencies; ++j) sys.equations.push_back(phi_bar(h, j, m, sys.k));
  }
  for (int i = 0; i < sys.k; ++i) sys.constraints.push_back(gen_Psi(i, m, sys.k));
  return sys;
}

Eigen::VectorXd residuals(const StratumSystem& sys, const ArmConfig& c) {
  Eigen::VectorXd r(sys.equations.size());
  for (std::size_t i = 0; i < sys.equations.size(); ++i) r[i] = sys.equations[i].evaluate(c.ambient());
  return r;
}

int jacobian_rank(const std::vector<PolyScalar>& eqs, const ArmConfig& c, double rel_tol) {
  if (eqs.empty()) return 0;
  Eigen::MatrixXd J(eqs.size(), c.ambient().size());
  for (std::size_t i = 0; i < eqs.size(); ++i) J.row(i) = eqs[i].gradient_at(c.ambient()).transpose();
  return numerical_rank(J, rel_tol);
}

CodimensionReport verify_codimension(const StratumSystem& sys, const ArmConfig& c, double rel_tol) {
  std::vector<PolyScalar> all = sys.constraints;
  all.insert(all.end(), sys.equations.begin(), sys.equations.end());
  CodimensionReport rep;
  rep.rank = jacobian_rank(all, c, rel_tol);
  rep.expected = sys.k + word_codimension(sys.word);
  if (rep.rank != rep.expected) {
    std::ostringstream os;
    os << to_string(sys.word) << ": Jacobian rank " << rep.rank << ", expected " << rep.expected;
    throw Error(ErrorCode::RankMismatch, os.str());
  }
  return rep;
}

PolyScalar recursion_remainder(int h, int i, int m, int k) {
  const int n = ambient_dim(m, k);
  PolyScalar prod = PolyScalar::constant(n, 1.0);
  for (int t = h; t <= h + i + 1; ++t) prod = prod * gen_A(t, m, k);
  return gen_A(h + i + 1, m, k) * gen_Psi(h + i, m, k) - prod * gen_A_pair(h + i, h - 1, m, k);
}

namespace {

// D f (Y_level) for f depending only on points lo..level: the Z_s terms of
// Y_level with s < lo act trivially.
PolyScalar derive_along_Y(const PolyScalar& f, int lo, int level, int m, int k) {
  PolyScalar out(ambient_dim(m, k));
  PolyScalar c = PolyScalar::constant(ambient_dim(m, k), 1.0);
  for (int s = level - 1; s >= lo; --s) {
    out += c * derive_scalar(f, gen_Z(s, m, k));
    if (s > lo) c = c * gen_A(s, m, k);
  }
  return out;
}

// The symbolic identity only depends on (m, k, h, i); memoised because the
// remainder grows quickly with i.
const PolyScalar& recursion_defect(int h, int i, int m, int k) {
  static std::mutex mu;
  static std::map<std::array<int, 4>, PolyScalar> cache;
  std::lock_guard<std::mutex> lock(mu);
  const std::array<int, 4> key{h, i, m, k};
  auto it = cache.find(key);
  if (it == cache.end()) {
    const PolyScalar lhs = derive_along_Y(phi_bar(h, i, m, k), std::max(h - 1, 0), h + i + 2, m, k) +
                           gen_A(h + i + 1, m, k) * phi_bar(h, i, m, k) - phi_bar(h, i + 1, m, k);
    it = cache.emplace(key, lhs - recursion_remainder(h, i, m, k)).first;
  }
  return it->second;
}

}  // namespace

bool verify_recursion(const RvtWord& w, const ArmConfig& c, double tol) {
  const int m = c.m(), k = c.k();
  if (w.size() != k) throw Error(ErrorCode::LengthMismatch, "word length differs from k");
  for (const auto& b : v_blocks(w)) {
    const int h = b.vertical_level - 1;
    for (int i = 0; h + i + 2 <= k; ++i) {
      const PolyScalar& diff = recursion_defect(h, i, m, k);
      const double at_c = diff.evaluate(c.ambient());
      if (!diff.is_zero() || std::abs(at_c) > tol) {
        std::ostringstream os;
        os << "block at level " << b.vertical_level << ", j = " << i << ": " << diff.term_count()
           << " residual terms, value " << at_c;
        throw Error(ErrorCode::IdentityViolated, os.str());
      }
    }
  }
  return true;
}

}  // namespace multiflag
