#include "multiflag/distributions.hpp"

#include <algorithm>
#include <sstream>

namespace multiflag {

namespace {

void check_index(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi) {
    std::ostringstream os;
    os << what << " " << v << " outside [" << lo << ", " << hi << "]";
    throw Error(ErrorCode::IndexOutOfRange, os.str());
  }
}

void check_mk(int m, int k) {
  if (m < 1) throw Error(ErrorCode::DimensionTooSmall, "m must be positive");
  if (k < 1) throw Error(ErrorCode::LengthMismatch, "k must be >= 1");
  if (ambient_dim(m, k) > kMaxAmbientDim) {
    throw Error(ErrorCode::SizeLimitExceeded, "ambient dimension above the monomial limit");
  }
}

// x_a^r - x_b^r
PolyScalar diff(int m, int k, int a, int b, int r) { return coord(m, k, a, r) - coord(m, k, b, r); }

PolyScalar dot_diff(int m, int k, int a1, int b1, int a2, int b2) {
  PolyScalar s(ambient_dim(m, k));
  for (int r = 0; r <= m; ++r) s += diff(m, k, a1, b1, r) * diff(m, k, a2, b2, r);
  return s;
}

}  // namespace

PolyScalar coord(int m, int k, int i, int r) {
  return PolyScalar::variable(ambient_dim(m, k), ambient_index(m, i, r));
}

PolyField gen_Z(int i, int m, int k) {
  check_mk(m, k);
  check_index(i, 0, k - 1, "Z index");
  PolyField f(ambient_dim(m, k));
  for (int r = 0; r <= m; ++r) f[ambient_index(m, i, r)] = diff(m, k, i + 1, i, r);
  return f;
}

PolyField gen_N(int i, int m, int k) {
  check_mk(m, k);
  check_index(i, 0, k - 1, "N index");
  PolyField f(ambient_dim(m, k));
  for (int r = 0; r <= m; ++r) {
    const PolyScalar d = diff(m, k, i + 1, i, r);
    f[ambient_index(m, i + 1, r)] = d;
    f[ambient_index(m, i, r)] = -d;
  }
  return f;
}

PolyScalar gen_A(int j, int m, int k) {
  check_mk(m, k);
  check_index(j, 1, k - 1, "A index");
  return dot_diff(m, k, j + 1, j, j, j - 1);
}

PolyScalar gen_A_pair(int i, int j, int m, int k) {
  check_mk(m, k);
  check_index(i, 0, k - 1, "A pair index");
  check_index(j, 0, k - 1, "A pair index");
  return dot_diff(m, k, i + 1, i, j + 1, j);
}

PolyScalar gen_Psi(int i, int m, int k) {
  check_mk(m, k);
  check_index(i, 0, k - 1, "Psi index");
  return dot_diff(m, k, i + 1, i, i + 1, i) - PolyScalar::constant(ambient_dim(m, k), 1.0);
}

PolyField gen_Y(int level, int m, int k) {
  check_mk(m, k);
  check_index(level, 1, k, "Y level");
  const int n = ambient_dim(m, k);
  PolyField Y(n);
  PolyScalar coeff = PolyScalar::constant(n, 1.0);
  for (int i = level - 1; i >= 0; --i) {
    if (i + 1 <= level - 1) coeff = coeff * gen_A(i + 1, m, k);
    Y += coeff * gen_Z(i, m, k);
  }
  return Y;
}

PolyField gen_V(int m, int k) {
  check_mk(m, k);
  PolyField f(ambient_dim(m, k));
  for (int s = 0; s <= m; ++s) f[ambient_index(m, k, s)] = diff(m, k, k, k - 1, s);
  return f;
}

Frame frame_Dk(int m, int k) {
  check_mk(m, k);
  const int n = ambient_dim(m, k);
  const PolyField Y = gen_Y(k, m, k);
  Frame f;
  for (int r = 0; r <= m; ++r) {
    f.append(diff(m, k, k, k - 1, r) * Y + PolyField::coordinate(n, ambient_index(m, k, r)));
  }
  return f;
}

Eigen::MatrixXd evaluate_Dk(const ArmConfig& c) {
  const int m = c.m(), k = c.k(), b = m + 1;
  const int n = ambient_dim(m, k);
  Eigen::VectorXd Y = Eigen::VectorXd::Zero(n);
  double coeff = 1.0;
  for (int i = k - 1; i >= 0; --i) {
    Y.segment(i * b, b) = coeff * c.segment(i + 1);
    if (i > 0) coeff *= c.segment(i + 1).dot(c.segment(i));
  }
  const Eigen::VectorXd zk = c.segment(k);
  Eigen::MatrixXd W(n, b);
  for (int r = 0; r < b; ++r) {
    W.col(r) = zk[r] * Y;
    W(k * b + r, r) += 1.0;
  }
  return W;
}

Frame frame_vertical(int m, int k) {
  check_mk(m, k);
  const int n = ambient_dim(m, k);
  const PolyField V = gen_V(m, k);
  Frame f;
  for (int r = 0; r <= m; ++r) {
    f.append(PolyField::coordinate(n, ambient_index(m, k, r)) - diff(m, k, k, k - 1, r) * V);
  }
  return f;
}

FlagSpec build_flag(int m, int k) {
  check_mk(m, k);
  const int n = ambient_dim(m, k);
  if (n > kMaxFlagAmbient) {
    std::ostringstream os;
    os << "flag construction limited to ambient dimension " << kMaxFlagAmbient << ", got " << n;
    throw Error(ErrorCode::SizeLimitExceeded, os.str());
  }
  // Level-j generators move x_j along the top direction of the length-j arm
  // and carry the tail x_{j+1}..x_k along rigidly.
  std::vector<Frame> level(k + 1);
  for (int j = 0; j <= k; ++j) {
    const PolyField Y = j >= 1 ? gen_Y(j, m, k) : PolyField(n);
    for (int r = 0; r <= m; ++r) {
      PolyField F(n);
      if (j >= 1) F = diff(m, k, j, j - 1, r) * Y;
      for (int i = j; i <= k; ++i) F += PolyField::coordinate(n, ambient_index(m, i, r));
      level[j].append(std::move(F));
    }
  }
  FlagSpec spec;
  spec.m = m;
  spec.k = k;
  spec.frames.resize(k + 1);
  Frame acc;
  for (int j = k; j >= 0; --j) {
    acc.append(level[j]);
    spec.frames[j] = acc;
  }
  return spec;
}

int rank_at(const Frame& f, const Eigen::VectorXd& p, double rel_tol) {
  if (f.size() == 0) return 0;
  if (f.dim() != p.size()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  return numerical_rank(f.evaluate(p), rel_tol);
}

Frame independent_subframe(const Frame& f, const Eigen::VectorXd& p, double rel_tol) {
  Frame out;
  for (int idx : independent_columns(f.evaluate(p), rel_tol)) out.append(f[idx]);
  return out;
}

Eigen::MatrixXd cauchy_char_at(const Frame& f, const Eigen::VectorXd& p, double rel_tol) {
  if (f.dim() != p.size()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  const int d = f.size();
  const int n = f.dim();
  const Eigen::MatrixXd E = f.evaluate(p);
  if (numerical_rank(E, rel_tol) != d) {
    std::ostringstream os;
    os << "frame of " << d << " fields has rank " << numerical_rank(E, rel_tol) << " at the point";
    throw Error(ErrorCode::RankDeficientFrame, os.str());
  }
  std::vector<Eigen::MatrixXd> J(d);
  for (int a = 0; a < d; ++a) J[a] = f[a].jacobian_at(p);
  const Eigen::MatrixXd Q = column_space(E, rel_tol);
  const Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n) - Q * Q.transpose();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n) * d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      const Eigen::VectorXd br = J[b] * E.col(a) - J[a] * E.col(b);
      L.block(static_cast<Eigen::Index>(b) * n, a, n, 1) = P * br;
    }
  }
  const Eigen::MatrixXd K =
      L.norm() <= rel_tol * std::max(1.0, E.norm()) ? Eigen::MatrixXd::Identity(d, d) : null_space(L, rel_tol);
  if (K.cols() == 0) return Eigen::MatrixXd(n, 0);
  return column_space(E * K, rel_tol);
}

Eigen::MatrixXd bracket_closure_at(const Frame& f, const Eigen::VectorXd& p, double rel_tol) {
  const int d = f.size();
  const Eigen::MatrixXd E = f.evaluate(p);
  std::vector<Eigen::MatrixXd> J(d);
  for (int a = 0; a < d; ++a) J[a] = f[a].jacobian_at(p);
  Eigen::MatrixXd M(f.dim(), d + d * (d - 1) / 2);
  M.leftCols(d) = E;
  int col = d;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) M.col(col++) = J[b] * E.col(a) - J[a] * E.col(b);
  }
  return column_space(M, rel_tol);
}

void check_ekr_sequence(const std::vector<int>& js, int m) {
  if (js.empty()) throw Error(ErrorCode::RuleViolation, "empty EKR sequence");
  if (js[0] != 1) throw Error(ErrorCode::RuleViolation, "first entry must be 1");
  int mx = 1;
  for (std::size_t l = 1; l < js.size(); ++l) {
    if (js[l] < 1 || js[l] > mx + 1 || js[l] > m + 1) {
      std::ostringstream os;
      os << "entry " << l + 1 << " = " << js[l] << " breaks the jump rule";
      throw Error(ErrorCode::RuleViolation, os.str());
    }
    mx = std::max(mx, js[l]);
  }
}

Frame ekr_normal_form(const std::vector<int>& js, int m) {
  check_ekr_sequence(js, m);
  const int k = static_cast<int>(js.size());
  const int n = (k + 1) * m + 1;
  if (n > kMaxAmbientDim) throw Error(ErrorCode::SizeLimitExceeded, "EKR ambient dimension");
  auto var = [&](int l, int i) { return PolyScalar::variable(n, 1 + l * m + (i - 1)); };
  std::vector<PolyField> Z;
  Z.push_back(PolyField::coordinate(n, 0));
  for (int i = 1; i <= m; ++i) Z.push_back(PolyField::coordinate(n, 1 + (i - 1)));
  for (int l = 1; l <= k; ++l) {
    const int j = js[l - 1];
    PolyField first = Z[j - 1];
    for (int i = 1; i < j; ++i) first += var(l, i) * Z[i - 1];
    for (int i = j; i <= m; ++i) first += var(l, i) * Z[i];
    std::vector<PolyField> next{std::move(first)};
    for (int i = 1; i <= m; ++i) next.push_back(PolyField::coordinate(n, 1 + l * m + (i - 1)));
    Z = std::move(next);
  }
  return Frame(std::move(Z));
}

std::vector<int> bracket_rank_growth(const Frame& top, const Eigen::VectorXd& p, int steps,
                                     double rel_tol) {
  std::vector<int> ranks;
  Frame cur = independent_subframe(top, p, rel_tol);
  ranks.push_back(cur.size());
  for (int s = 0; s < steps; ++s) {
    Frame grown = cur;
    for (int a = 0; a < cur.size(); ++a) {
      for (int b = a + 1; b < cur.size(); ++b) grown.append(lie_bracket(cur[a], cur[b]));
    }
    cur = independent_subframe(grown, p, rel_tol);
    ranks.push_back(cur.size());
  }
  return ranks;
}

}  // namespace multiflag
