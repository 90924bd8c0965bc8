#include "multiflag/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace multiflag {

namespace {

double anchor_residual(const ArmConfig& c, int level, int vertical_level) {
  return c.segment(level).dot(c.point(level - 1) - c.point(vertical_level - 2));
}

// Condition residuals at `level` given the letters chosen so far.
LevelReport measure(const ArmConfig& c, const RvtWord& prefix, int level) {
  LevelReport r;
  r.level = level;
  r.vertical_residual = a_fn(c, level - 1);
  const auto active = chain_active(prefix, level);
  for (const auto& a : anchors_before(prefix, level)) {
    const bool chain = std::any_of(active.begin(), active.end(), [&](const Anchor& x) { return x.index == a.index; });
    r.anchors.push_back({a.index, a.level, chain, anchor_residual(c, level, a.level)});
  }
  return r;
}

LevelReport first_level() {
  LevelReport r;
  r.level = 1;
  r.vertical_residual = 1.0;
  return r;
}

// Letter from the vanishing pattern: vertical letters take every vanishing
// anchor, non-vertical ones only chain-active anchors.
Letter letter_from(const LevelReport& r, double tol) {
  const bool vert = std::abs(r.vertical_residual) <= tol;
  std::vector<int> s;
  if (vert) s.push_back(0);
  for (const auto& a : r.anchors) {
    if ((vert || a.chain) && std::abs(a.residual) <= tol) s.push_back(a.index);
  }
  return s.empty() ? Letter::R() : Letter::T(s);
}

}  // namespace

ClassReport classify_depth1(const ArmConfig& c, double tol) {
  validate_config(c);
  ClassReport rep;
  rep.tol = tol;
  std::vector<Letter> letters{Letter::R()};
  rep.levels.push_back(first_level());
  for (int l = 2; l <= c.k(); ++l) {
    LevelReport r = measure(c, RvtWord(letters), l);
    const Letter x = letter_from(r, tol);
    if (x.depth() > 1) {
      std::ostringstream os;
      os << "level " << l << " satisfies " << x.depth() << " conditions";
      throw Error(ErrorCode::DepthExceeded, os.str());
    }
    r.letter = x;
    letters.push_back(x);
    rep.levels.push_back(r);
  }
  rep.word = RvtWord(letters);
  return rep;
}

ClassReport classify_k4(const ArmConfig& c, double tol) {
  validate_config(c);
  if (c.k() > 4) throw Error(ErrorCode::DepthExceeded, "subscripted classification needs k <= 4");
  ClassReport rep;
  rep.tol = tol;
  std::vector<Letter> letters{Letter::R()};
  rep.levels.push_back(first_level());
  for (int l = 2; l <= c.k(); ++l) {
    LevelReport r = measure(c, RvtWord(letters), l);
    r.letter = letter_from(r, tol);
    letters.push_back(r.letter);
    rep.levels.push_back(r);
  }
  rep.word = RvtWord(letters);
  const auto& list = published_words(c.k());
  if (!std::binary_search(list.begin(), list.end(), rep.word)) {
    throw Error(ErrorCode::UnclassifiableDegeneracy,
                "vanishing pattern " + to_canonical_string(rep.word) + " is not a listed class");
  }
  return rep;
}

ClassReport classify(const ArmConfig& c, double tol) {
  ClassReport rep = c.k() <= 4 ? classify_k4(c, tol) : classify_depth1(c, tol);
  rep.ekr = rvt_to_ekr(rep.word);
  return rep;
}

EkrCode ekr_from_config(const ArmConfig& c, double tol) {
  validate_config(c);
  EkrCode e{{1}};
  std::vector<Letter> letters{Letter::R()};
  for (int l = 2; l <= c.k(); ++l) {
    const LevelReport r = measure(c, RvtWord(letters), l);
    const Letter x = letter_from(r, tol);
    if (!x.vertical()) {
      e.js.push_back(1);
    } else if (x.kind() == Letter::Kind::V) {
      e.js.push_back(2);
    } else {
      if (c.k() > 4) throw Error(ErrorCode::DepthExceeded, "depth-2 EKR classes need k <= 4");
      e.js.push_back(3);
    }
    letters.push_back(x);
  }
  return e;
}

}  // namespace multiflag
