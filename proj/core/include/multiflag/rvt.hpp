#pragma once

#include <string>
#include <vector>

#include "multiflag/error.hpp"

namespace multiflag {

/// One letter of an RVT word. Subscript indices: 0 is the vertical
/// hyperplane, a >= 1 the anchor of the a-th vertical level of the word.
class Letter {
 public:
  enum class Kind { R, V, T };

  static Letter R() { return Letter(Kind::R, {}); }
  static Letter V() { return Letter(Kind::V, {}); }
  /// T with the given subscript set; {0} normalises to V.
  static Letter T(std::vector<int> subs);

  Kind kind() const { return kind_; }
  /// Subscript set: {} for R, {0} for V.
  std::vector<int> subscripts() const;
  bool vertical() const;
  bool contains(int index) const;
  /// R: 0, V: 1, T_S: |S|.
  int depth() const;

  bool operator==(const Letter& o) const { return kind_ == o.kind_ && subs_ == o.subs_; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
  /// R < V < T, T letters by (|S|, S).
  bool operator<(const Letter& o) const;

 private:
  Letter(Kind k, std::vector<int> s) : kind_(k), subs_(std::move(s)) {}
  Kind kind_;
  std::vector<int> subs_;
};

class RvtWord {
 public:
  RvtWord() = default;
  explicit RvtWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  int size() const { return static_cast<int>(letters_.size()); }
  /// 1-based level access.
  const Letter& at(int level) const { return letters_.at(level - 1); }
  const std::vector<Letter>& letters() const { return letters_; }
  int depth() const;

  bool operator==(const RvtWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const RvtWord& o) const { return !(*this == o); }
  bool operator<(const RvtWord& o) const { return letters_ < o.letters_; }

 private:
  std::vector<Letter> letters_;
};

struct Anchor {
  int index;  // 1-based among the vertical levels
  int level;  // vertical level p; its direction at level l is x_{l-1} - x_{p-2}
};

/// Anchors contributed by vertical letters strictly before `level`.
std::vector<Anchor> anchors_before(const RvtWord& w, int level);

/// Anchors whose chain is unbroken up to `level`: every letter strictly
/// between the anchor's vertical level and `level` carries its index.
std::vector<Anchor> chain_active(const RvtWord& w, int level);

/// Accepts R, V, T, T_1, T_{01}, T{013}, and the shorthand T0, T01. A plain T
/// takes the unique chain-active anchor. Throws ParseError.
RvtWord parse_word(const std::string& text);

/// Standard spelling (RT_0T_{01}, RVTT, ...).
std::string to_string(const RvtWord& w);
/// Fully explicit spelling: every T carries braces, e.g. RVT{1}.
std::string to_canonical_string(const RvtWord& w);

bool is_admissible(const RvtWord& w);

/// Number of V and T letters; depth-1 words only (DepthExceeded otherwise).
int word_codimension(const RvtWord& w);

/// Words up to the given depth. Depth 1 for any k; depth 2 for k <= 4 is the
/// published list. Sorted. Throws DepthExceeded.
std::vector<RvtWord> enumerate_words(int k, int depth_max);

/// Every word the anchor grammar allows, up to depth_max, sorted. For k <= 4
/// and depth 2 this is the published list plus unlisted degenerate patterns.
std::vector<RvtWord> grammar_words(int k, int depth_max);

/// The published k <= 4 list (all depths), sorted.
const std::vector<RvtWord>& published_words(int k);

struct EkrCode {
  std::vector<int> js;

  int size() const { return static_cast<int>(js.size()); }
  int depth() const;
  bool operator==(const EkrCode& o) const { return js == o.js; }
  bool operator<(const EkrCode& o) const { return js < o.js; }
};

/// Digits only, e.g. "1213". Throws ParseError or RuleViolation.
EkrCode parse_ekr(const std::string& text);
std::string to_string(const EkrCode& e);

/// R and non-vertical T -> 1, V -> 2, vertical letter with anchors -> 3.
EkrCode rvt_to_ekr(const RvtWord& w);

std::vector<RvtWord> ekr_to_rvt_words(const EkrCode& e, int k);

struct TableRow {
  EkrCode ekr;
  std::vector<RvtWord> words;
};

/// EKR to RVT decomposition for k <= 4 (depth <= 2), rows sorted by code.
std::vector<TableRow> ekr_table(int k);

}  // namespace multiflag
