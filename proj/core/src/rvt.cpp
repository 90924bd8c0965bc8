#include "multiflag/rvt.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace multiflag {

namespace {

int kind_rank(Letter::Kind k) { return k == Letter::Kind::R ? 0 : k == Letter::Kind::V ? 1 : 2; }

void parse_error(const std::string& text, std::size_t pos, const std::string& why) {
  std::ostringstream os;
  os << "word \"" << text << "\" at offset " << pos << ": " << why;
  throw Error(ErrorCode::ParseError, os.str());
}

std::string digits(const std::vector<int>& s) {
  std::string out;
  for (int i : s) out += std::to_string(i);
  return out;
}

bool subset_of(const std::vector<int>& s, const std::vector<Anchor>& anchors) {
  return std::all_of(s.begin(), s.end(), [&](int a) {
    return std::any_of(anchors.begin(), anchors.end(), [&](const Anchor& x) { return x.index == a; });
  });
}

// Letters the anchor grammar allows at `level` given the earlier letters.
std::vector<Letter> allowed_letters(const RvtWord& prefix, int level) {
  std::vector<Letter> out{Letter::R(), Letter::V()};
  const auto all = anchors_before(prefix, level);
  const auto active = chain_active(prefix, level);
  const auto subsets = [](const std::vector<Anchor>& as) {
    std::vector<std::vector<int>> res;
    const int n = static_cast<int>(as.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int b = 0; b < n; ++b) {
        if (mask & (1 << b)) s.push_back(as[b].index);
      }
      res.push_back(s);
    }
    return res;
  };
  for (auto s : subsets(active)) out.push_back(Letter::T(s));
  for (auto s : subsets(all)) {
    s.insert(s.begin(), 0);
    out.push_back(Letter::T(s));
  }
  return out;
}

const char* const kPublishedK1[] = {"R"};
const char* const kPublishedK2[] = {"RR", "RV"};
const char* const kPublishedK3[] = {"RRR", "RRV", "RVV", "RVR", "RVT", "RT_0T_{01}"};
const char* const kPublishedK4[] = {
    "RRRR",        "RRRV",         "RRVR",          "RRVV",          "RRVT",
    "RRT_0T_{01}", "RVRR",         "RVRV",          "RVVR",          "RVVV",
    "RVVT",        "RVT_0T_{01}",  "RVTR",          "RVTV",          "RVTT",
    "RVRT_{01}",   "RVTT_{01}",    "RT_0T_{01}R",   "RT_0T_{01}V",   "RT_0T_{01}T_1",
    "RT_0T_{01}T_2", "RT_0T_{01}T_{01}", "RT_0T_{01}T_{02}", "RT_0T_{01}T_{12}"};

std::vector<RvtWord> parse_sorted(const char* const* begin, const char* const* end) {
  std::vector<RvtWord> out;
  for (auto it = begin; it != end; ++it) out.push_back(parse_word(*it));
  std::sort(out.begin(), out.end());
  return out;
}

void check_rule(const std::vector<int>& js) {
  if (js.empty() || js[0] != 1) throw Error(ErrorCode::RuleViolation, "EKR code must start with 1");
  int mx = 1;
  for (std::size_t i = 1; i < js.size(); ++i) {
    if (js[i] < 1 || js[i] > mx + 1) {
      std::ostringstream os;
      os << "entry " << i + 1 << " jumps above " << mx + 1;
      throw Error(ErrorCode::RuleViolation, os.str());
    }
    mx = std::max(mx, js[i]);
  }
}

}  // namespace

Letter Letter::T(std::vector<int> subs) {
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  if (subs.empty()) throw Error(ErrorCode::ParseError, "T letter needs a subscript set");
  if (subs.front() < 0) throw Error(ErrorCode::ParseError, "negative subscript");
  if (subs == std::vector<int>{0}) return V();
  return Letter(Kind::T, std::move(subs));
}

std::vector<int> Letter::subscripts() const {
  switch (kind_) {
    case Kind::R: return {};
    case Kind::V: return {0};
    default: return subs_;
  }
}

bool Letter::vertical() const { return kind_ == Kind::V || (kind_ == Kind::T && subs_.front() == 0); }

bool Letter::contains(int index) const {
  const auto s = subscripts();
  return std::find(s.begin(), s.end(), index) != s.end();
}

int Letter::depth() const { return static_cast<int>(subscripts().size()); }

bool Letter::operator<(const Letter& o) const {
  if (kind_ != o.kind_) return kind_rank(kind_) < kind_rank(o.kind_);
  if (subs_.size() != o.subs_.size()) return subs_.size() < o.subs_.size();
  return subs_ < o.subs_;
}

int RvtWord::depth() const {
  int d = 0;
  for (const auto& l : letters_) d = std::max(d, l.depth());
  return d;
}

std::vector<Anchor> anchors_before(const RvtWord& w, int level) {
  std::vector<Anchor> out;
  for (int p = 1; p < level && p <= w.size(); ++p) {
    if (w.at(p).vertical()) out.push_back({static_cast<int>(out.size()) + 1, p});
  }
  return out;
}

std::vector<Anchor> chain_active(const RvtWord& w, int level) {
  std::vector<Anchor> out;
  for (const auto& a : anchors_before(w, level)) {
    bool ok = true;
    for (int q = a.level + 1; q < level && ok; ++q) ok = w.at(q).contains(a.index);
    if (ok) out.push_back(a);
  }
  return out;
}

RvtWord parse_word(const std::string& text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == 'R') {
      letters.push_back(Letter::R());
      ++i;
    } else if (c == 'V') {
      letters.push_back(Letter::V());
      ++i;
    } else if (c == 'T') {
      const std::size_t start = i++;
      if (i < text.size() && text[i] == '_') ++i;
      std::vector<int> subs;
      if (i < text.size() && text[i] == '{') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) subs.push_back(text[i++] - '0');
        if (i >= text.size() || text[i] != '}') parse_error(text, i, "unterminated subscript");
        ++i;
        if (subs.empty()) parse_error(text, start, "empty subscript");
      } else {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) subs.push_back(text[i++] - '0');
        if (subs.empty() && i > start + 1) parse_error(text, start, "empty subscript");
      }
      if (subs.empty()) {
        const RvtWord prefix(letters);
        const auto active = chain_active(prefix, static_cast<int>(letters.size()) + 1);
        if (active.size() != 1) parse_error(text, start, "plain T needs exactly one active anchor");
        subs.push_back(active.front().index);
      }
      letters.push_back(Letter::T(subs));
    } else {
      parse_error(text, i, std::string("unexpected character '") + c + "'");
    }
  }
  if (letters.empty()) parse_error(text, 0, "empty word");
  return RvtWord(std::move(letters));
}

std::string to_string(const RvtWord& w) {
  std::string out;
  for (int l = 1; l <= w.size(); ++l) {
    const Letter& x = w.at(l);
    switch (x.kind()) {
      case Letter::Kind::R:
        out += "R";
        break;
      case Letter::Kind::V: {
        const bool next_anchored = l < w.size() && w.at(l + 1).vertical() && w.at(l + 1).depth() > 1;
        out += next_anchored ? "T_0" : "V";
        break;
      }
      case Letter::Kind::T: {
        const auto s = x.subscripts();
        if (!x.vertical() && s.size() == 1 && chain_active(w, l).size() == 1) {
          out += "T";
        } else if (s.size() == 1) {
          out += "T_" + digits(s);
        } else {
          out += "T_{" + digits(s) + "}";
        }
        break;
      }
    }
  }
  return out;
}

std::string to_canonical_string(const RvtWord& w) {
  std::string out;
  for (const auto& x : w.letters()) {
    if (x.kind() == Letter::Kind::T) {
      out += "T{" + digits(x.subscripts()) + "}";
    } else {
      out += x.kind() == Letter::Kind::R ? "R" : "V";
    }
  }
  return out;
}

bool is_admissible(const RvtWord& w) {
  if (w.size() < 1 || w.at(1) != Letter::R()) return false;
  for (int l = 2; l <= w.size(); ++l) {
    const Letter& x = w.at(l);
    if (x.kind() != Letter::Kind::T) continue;
    auto s = x.subscripts();
    if (x.vertical()) {
      s.erase(s.begin());
      if (!subset_of(s, anchors_before(w, l))) return false;
    } else if (!subset_of(s, chain_active(w, l))) {
      return false;
    }
  }
  if (w.depth() >= 2) {
    if (w.size() > 4) return false;
    const auto& list = published_words(w.size());
    return std::binary_search(list.begin(), list.end(), w);
  }
  return true;
}

int word_codimension(const RvtWord& w) {
  if (w.depth() > 1) throw Error(ErrorCode::DepthExceeded, "codimension is defined for depth-1 words");
  int n = 0;
  for (const auto& x : w.letters()) n += x.kind() != Letter::Kind::R;
  return n;
}

std::vector<RvtWord> grammar_words(int k, int depth_max) {
  if (k < 1) throw Error(ErrorCode::LengthMismatch, "k must be >= 1");
  std::vector<RvtWord> out;
  std::vector<Letter> cur{Letter::R()};
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(cur);
      return;
    }
    const RvtWord prefix(cur);
    for (const auto& x : allowed_letters(prefix, static_cast<int>(cur.size()) + 1)) {
      if (x.depth() > depth_max) continue;
      cur.push_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<RvtWord>& published_words(int k) {
  static const std::vector<std::vector<RvtWord>> lists = {
      parse_sorted(std::begin(kPublishedK1), std::end(kPublishedK1)),
      parse_sorted(std::begin(kPublishedK2), std::end(kPublishedK2)),
      parse_sorted(std::begin(kPublishedK3), std::end(kPublishedK3)),
      parse_sorted(std::begin(kPublishedK4), std::end(kPublishedK4)),
  };
  if (k < 1 || k > 4) throw Error(ErrorCode::DepthExceeded, "published word lists stop at k = 4");
  return lists[k - 1];
}

std::vector<RvtWord> enumerate_words(int k, int depth_max) {
  if (depth_max == 1) return grammar_words(k, 1);
  if (depth_max == 2 && k >= 1 && k <= 4) return published_words(k);
  std::ostringstream os;
  os << "no enumeration for depth " << depth_max << " at k = " << k;
  throw Error(ErrorCode::DepthExceeded, os.str());
}

int EkrCode::depth() const { return js.empty() ? 0 : *std::max_element(js.begin(), js.end()) - 1; }

EkrCode parse_ekr(const std::string& text) {
  EkrCode e;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '0') {
      std::ostringstream os;
      os << "EKR code \"" << text << "\" at offset " << i;
      throw Error(ErrorCode::ParseError, os.str());
    }
    e.js.push_back(text[i] - '0');
  }
  if (e.js.empty()) throw Error(ErrorCode::ParseError, "empty EKR code");
  check_rule(e.js);
  return e;
}

std::string to_string(const EkrCode& e) {
  std::string out;
  for (int j : e.js) out += std::to_string(j);
  return out;
}

EkrCode rvt_to_ekr(const RvtWord& w) {
  if (w.depth() > 2 || (w.depth() == 2 && w.size() > 4)) {
    throw Error(ErrorCode::DepthExceeded, "EKR correspondence covers depth 1, and depth 2 for k <= 4");
  }
  EkrCode e;
  for (const auto& x : w.letters()) {
    if (!x.vertical()) {
      e.js.push_back(1);
    } else {
      e.js.push_back(x.kind() == Letter::Kind::V ? 2 : 3);
    }
  }
  return e;
}

std::vector<RvtWord> ekr_to_rvt_words(const EkrCode& e, int k) {
  if (e.size() != k) throw Error(ErrorCode::LengthMismatch, "EKR code length differs from k");
  check_rule(e.js);
  if (k <= 4) {
    if (e.depth() > 2) throw Error(ErrorCode::DepthExceeded, "depth above 2");
    std::vector<RvtWord> out;
    for (const auto& w : published_words(k)) {
      if (rvt_to_ekr(w) == e) out.push_back(w);
    }
    return out;
  }
  if (e.depth() > 1) throw Error(ErrorCode::DepthExceeded, "depth-2 decomposition is only known for k <= 4");
  // V exactly where j = 2; after each V the gap is T^l R^h.
  std::vector<std::string> acc{""};
  int i = 0;
  while (i < k && e.js[i] == 1) {
    for (auto& s : acc) s += 'R';
    ++i;
  }
  while (i < k) {
    int next = i + 1;
    while (next < k && e.js[next] != 2) ++next;
    const int gap = next - i - 1;
    std::vector<std::string> grown;
    for (const auto& s : acc) {
      for (int l = 0; l <= gap; ++l) grown.push_back(s + "V" + std::string(l, 'T') + std::string(gap - l, 'R'));
    }
    acc = std::move(grown);
    i = next;
  }
  std::vector<RvtWord> out;
  for (const auto& s : acc) out.push_back(parse_word(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TableRow> ekr_table(int k) {
  std::map<EkrCode, std::vector<RvtWord>> rows;
  for (const auto& w : published_words(k)) rows[rvt_to_ekr(w)].push_back(w);
  std::vector<TableRow> out;
  for (auto& [code, words] : rows) {
    std::sort(words.begin(), words.end());
    out.push_back({code, words});
  }
  return out;
}

}  // namespace multiflag
