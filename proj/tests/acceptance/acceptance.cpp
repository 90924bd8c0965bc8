// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <Eigen/LU>
#include <Eigen/QR>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "multiflag/classify.hpp"
#include "multiflag/distributions.hpp"
#include "multiflag/error.hpp"
#include "multiflag/hyperspherical.hpp"
#include "multiflag/prolongation.hpp"
#include "multiflag/rvt.hpp"
#include "multiflag/sampler.hpp"
#include "multiflag/strata.hpp"
#include "multiflag/suites.hpp"

using namespace multiflag;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string lines(const std::vector<RvtWord>& ws) {
  std::string s;
  for (const auto& w : ws) s += to_string(w) + "\n";
  return s;
}

std::set<std::string> spelled(const std::vector<RvtWord>& ws) {
  std::set<std::string> s;
  for (const auto& w : ws) s.insert(to_string(w));
  return s;
}

// Transcribed class lists.
const std::set<std::string> kWords3 = {"RRR", "RRV", "RVV", "RVR", "RVT", "RT_0T_{01}"};
const std::set<std::string> kWords4 = {
    "RRRR",        "RRRV",         "RRVR",          "RRVV",          "RRVT",          "RRT_0T_{01}",
    "RVRR",        "RVRV",         "RVVR",          "RVVV",          "RVVT",          "RVT_0T_{01}",
    "RVTR",        "RVTV",         "RVTT",          "RVRT_{01}",     "RVTT_{01}",     "RT_0T_{01}R",
    "RT_0T_{01}V", "RT_0T_{01}T_1", "RT_0T_{01}T_2", "RT_0T_{01}T_{01}", "RT_0T_{01}T_{02}", "RT_0T_{01}T_{12}"};

const std::vector<std::pair<std::string, std::set<std::string>>> kTable4 = {
    {"1111", {"RRRR"}},
    {"1112", {"RRRV"}},
    {"1121", {"RRVR", "RRVT"}},
    {"1122", {"RRVV"}},
    {"1123", {"RRT_0T_{01}"}},
    {"1211", {"RVRR", "RVTR", "RVTT"}},
    {"1212", {"RVRV", "RVTV"}},
    {"1213", {"RVRT_{01}", "RVTT_{01}"}},
    {"1221", {"RVVR", "RVVT"}},
    {"1222", {"RVVV"}},
    {"1223", {"RVT_0T_{01}"}},
    {"1231", {"RT_0T_{01}R", "RT_0T_{01}T_1", "RT_0T_{01}T_2", "RT_0T_{01}T_{12}"}},
    {"1232", {"RT_0T_{01}V"}},
    {"1233", {"RT_0T_{01}T_{01}", "RT_0T_{01}T_{02}"}},
};

Outcome enumeration() {
  Outcome o;
  const auto w3 = enumerate_words(3, 2), w4 = enumerate_words(4, 2);
  if (spelled(w3) != kWords3 || w3.size() != 6) o = {false, "k=3 list differs"};
  if (spelled(w4) != kWords4 || w4.size() != 24) o = {false, "k=4 list differs"};
  if (lines(w3) != slurp(MULTIFLAG_GOLDEN_DIR "/enumerate_3_2.txt")) o = {false, "k=3 golden differs"};
  if (lines(w4) != slurp(MULTIFLAG_GOLDEN_DIR "/enumerate_4_2.txt")) o = {false, "k=4 golden differs"};
  if (o.ok) o.detail = "6 and 24 words";
  return o;
}

Outcome table() {
  const auto rows = ekr_table(4);
  if (rows.size() != kTable4.size()) return {false, std::to_string(rows.size()) + " rows"};
  std::ostringstream text;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (to_string(rows[i].ekr) != kTable4[i].first || spelled(rows[i].words) != kTable4[i].second) {
      return {false, "row " + kTable4[i].first + " differs"};
    }
    text << to_string(rows[i].ekr) << " |";
    for (std::size_t j = 0; j < rows[i].words.size(); ++j) text << (j ? ", " : " ") << to_string(rows[i].words[j]);
    text << "\n";
  }
  if (text.str() != slurp(MULTIFLAG_GOLDEN_DIR "/table_4.txt")) return {false, "golden differs"};
  return {true, "14 rows"};
}

Outcome from_suites(const std::string& suite, const std::vector<int>& ms, int kmin, int kmax, int samples,
                    double tol = 0.0) {
  long checks = 0, failures = 0;
  double worst = 0.0;
  std::string first;
  for (int m : ms) {
    for (int k = kmin; k <= kmax; ++k) {
      SuiteParams p;
      p.m = m;
      p.k = k;
      p.samples = samples;
      p.seed = 1000 + 10 * m + k;
      p.tol = tol;
      const SuiteReport r = run_suite(suite, p);
      checks += r.checks;
      failures += r.failures;
      worst = std::max(worst, r.worst);
      if (first.empty() && !r.notes.empty()) first = r.notes.front();
    }
  }
  std::ostringstream os;
  os << suite << ": " << checks << " checks, " << failures << " failures";
  if (worst > 0) os << ", worst " << worst;
  if (!first.empty()) os << "; " << first;
  return {failures == 0, os.str()};
}

Outcome roundtrip() { return from_suites("roundtrip", {2, 3}, 1, 6, 100); }

Outcome flag_ranks() {
  Outcome a = from_suites("flag-ranks", {2, 3}, 1, 4, 100);
  Outcome b = from_suites("cauchy", {2, 3}, 1, 4, 100);
  return {a.ok && b.ok, a.detail + "; " + b.detail};
}

Outcome pushforward() {
  Outcome o = from_suites("prolongation", {2, 3}, 1, 4, 200);
  // negative control: one frame coefficient off by 1e-3
  auto corrupt = [](const ArmConfig& c) {
    Eigen::MatrixXd W = evaluate_Dk(c);
    W(0, 0) += 1e-3;
    return W;
  };
  int detected = 0, tried = 0;
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g;
  for (int m : {2, 3}) {
    for (int k = 1; k <= 4; ++k) {
      for (const auto& c : sample_cartan(m, k, 500 + k, 0.0, 20)) {
        Eigen::VectorXd d(m + 1);
        for (int i = 0; i <= m; ++i) d[i] = g(rng);
        const ArmConfig up = prolong_config(c, make_direction(d.normalized()));
        ++tried;
        try {
          verify_pushforward(up, kPushforwardTol, corrupt);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::SpanMismatch) ++detected;
        }
      }
    }
  }
  o.detail += "; mutation detected " + std::to_string(detected) + "/" + std::to_string(tried);
  o.ok = o.ok && detected == tried;
  return o;
}

Outcome codimension() {
  long checks = 0, failures = 0;
  std::string first;
  for (int m : {2, 3}) {
    for (int k = 1; k <= 6; ++k) {
      for (const auto& w : enumerate_words(k, 1)) {
        const StratumSystem sys = defining_equations(w, m);
        for (const auto& c : sample_in_class({w, m, 3000u + static_cast<unsigned>(k), kDefaultMargin, 50})) {
          ++checks;
          try {
            verify_codimension(sys, c);
          } catch (const Error& e) {
            ++failures;
            if (first.empty()) first = e.what();
          }
        }
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " samples, " + std::to_string(failures) + " rank mismatches" +
                             (first.empty() ? "" : "; " + first)};
}

Outcome identities() {
  long checked = 0;
  std::string bad;
  auto expect_zero = [&](const auto& p, const std::string& what) {
    ++checked;
    if (!p.is_zero() && bad.empty()) bad = what;
  };
  for (int m : {2, 3}) {
    for (int k = 2; k <= 5; ++k) {
      const int n = ambient_dim(m, k);
      const std::string at = " (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")";
      for (int i = 1; i < k; ++i) {
        for (int j = 0; j < i; ++j) {
          const PolyScalar a = gen_A_pair(i, j, m, k);
          const std::string ij = "A_{" + std::to_string(i) + "," + std::to_string(j) + "}" + at;
          for (int h = 0; h < k; ++h) {
            if (h != i && h != i + 1 && h != j && h != j + 1) expect_zero(derive_scalar(a, gen_Z(h, m, k)), "item 1 " + ij);
          }
          if (j != i - 1) {
            expect_zero(derive_scalar(a, gen_Z(i, m, k)) + a, "item 2 " + ij);
          } else {
            expect_zero(derive_scalar(a, gen_Z(i, m, k)) - (PolyScalar::constant(n, 1.0) - a) - gen_Psi(i, m, k),
                        "item 3 " + ij);
          }
          if (i + 1 <= k - 1) expect_zero(derive_scalar(a, gen_Z(i + 1, m, k)) - gen_A_pair(i + 1, j, m, k), "item 4 " + ij);
          if (j <= i - 2) expect_zero(derive_scalar(a, gen_Z(j + 1, m, k)) - gen_A_pair(i, j + 1, m, k), "item 5 " + ij);
        }
      }
      for (int l = 2; l <= k; ++l) {
        expect_zero(gen_Y(l, m, k) - (gen_A(l - 1, m, k) * gen_Y(l - 1, m, k) + gen_Z(l - 1, m, k)),
                    "Y recursion at level " + std::to_string(l) + at);
      }
      // phi-bar recursion for a V at every level 2..k
      std::string word = "R";
      word.append(k - 1, 'V');
      ++checked;
      try {
        verify_recursion(parse_word(word), sample_cartan(m, k, 9, 0.0, 1)[0]);
      } catch (const Error& e) {
        if (bad.empty()) bad = std::string("phi-bar recursion") + at + ": " + e.what();
      }
    }
  }
  return {bad.empty(), std::to_string(checked) + " identities" + (bad.empty() ? "" : "; failed " + bad)};
}

Outcome hyperspherical() { return from_suites("hyperspherical", {2, 3}, 1, 4, 200, 1e-8); }

Eigen::MatrixXd random_rotation(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd M(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) M(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
  Eigen::MatrixXd Q = qr.householderQ();
  if (Q.determinant() < 0) Q.col(0) *= -1;
  return Q;
}

Outcome covering() {
  std::vector<std::pair<RvtWord, int>> classes;
  for (int m : {2, 3}) {
    for (int k = 2; k <= 5; ++k) {
      for (const auto& w : enumerate_words(k, k <= 4 ? 2 : 1)) classes.emplace_back(w, m);
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  int total = 0, failures = 0;
  std::string first;
  for (std::size_t i = 0; total < 1000; ++i) {
    const auto& [w, m] = classes[i % classes.size()];
    const ArmConfig c = sample_in_class({w, m, 4000 + i, kDefaultMargin, 1})[0];
    const Eigen::MatrixXd Q = random_rotation(m + 1, rng);
    Eigen::VectorXd t(m + 1);
    for (int r = 0; r <= m; ++r) t[r] = shift(rng);
    std::vector<Eigen::VectorXd> pts;
    for (int l = 0; l <= c.k(); ++l) pts.push_back(Q * c.point(l) + t);
    const ArmConfig moved(m, c.k(), pts);
    ++total;
    const ClassReport base = classify(c);
    const ClassReport flipped = classify(flip_last(c));
    const ClassReport rigid = classify(moved);
    if (!(base.word == w && flipped.word == w && rigid.word == w && flipped.ekr == base.ekr && rigid.ekr == base.ekr)) {
      ++failures;
      if (first.empty()) first = to_string(w) + " -> " + to_string(flipped.word) + " / " + to_string(rigid.word);
    }
  }
  return {failures == 0, std::to_string(total) + " configs, " + std::to_string(failures) + " failures" +
                             (first.empty() ? "" : "; " + first)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no runtime limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "enumeration", 1.0, enumeration},
      {2, "EKR table", 1.0, table},
      {3, "oracle round-trip", 60.0, roundtrip},
      {4, "flag ranks and Cauchy characteristics", 120.0, flag_ranks},
      {5, "prolongation pushforward", 60.0, pushforward},
      {6, "stratum codimension", 60.0, codimension},
      {7, "exact identities", 30.0, identities},
      {8, "hyperspherical agreement", 30.0, hyperspherical},
      {9, "covering invariance", 0.0, covering},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    std::printf("%s %d %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
