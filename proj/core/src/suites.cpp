#include "multiflag/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "multiflag/classify.hpp"
#include "multiflag/distributions.hpp"
#include "multiflag/error.hpp"
#include "multiflag/hyperspherical.hpp"
#include "multiflag/prolongation.hpp"
#include "multiflag/sampler.hpp"
#include "multiflag/strata.hpp"

namespace multiflag {

namespace {

constexpr std::size_t kMaxNotes = 5;
// Beyond this the symbolic remainder of the phi-bar recursion has millions
// of terms; the codimension check still runs.
constexpr int kRecursionMaxK = 5;

void fail(SuiteReport& r, const std::string& what) {
  ++r.failures;
  if (r.notes.size() < kMaxNotes) r.notes.push_back(what);
}

SuiteReport start(const std::string& name, const SuiteParams& p) {
  SuiteReport r;
  r.suite = name;
  r.m = p.m;
  r.k = p.k;
  return r;
}

double tol_or(const SuiteParams& p, double def) { return p.tol > 0.0 ? p.tol : def; }

std::vector<RvtWord> words_for(const SuiteParams& p, bool with_depth2) {
  if (p.word) return {*p.word};
  std::vector<RvtWord> ws = enumerate_words(p.k, 1);
  if (with_depth2 && p.k <= 4) {
    for (const auto& w : enumerate_words(p.k, 2)) {
      if (w.depth() == 2) ws.push_back(w);
    }
  }
  return ws;
}

}  // namespace

SuiteReport suite_flag_ranks(const SuiteParams& p) {
  SuiteReport r = start("flag-ranks", p);
  const double tol = tol_or(p, kDefaultRankTol);
  const FlagSpec flag = build_flag(p.m, p.k);
  const auto pts = sample_cartan(p.m, p.k, p.seed, p.margin, p.samples);
  for (std::size_t s = 0; s < pts.size(); ++s) {
    for (int j = p.k; j >= 0; --j) {
      const int rank = rank_at(flag.member(j), pts[s].ambient(), tol);
      if (s == 0) r.ranks.push_back(rank);
      ++r.checks;
      if (rank != flag.expected_rank(j)) {
        std::ostringstream os;
        os << "sample " << s << ": rank D_" << j << " = " << rank << ", expected " << flag.expected_rank(j);
        fail(r, os.str());
      }
    }
  }
  return r;
}

SuiteReport suite_cauchy(const SuiteParams& p) {
  SuiteReport r = start("cauchy", p);
  const double tol = tol_or(p, kDefaultRankTol);
  const FlagSpec flag = build_flag(p.m, p.k);
  const auto pts = sample_cartan(p.m, p.k, p.seed, p.margin, p.samples);
  for (std::size_t s = 0; s < pts.size(); ++s) {
    const Eigen::VectorXd& x = pts[s].ambient();
    for (int j = 1; j <= p.k; ++j) {
      const int dim = static_cast<int>(cauchy_char_at(independent_subframe(flag.member(j), x, tol), x, tol).cols());
      ++r.checks;
      if (dim != (p.k - j) * p.m) {
        std::ostringstream os;
        os << "sample " << s << ": dim L(D_" << j << ") = " << dim << ", expected " << (p.k - j) * p.m;
        fail(r, os.str());
      }
    }
  }
  return r;
}

SuiteReport suite_strata(const SuiteParams& p) {
  SuiteReport r = start("strata", p);
  const double tol = tol_or(p, kDefaultRankTol);
  for (const auto& w : words_for(p, false)) {
    const StratumSystem sys = defining_equations(w, p.m);
    for (const auto& c : sample_in_class({w, p.m, p.seed, p.margin, p.samples})) {
      ++r.checks;
      r.worst = std::max(r.worst, residuals(sys, c).lpNorm<Eigen::Infinity>());
      try {
        verify_codimension(sys, c, tol);
      } catch (const Error& e) {
        fail(r, e.what());
      }
      if (p.k > kRecursionMaxK) continue;
      ++r.checks;
      try {
        verify_recursion(w, c);
      } catch (const Error& e) {
        fail(r, to_string(w) + ": " + e.what());
      }
    }
  }
  if (r.worst > 1e-9) fail(r, "stratum equations do not vanish on in-class samples");
  return r;
}

SuiteReport suite_prolongation(const SuiteParams& p) {
  SuiteReport r = start("prolongation", p);
  const double tol = tol_or(p, kPushforwardTol);
  std::mt19937_64 rng(p.seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> g;
  const auto base = sample_cartan(p.m, p.k, p.seed, 0.0, p.samples);
  for (std::size_t s = 0; s < base.size(); ++s) {
    Eigen::VectorXd d(p.m + 1);
    do {
      for (int i = 0; i <= p.m; ++i) d[i] = g(rng);
    } while (d.norm() < 1e-3);
    d.normalize();
    const ArmConfig up = prolong_config(base[s], make_direction(d));
    r.checks += 3;
    if (!(drop_last(up) == base[s])) fail(r, "commutation square not exact at sample " + std::to_string(s));
    try {
      r.worst = std::max(r.worst, verify_pushforward(up, tol).max_sine);
    } catch (const Error& e) {
      fail(r, "sample " + std::to_string(s) + ": " + e.what());
    }
    if (!(flip_last(flip_last(up)).ambient() - up.ambient()).isZero(1e-14)) {
      fail(r, "flip_last is not an involution at sample " + std::to_string(s));
    }
  }
  return r;
}

SuiteReport suite_hyperspherical(const SuiteParams& p) {
  SuiteReport r = start("hyperspherical", p);
  const double tol = tol_or(p, 1e-8);
  const auto pts = sample_cartan(p.m, p.k, p.seed, 0.0, p.samples);
  for (std::size_t s = 0; s < pts.size(); ++s) {
    HsPoint h;
    try {
      h = hs_inverse(pts[s]);
    } catch (const Error&) {
      continue;  // outside the chart
    }
    const ArmConfig c = hs_forward(h);
    const double span = span_distance(hs_frame(h), hs_pushforward(h, evaluate_Dk(c)));
    ++r.checks;
    r.worst = std::max(r.worst, span);
    if (!(span <= tol)) fail(r, "sample " + std::to_string(s) + ": span sine " + std::to_string(span));
    for (int i = 1; i < p.k; ++i) {
      ++r.checks;
      const double err = std::abs(hs_A(h, i) - a_fn(c, i));
      if (!(err <= 1e-12)) fail(r, "sample " + std::to_string(s) + ": A_" + std::to_string(i) + " off by " + std::to_string(err));
    }
  }
  return r;
}

SuiteReport suite_roundtrip(const SuiteParams& p) {
  SuiteReport r = start("roundtrip", p);
  const double tol = tol_or(p, kDefaultClassifyTol);
  for (const auto& w : words_for(p, true)) {
    for (const auto& c : sample_in_class({w, p.m, p.seed, p.margin, p.samples})) {
      ++r.checks;
      try {
        const ClassReport rep = classify(c, tol);
        if (!(rep.word == w)) fail(r, to_string(w) + " sampled, classified as " + to_string(rep.word));
      } catch (const Error& e) {
        fail(r, to_string(w) + ": " + e.what());
      }
    }
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"flag-ranks", "cauchy",         "strata",
                                              "prolongation", "hyperspherical", "roundtrip"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& p) {
  if (name == "flag-ranks") return suite_flag_ranks(p);
  if (name == "cauchy") return suite_cauchy(p);
  if (name == "strata") return suite_strata(p);
  if (name == "prolongation") return suite_prolongation(p);
  if (name == "hyperspherical") return suite_hyperspherical(p);
  if (name == "roundtrip") return suite_roundtrip(p);
  throw Error(ErrorCode::ParseError, "unknown suite \"" + name + "\"");
}

}  // namespace multiflag
