#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multiflag/linalg.hpp"
#include "multiflag/rvt.hpp"

namespace multiflag {

struct SuiteParams {
  int m = 2;
  int k = 3;
  int samples = 100;
  std::uint64_t seed = 0;
  double tol = 0.0;  // 0 selects the suite default
  double margin = 0.05;
  std::optional<RvtWord> word;  // strata / roundtrip: restrict to one word
};

struct SuiteReport {
  std::string suite;
  int m = 0;
  int k = 0;
  long checks = 0;
  long failures = 0;
  double worst = 0.0;           // largest measured error where one applies
  std::vector<int> ranks;       // flag-ranks: rank D_k .. D_0 at the first sample
  std::vector<std::string> notes;  // first few failure descriptions

  bool passed() const { return failures == 0; }
};

/// rank D_j at Cartan samples, j = k..0.
SuiteReport suite_flag_ranks(const SuiteParams& p);
/// dim L(D_j) = (k - j) m at Cartan samples, j = 1..k.
SuiteReport suite_cauchy(const SuiteParams& p);
/// Stratum codimension on in-class samples, plus the phi-bar recursion for k <= 5.
SuiteReport suite_strata(const SuiteParams& p);
/// Commutation square, pushforward span and flip invariance at random points.
SuiteReport suite_prolongation(const SuiteParams& p);
/// hs_frame against D_k and hs_A against a_fn at chart-regular points.
SuiteReport suite_hyperspherical(const SuiteParams& p);
/// Sampled configurations classify back to their words.
SuiteReport suite_roundtrip(const SuiteParams& p);

/// Dispatch by name; throws ParseError for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteParams& p);
const std::vector<std::string>& suite_names();

}  // namespace multiflag
