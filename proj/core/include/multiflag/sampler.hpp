#pragma once

#include <cstdint>
#include <vector>

#include "multiflag/arm.hpp"
#include "multiflag/rvt.hpp"

namespace multiflag {

inline constexpr double kDefaultMargin = 0.05;
inline constexpr int kDrawBudget = 10000;

struct SampleSpec {
  RvtWord word;
  int m = 2;
  std::uint64_t seed = 0;
  double margin = kDefaultMargin;
  int count = 1;
};

/// Configurations whose vanishing pattern is exactly the word: required
/// conditions hold to rounding, every other monitored condition has
/// |value| >= margin. Throws InfeasibleLetter, RejectionBudgetExceeded.
std::vector<ArmConfig> sample_in_class(const SampleSpec& spec);

/// Configurations with |A_j| >= margin for all j.
std::vector<ArmConfig> sample_cartan(int m, int k, std::uint64_t seed, double margin = kDefaultMargin,
                                     int count = 1);

}  // namespace multiflag
