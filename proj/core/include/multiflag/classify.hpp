#pragma once

#include <optional>
#include <vector>

#include "multiflag/arm.hpp"
#include "multiflag/rvt.hpp"

namespace multiflag {

inline constexpr double kDefaultClassifyTol = 1e-7;

struct AnchorResidual {
  int index;        // anchor number
  int level;        // vertical level that contributed it
  bool chain;       // chain-active at this level
  double residual;  // <x_l - x_{l-1}, x_{l-1} - x_{p-2}>
};

struct LevelReport {
  int level;
  double vertical_residual;  // A_{l-1}; level 1 reports 1
  std::vector<AnchorResidual> anchors;
  Letter letter = Letter::R();
};

struct ClassReport {
  RvtWord word;
  std::optional<EkrCode> ekr;
  std::vector<LevelReport> levels;
  double tol = kDefaultClassifyTol;
};

/// Depth-1 classification for any k. Throws DepthExceeded when a vertical
/// level also satisfies an anchor condition.
ClassReport classify_depth1(const ArmConfig& c, double tol = kDefaultClassifyTol);

/// Full subscripted word for k <= 4. Throws UnclassifiableDegeneracy when the
/// vanishing pattern is not one of the published classes.
ClassReport classify_k4(const ArmConfig& c, double tol = kDefaultClassifyTol);

/// classify_k4 for k <= 4, classify_depth1 otherwise; fills the EKR code.
ClassReport classify(const ArmConfig& c, double tol = kDefaultClassifyTol);

EkrCode ekr_from_config(const ArmConfig& c, double tol = kDefaultClassifyTol);

}  // namespace multiflag
