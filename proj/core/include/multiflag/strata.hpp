#pragma once

#include <Eigen/Core>

#include <vector>

#include "multiflag/arm.hpp"
#include "multiflag/linalg.hpp"
#include "multiflag/poly.hpp"
#include "multiflag/rvt.hpp"

namespace multiflag {

/// One V T^l block of a depth-1 word.
struct VBlock {
  int vertical_level;  // rank i of the V
  int tangencies;      // number of T letters following it
};

struct StratumSystem {
  RvtWord word;
  int m = 0;
  int k = 0;
  std::vector<VBlock> blocks;
  std::vector<PolyScalar> equations;    // phi-bar_j of every block, in block order
  std::vector<PolyScalar> constraints;  // Psi_0 .. Psi_{k-1}
};

std::vector<VBlock> v_blocks(const RvtWord& w);

/// phi-bar_j = <x_{h+j+1} - x_{h+j}, x_{h+j} - x_{h-1}> with h = vertical level - 1.
PolyScalar phi_bar(int h, int j, int m, int k);

/// Stratum equations of a depth-1 word (DepthExceeded otherwise).
StratumSystem defining_equations(const RvtWord& w, int m);

Eigen::VectorXd residuals(const StratumSystem& sys, const ArmConfig& c);

struct CodimensionReport {
  int rank = 0;
  int expected = 0;
};

/// Rank of the Jacobian of (Psi, phi-bar) at c against k + codimension.
/// Throws RankMismatch.
CodimensionReport verify_codimension(const StratumSystem& sys, const ArmConfig& c,
                                     double rel_tol = kDefaultRankTol);

/// Measured Jacobian rank without an expectation (any admissible word).
int jacobian_rank(const std::vector<PolyScalar>& eqs, const ArmConfig& c, double rel_tol = kDefaultRankTol);

/// Polynomial remainder of D phi-bar_i (Y_{h+i+2}) + A_{h+i+1} phi-bar_i - phi-bar_{i+1}:
/// A_{h+i+1} Psi_{h+i} - (prod_{t=h}^{h+i+1} A_t) A_{h+i,h-1}.
PolyScalar recursion_remainder(int h, int i, int m, int k);

/// Checks the phi-bar recursion of every V block of w as an exact polynomial
/// identity and numerically at c. Throws IdentityViolated.
bool verify_recursion(const RvtWord& w, const ArmConfig& c, double tol = 1e-10);

}  // namespace multiflag
