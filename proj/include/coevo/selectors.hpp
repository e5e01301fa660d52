#pragma once

#include <array>
#include <string>
#include <vector>

#include "coevo/passing_matrix.hpp"

namespace coevo {

// Result of running a consensus selector over a passing matrix: the selected
// solution rows C_S, the selected test columns C_T, and a selector-specific
// score (log-domain for the Bayesian selector).
struct ConsensusSelection {
  std::vector<int> solution_indices;  // ascending
  std::vector<int> test_indices;      // ascending
  double score = 0.0;
  std::string selector_name;
};

// Bayesian prior hyperparameters (beta0, alpha_xy), both strictly positive.
struct PriorConfig {
  double beta0 = 1e4;
  double alpha_xy = 1e3;
};

// Grid exponents u, v read as beta0 = 10^u, alpha_xy = 10^v.
PriorConfig prior_from_exponents(int beta0_exp, int alpha_xy_exp);

// Pass/fail tallies for the four correctness quadrants induced by labeling a
// candidate consensus set: 1 = correct x correct, 0 = incorrect x incorrect,
// x = correct solution x incorrect test, y = incorrect solution x correct
// test.
struct QuadrantCounts {
  enum Quadrant { kOne = 0, kZero = 1, kX = 2, kY = 3 };
  std::array<long, 4> passes{0, 0, 0, 0};
  std::array<long, 4> fails{0, 0, 0, 0};
};

// Sum over quadrants of log B(a_k, b_k) with (a_k, b_k) = prior + observed
// counts. Prior placement: quadrant 1 Beta(1, 1); quadrant 0 Beta(1, beta0);
// quadrants x and y Beta(alpha_xy, 1). Throws NonPositiveParameterError when
// any resulting Beta parameter is <= 0. Stable to ~1e-10 absolute for
// integer-valued parameters up to beta0 = 1e9.
double b4_log_score(const QuadrantCounts& counts, const PriorConfig& prior);

// Numerically stable log Beta used by the scorer; exposed for tests.
double log_beta(double a, double b);

// Solutions with the maximum number of passed tests; C_T is the set of
// columns passed by every selected row (empty for the all-zero matrix).
ConsensusSelection select_maxpass(const PassingMatrix& matrix);

// Execution-signature consensus: groups rows by identical pass/fail
// patterns, scores each group by |group| * |commonly passed tests| and picks
// the best. Ties prefer the larger group, then the smaller first row index.
ConsensusSelection select_codet(const PassingMatrix& matrix);

// Bayesian consensus selection over signature-group candidates. Each group g
// induces the labeling (C_S = g, C_T = columns passed by all of g); the
// candidate maximizing b4_log_score wins, with the CodeT tie-break. When
// every candidate has an empty C_T the CodeT ordering decides.
ConsensusSelection select_b4(const PassingMatrix& matrix, const PriorConfig& prior);

// Verification oracle for select_b4: re-derives the candidate set and scores
// from first principles on a separate code path. Limited to 8x8 matrices;
// larger inputs raise SizeLimitError.
ConsensusSelection select_b4_bruteforce(const PassingMatrix& matrix, const PriorConfig& prior);

}  // namespace coevo
