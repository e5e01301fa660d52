#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coevo/passing_matrix.hpp"
#include "coevo/selectors.hpp"

namespace coevo {

// One labeled calibration instance: a problem with a reference solution and
// reference tests used to judge selector output.
struct CalibrationInstance {
  std::string problem_id;
  std::string reference_solution_id;
  std::vector<std::string> reference_test_ids;
};

// Log-scale search space over (beta0, alpha_xy) exponents; the default grid
// is 10 x 8 = 80 configurations.
struct PriorGrid {
  std::vector<int> beta0_exponents;
  std::vector<int> alpha_xy_exponents;

  static PriorGrid standard();
  std::size_t size() const { return beta0_exponents.size() * alpha_xy_exponents.size(); }
  void validate() const;
};

// Decides whether the selected solution of a given problem passes the
// reference tests.
using VerdictFn = std::function<bool(const std::string& problem_id, int solution_index)>;

// Fraction of calibration matrices whose first selected solution (under the
// deterministic selection ordering) passes the reference tests.
double calibration_accuracy(const PriorConfig& prior, const std::vector<PassingMatrix>& matrices,
                            const VerdictFn& verdicts);

struct CalibrationResult {
  PriorConfig prior;
  int beta0_exp = 0;
  int alpha_xy_exp = 0;
  double accuracy = 0.0;
};

// Exhaustive grid search; ties prefer the smaller beta0 exponent, then the
// smaller alpha_xy exponent.
CalibrationResult calibrate(const PriorGrid& grid, const std::vector<PassingMatrix>& matrices,
                            const VerdictFn& verdicts);

}  // namespace coevo
