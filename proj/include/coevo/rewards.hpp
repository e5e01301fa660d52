#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coevo/passing_matrix.hpp"
#include "coevo/selectors.hpp"

namespace coevo {

enum class Role { kCoder, kTester };

const char* role_name(Role role);

// Per-candidate reward with its term breakdown. Coder totals are 0/1; tester
// totals decompose as proxy + lambda * mutation + format.
struct RewardRecord {
  std::string candidate_id;
  Role role = Role::kCoder;
  double total = 0.0;
  std::map<std::string, double> terms;
  std::optional<double> lambda_used;
};

// Cosine curriculum position: step k of K.
struct CurriculumSchedule {
  int total_steps = 150;
  int current_step = 0;
};

// 1.25 - 0.25 cos(pi * k/K); rises smoothly from 1.0 to 1.5.
double lambda_weight(const CurriculumSchedule& schedule);

// Binary membership rewards, one record per matrix row.
std::vector<RewardRecord> coder_rewards(const PassingMatrix& matrix,
                                        const ConsensusSelection& selection);

// Three-term tester reward. An inexecutable test scores exactly -1 with zero
// proxy and mutation terms.
RewardRecord tester_reward(bool test_executable, bool proxy_pass, int mutants_killed,
                           int mutant_total, const CurriculumSchedule& schedule);

// Deterministic uniform draw from C_S; identical seeds give identical picks.
int pick_proxy_solution(const ConsensusSelection& selection, std::uint64_t rng_seed);

// Group-relative advantages: (r - mean) / (std + 1e-8) with the population
// standard deviation. A constant group yields exactly zero advantages.
std::vector<double> group_normalized_advantages(const std::vector<double>& rewards);

// Ground-truth coder rewards for calibration-set instances: 1 iff the row
// passes every reference test.
std::vector<RewardRecord> supervised_rewards(const std::vector<bool>& row_passes_all_reference,
                                             bool reference_solution_available);

}  // namespace coevo
