#include "coevo/rewards.hpp"

#include <algorithm>
#include <cmath>

#include "coevo/errors.hpp"
#include "coevo/hashing.hpp"

namespace coevo {

const char* role_name(Role role) { return role == Role::kCoder ? "coder" : "tester"; }

double lambda_weight(const CurriculumSchedule& schedule) {
  if (schedule.total_steps < 1 || schedule.current_step < 0 ||
      schedule.current_step > schedule.total_steps) {
    throw std::invalid_argument("curriculum step out of range");
  }
  const double progress = static_cast<double>(schedule.current_step) /
                          static_cast<double>(schedule.total_steps);
  return 1.25 - 0.25 * std::cos(M_PI * progress);
}

std::vector<RewardRecord> coder_rewards(const PassingMatrix& matrix,
                                        const ConsensusSelection& selection) {
  const int n = matrix.rows();
  for (int idx : selection.solution_indices) {
    if (idx < 0 || idx >= n) {
      throw SelectionMismatchError("selected solution index " + std::to_string(idx) +
                                   " is out of range for " + std::to_string(n) + " rows");
    }
  }
  for (int idx : selection.test_indices) {
    if (idx < 0 || idx >= matrix.cols()) {
      throw SelectionMismatchError("selected test index " + std::to_string(idx) +
                                   " is out of range for " + std::to_string(matrix.cols()) +
                                   " columns");
    }
  }
  std::vector<char> selected(static_cast<std::size_t>(n), 0);
  for (int idx : selection.solution_indices) selected[static_cast<std::size_t>(idx)] = 1;

  std::vector<RewardRecord> records;
  records.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    RewardRecord rec;
    rec.candidate_id = matrix.solution_ids()[static_cast<std::size_t>(i)];
    rec.role = Role::kCoder;
    rec.total = selected[static_cast<std::size_t>(i)] ? 1.0 : 0.0;
    rec.terms["coder_binary"] = rec.total;
    records.push_back(std::move(rec));
  }
  return records;
}

RewardRecord tester_reward(bool test_executable, bool proxy_pass, int mutants_killed,
                           int mutant_total, const CurriculumSchedule& schedule) {
  RewardRecord rec;
  rec.role = Role::kTester;
  if (!test_executable) {
    rec.terms["format"] = -1.0;
    rec.terms["proxy"] = 0.0;
    rec.terms["mutation"] = 0.0;
    rec.total = -1.0;
    return rec;
  }
  if (mutant_total < 1 || mutants_killed < 0 || mutants_killed > mutant_total) {
    throw InvalidMutantCountsError("mutants_killed=" + std::to_string(mutants_killed) +
                                   " mutant_total=" + std::to_string(mutant_total));
  }
  const double lambda = lambda_weight(schedule);
  const double proxy = proxy_pass ? 1.0 : 0.0;
  const double mutation = static_cast<double>(mutants_killed) / static_cast<double>(mutant_total);
  rec.terms["format"] = 0.0;
  rec.terms["proxy"] = proxy;
  rec.terms["mutation"] = mutation;
  rec.lambda_used = lambda;
  rec.total = proxy + lambda * mutation;
  return rec;
}

int pick_proxy_solution(const ConsensusSelection& selection, std::uint64_t rng_seed) {
  if (selection.solution_indices.empty()) {
    throw EmptySelectionError("cannot sample a proxy solution from an empty selection");
  }
  const std::uint64_t key = hash_key(rng_seed, "proxy-pick");
  const std::uint64_t idx = uniform_index(key, selection.solution_indices.size());
  return selection.solution_indices[static_cast<std::size_t>(idx)];
}

std::vector<double> group_normalized_advantages(const std::vector<double>& rewards) {
  if (rewards.empty()) throw std::invalid_argument("reward group must be nonempty");
  const auto [lo, hi] = std::minmax_element(rewards.begin(), rewards.end());
  if (*lo == *hi) return std::vector<double>(rewards.size(), 0.0);

  double mean = 0.0;
  for (double r : rewards) mean += r;
  mean /= static_cast<double>(rewards.size());
  double var = 0.0;
  for (double r : rewards) var += (r - mean) * (r - mean);
  var /= static_cast<double>(rewards.size());
  const double denom = std::sqrt(var) + 1e-8;

  std::vector<double> advantages;
  advantages.reserve(rewards.size());
  for (double r : rewards) advantages.push_back((r - mean) / denom);
  return advantages;
}

std::vector<RewardRecord> supervised_rewards(const std::vector<bool>& row_passes_all_reference,
                                             bool reference_solution_available) {
  if (!reference_solution_available) {
    throw NoGroundTruthError("supervised rewards require a reference solution");
  }
  std::vector<RewardRecord> records;
  records.reserve(row_passes_all_reference.size());
  for (std::size_t i = 0; i < row_passes_all_reference.size(); ++i) {
    RewardRecord rec;
    rec.candidate_id = "s" + std::to_string(i);
    rec.role = Role::kCoder;
    rec.total = row_passes_all_reference[i] ? 1.0 : 0.0;
    rec.terms["coder_binary"] = rec.total;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace coevo
