#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coevo {

// Binary execution-outcome matrix between N candidate solutions (rows) and
// M candidate tests (columns). Immutable after construction; row order is
// the order of solution_ids, column order the order of test_ids.
class PassingMatrix {
 public:
  PassingMatrix(std::string problem_id, std::vector<std::string> solution_ids,
                std::vector<std::string> test_ids, std::vector<std::uint8_t> entries);

  const std::string& problem_id() const { return problem_id_; }
  const std::vector<std::string>& solution_ids() const { return solution_ids_; }
  const std::vector<std::string>& test_ids() const { return test_ids_; }

  int rows() const { return static_cast<int>(solution_ids_.size()); }
  int cols() const { return static_cast<int>(test_ids_.size()); }

  bool entry(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * test_ids_.size() +
                    static_cast<std::size_t>(col)] != 0;
  }

  int row_sum(int row) const;

  // Raw row bytes, one 0/1 byte per column.
  const std::uint8_t* row_data(int row) const {
    return entries_.data() + static_cast<std::size_t>(row) * test_ids_.size();
  }

  bool rows_equal(int a, int b) const;

 private:
  std::string problem_id_;
  std::vector<std::string> solution_ids_;
  std::vector<std::string> test_ids_;
  std::vector<std::uint8_t> entries_;  // row-major, N*M bytes, each 0 or 1
};

struct ExecutionRecord {
  std::string solution_id;
  std::string test_id;
  bool passed = false;
};

// Assembles a matrix from per-pair outcomes. The records must cover the
// cross product of the distinct solution and test ids exactly once; row and
// column order follow first appearance in the record list.
PassingMatrix build_matrix(const std::string& problem_id,
                           const std::vector<ExecutionRecord>& outcomes);

// Exact rank over the rationals, computed by fraction-free (Bareiss)
// elimination on arbitrary-precision integers.
int rank(const PassingMatrix& matrix);

// Rank of the same bit pattern over GF(2), for comparison experiments.
int gf2_rank(const PassingMatrix& matrix);

// Maximal group of rows sharing one pass/fail pattern across all tests.
struct RowSignature {
  std::vector<std::uint8_t> bits;   // shared pattern, one byte per column
  std::vector<int> member_indices;  // ascending row indices
};

// Partition of rows into signature groups, ordered by first member index.
std::vector<RowSignature> signatures(const PassingMatrix& matrix);

}  // namespace coevo
