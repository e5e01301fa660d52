#include "coevo/passing_matrix.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "coevo/errors.hpp"

namespace coevo {

namespace {

void require_no_duplicates(const std::vector<std::string>& ids, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw std::invalid_argument(std::string(what) + " contains duplicate id '" + id + "'");
    }
  }
}

}  // namespace

PassingMatrix::PassingMatrix(std::string problem_id, std::vector<std::string> solution_ids,
                             std::vector<std::string> test_ids,
                             std::vector<std::uint8_t> entries)
    : problem_id_(std::move(problem_id)),
      solution_ids_(std::move(solution_ids)),
      test_ids_(std::move(test_ids)),
      entries_(std::move(entries)) {
  if (solution_ids_.empty() || test_ids_.empty()) {
    throw std::invalid_argument("passing matrix requires at least one solution and one test");
  }
  if (entries_.size() != solution_ids_.size() * test_ids_.size()) {
    throw std::invalid_argument("entry count does not match N*M");
  }
  for (std::uint8_t bit : entries_) {
    if (bit > 1) throw std::invalid_argument("matrix entries must be 0 or 1");
  }
  require_no_duplicates(solution_ids_, "solution_ids");
  require_no_duplicates(test_ids_, "test_ids");
}

int PassingMatrix::row_sum(int row) const {
  const std::uint8_t* data = row_data(row);
  return std::accumulate(data, data + cols(), 0);
}

bool PassingMatrix::rows_equal(int a, int b) const {
  return std::memcmp(row_data(a), row_data(b), static_cast<std::size_t>(cols())) == 0;
}

PassingMatrix build_matrix(const std::string& problem_id,
                           const std::vector<ExecutionRecord>& outcomes) {
  std::vector<std::string> solution_ids;
  std::vector<std::string> test_ids;
  std::unordered_map<std::string, int> solution_index;
  std::unordered_map<std::string, int> test_index;
  for (const auto& rec : outcomes) {
    if (solution_index.emplace(rec.solution_id, static_cast<int>(solution_ids.size())).second) {
      solution_ids.push_back(rec.solution_id);
    }
    if (test_index.emplace(rec.test_id, static_cast<int>(test_ids.size())).second) {
      test_ids.push_back(rec.test_id);
    }
  }
  if (solution_ids.empty() || test_ids.empty()) {
    throw MissingPairError("no execution outcomes supplied");
  }

  const std::size_t n = solution_ids.size();
  const std::size_t m = test_ids.size();
  std::vector<std::uint8_t> entries(n * m, 0);
  std::vector<std::uint8_t> filled(n * m, 0);
  for (const auto& rec : outcomes) {
    const std::size_t idx =
        static_cast<std::size_t>(solution_index.at(rec.solution_id)) * m +
        static_cast<std::size_t>(test_index.at(rec.test_id));
    if (filled[idx]) {
      throw DuplicatePairError("duplicate outcome for (" + rec.solution_id + ", " +
                               rec.test_id + ")");
    }
    filled[idx] = 1;
    entries[idx] = rec.passed ? 1 : 0;
  }
  if (outcomes.size() != n * m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!filled[i * m + j]) {
          throw MissingPairError("missing outcome for (" + solution_ids[i] + ", " +
                                 test_ids[j] + ")");
        }
      }
    }
  }
  return PassingMatrix(problem_id, std::move(solution_ids), std::move(test_ids),
                       std::move(entries));
}

int rank(const PassingMatrix& matrix) {
  using Int = boost::multiprecision::cpp_int;
  const int n = matrix.rows();
  const int m = matrix.cols();
  std::vector<std::vector<Int>> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[i].resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) a[i][j] = matrix.entry(i, j) ? 1 : 0;
  }

  // One-step fraction-free elimination: after step r the trailing block holds
  // (r+1)x(r+1) minors of the input, and every division by the previous pivot
  // is exact.
  int r = 0;
  Int prev = 1;
  while (r < n && r < m) {
    int pi = -1, pj = -1;
    for (int i = r; i < n && pi < 0; ++i) {
      for (int j = r; j < m; ++j) {
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    std::swap(a[r], a[pi]);
    if (pj != r) {
      for (int i = 0; i < n; ++i) std::swap(a[i][r], a[i][pj]);
    }
    const Int pivot = a[r][r];
    for (int i = r + 1; i < n; ++i) {
      for (int j = r + 1; j < m; ++j) {
        a[i][j] = (pivot * a[i][j] - a[i][r] * a[r][j]) / prev;
      }
      a[i][r] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

int gf2_rank(const PassingMatrix& matrix) {
  const int n = matrix.rows();
  const int m = matrix.cols();
  const int words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rows[i].assign(static_cast<std::size_t>(words), 0);
    for (int j = 0; j < m; ++j) {
      if (matrix.entry(i, j)) rows[i][j / 64] |= (std::uint64_t{1} << (j % 64));
    }
  }
  int r = 0;
  for (int col = 0; col < m && r < n; ++col) {
    const int w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    int pivot = -1;
    for (int i = r; i < n; ++i) {
      if (rows[i][w] & bit) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = 0; i < n; ++i) {
      if (i != r && (rows[i][w] & bit)) {
        for (int k = 0; k < words; ++k) rows[i][k] ^= rows[r][k];
      }
    }
    ++r;
  }
  return r;
}

std::vector<RowSignature> signatures(const PassingMatrix& matrix) {
  const int n = matrix.rows();
  const int m = matrix.cols();
  std::vector<RowSignature> groups;
  std::unordered_map<std::string, std::size_t> index_of;
  for (int i = 0; i < n; ++i) {
    std::string key(reinterpret_cast<const char*>(matrix.row_data(i)),
                    static_cast<std::size_t>(m));
    auto [it, inserted] = index_of.emplace(std::move(key), groups.size());
    if (inserted) {
      RowSignature sig;
      sig.bits.assign(matrix.row_data(i), matrix.row_data(i) + m);
      sig.member_indices.push_back(i);
      groups.push_back(std::move(sig));
    } else {
      groups[it->second].member_indices.push_back(i);
    }
  }
  return groups;
}

}  // namespace coevo
