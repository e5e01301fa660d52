#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coevo/passing_matrix.hpp"

namespace coevo {

// Line-delimited matrix records:
//   {"problem_id": "...", "solutions": [...], "tests": [...],
//    "rows": ["0110", ...]}
// One matrix per line; bitstring length must equal the test count and the
// row count must equal the solution count.

std::string matrix_to_record(const PassingMatrix& matrix);

// Throws MatrixParseError naming the offending line (1-based).
std::vector<PassingMatrix> read_matrix_records(std::istream& in);
std::vector<PassingMatrix> read_matrix_file(const std::string& path);

void write_matrix_records(std::ostream& out, const std::vector<PassingMatrix>& matrices);

}  // namespace coevo
