#include "coevo/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coevo/errors.hpp"

namespace coevo {

using nlohmann::json;

std::string matrix_to_record(const PassingMatrix& matrix) {
  json rows = json::array();
  for (int i = 0; i < matrix.rows(); ++i) {
    std::string bits(static_cast<std::size_t>(matrix.cols()), '0');
    for (int j = 0; j < matrix.cols(); ++j) {
      if (matrix.entry(i, j)) bits[static_cast<std::size_t>(j)] = '1';
    }
    rows.push_back(std::move(bits));
  }
  json record{{"problem_id", matrix.problem_id()},
              {"solutions", matrix.solution_ids()},
              {"tests", matrix.test_ids()},
              {"rows", std::move(rows)}};
  return record.dump();
}

namespace {

PassingMatrix parse_record(const std::string& line, std::size_t line_number) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::exception& e) {
    throw MatrixParseError(line_number, std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw MatrixParseError(line_number, "record is not an object");
  for (const char* key : {"problem_id", "solutions", "tests", "rows"}) {
    if (!record.contains(key)) {
      throw MatrixParseError(line_number, std::string("missing field '") + key + "'");
    }
  }
  try {
    auto problem_id = record.at("problem_id").get<std::string>();
    auto solutions = record.at("solutions").get<std::vector<std::string>>();
    auto tests = record.at("tests").get<std::vector<std::string>>();
    auto rows = record.at("rows").get<std::vector<std::string>>();
    if (rows.size() != solutions.size()) {
      throw MatrixParseError(line_number, "row count does not match solution count");
    }
    std::vector<std::uint8_t> entries;
    entries.reserve(solutions.size() * tests.size());
    for (const auto& bits : rows) {
      if (bits.size() != tests.size()) {
        throw MatrixParseError(line_number, "bitstring length does not match test count");
      }
      for (char c : bits) {
        if (c != '0' && c != '1') {
          throw MatrixParseError(line_number, "bitstring contains characters other than 0/1");
        }
        entries.push_back(c == '1' ? 1 : 0);
      }
    }
    return PassingMatrix(std::move(problem_id), std::move(solutions), std::move(tests),
                         std::move(entries));
  } catch (const MatrixParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw MatrixParseError(line_number, e.what());
  }
}

}  // namespace

std::vector<PassingMatrix> read_matrix_records(std::istream& in) {
  std::vector<PassingMatrix> matrices;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    matrices.push_back(parse_record(line, line_number));
  }
  return matrices;
}

std::vector<PassingMatrix> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixParseError(0, "cannot open '" + path + "'");
  return read_matrix_records(in);
}

void write_matrix_records(std::ostream& out, const std::vector<PassingMatrix>& matrices) {
  for (const auto& m : matrices) out << matrix_to_record(m) << '\n';
}

}  // namespace coevo
