#pragma once

#include <stdexcept>
#include <string>

namespace coevo {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix construction.
struct MissingPairError : Error {
  using Error::Error;
};
struct DuplicatePairError : Error {
  using Error::Error;
};
struct MatrixParseError : Error {
  MatrixParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  std::size_t line_number;
};

// Selection.
struct NonPositiveParameterError : Error {
  using Error::Error;
};
struct SizeLimitError : Error {
  using Error::Error;
};

// Rewards.
struct SelectionMismatchError : Error {
  using Error::Error;
};
struct InvalidMutantCountsError : Error {
  using Error::Error;
};
struct EmptySelectionError : Error {
  using Error::Error;
};
struct NoGroundTruthError : Error {
  using Error::Error;
};

// Calibration.
struct EmptyCalibrationSetError : Error {
  using Error::Error;
};

// Execution environments.
struct WorldMismatchError : Error {
  using Error::Error;
};
struct NotCorrectSolutionError : Error {
  using Error::Error;
};
struct ProtocolViolationError : Error {
  using Error::Error;
};

// Metrics and training.
struct EmptyTestSetError : Error {
  using Error::Error;
};
struct EmptyMutantSetError : Error {
  using Error::Error;
};
struct NoGroundTruthAvailableError : Error {
  using Error::Error;
};

}  // namespace coevo
