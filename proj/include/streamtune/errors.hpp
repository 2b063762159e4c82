#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace streamtune {

// Input data is structurally wrong: malformed files, bad flag values,
// inconsistent tables. CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Computation on structurally valid input cannot proceed: degenerate
// designs, too little data, bad parameters. CLI maps these to exit code 2.
class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MalformedRowError : public ValidationError {
public:
  MalformedRowError(std::size_t line, const std::string& column, const std::string& detail)
      : ValidationError("malformed row at line " + std::to_string(line) + ", column '" + column +
                        "': " + detail),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  const std::string& column() const { return column_; }

private:
  std::size_t line_;
  std::string column_;
};

class NegativeDurationError : public ValidationError {
public:
  NegativeDurationError(std::size_t line, const std::string& column)
      : ValidationError("negative duration at line " + std::to_string(line) + ", column '" +
                        column + "'"),
        line_(line),
        column_(column) {}

  explicit NegativeDurationError(const std::string& column)
      : ValidationError("negative duration in field '" + column + "'"), line_(0), column_(column) {}

  std::size_t line() const { return line_; }
  const std::string& column() const { return column_; }

private:
  std::size_t line_;
  std::string column_;
};

class DuplicateSizeError : public ValidationError {
public:
  explicit DuplicateSizeError(std::uint64_t slae_size)
      : ValidationError("duplicate SLAE size " + std::to_string(slae_size)),
        slae_size_(slae_size) {}

  DuplicateSizeError(std::uint64_t slae_size, int num_streams)
      : ValidationError("duplicate run key (size " + std::to_string(slae_size) + ", " +
                        std::to_string(num_streams) + " streams)"),
        slae_size_(slae_size) {}

  std::uint64_t slae_size() const { return slae_size_; }

private:
  std::uint64_t slae_size_;
};

class InvalidStreamCountError : public ValidationError {
public:
  explicit InvalidStreamCountError(int n)
      : ValidationError("invalid stream count " + std::to_string(n) +
                        " (must be a power of two between 1 and 32)"),
        count_(n) {}

  int count() const { return count_; }

private:
  int count_;
};

class MissingStageTimingsError : public ValidationError {
public:
  explicit MissingStageTimingsError(std::uint64_t slae_size)
      : ValidationError("no stage timings for SLAE size " + std::to_string(slae_size)),
        slae_size_(slae_size) {}

  std::uint64_t slae_size() const { return slae_size_; }

private:
  std::uint64_t slae_size_;
};

class TooFewObservationsError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class RankDeficiencyError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class ZeroVarianceError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class NonpositiveTauError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

}  // namespace streamtune
