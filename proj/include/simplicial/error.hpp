#pragma once

#include <stdexcept>
#include <string>

namespace simplicial {

// Failure categories map onto CLI exit codes: data errors exit 2, numeric
// failures exit 3. Argument/usage problems are handled by the CLI itself.

/// Malformed input data (bad edge-list token, unreadable file, empty graph).
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Precondition violated on a well-formed value (invalid node id, non-edge,
/// empty census, out-of-range model parameter).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical procedure could not deliver (unreachable calibration target,
/// too few points to fit).
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CalibrationError : public NumericError {
public:
  CalibrationError(const std::string& what, double max_achievable_cc)
      : NumericError(what), max_cc_(max_achievable_cc) {}
  double max_achievable_cc() const noexcept { return max_cc_; }

private:
  double max_cc_;
};

class FitError : public NumericError {
public:
  using NumericError::NumericError;
};

}  // namespace simplicial
