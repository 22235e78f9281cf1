#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plogic {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (negative probability, arity < 2, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Two values that must agree in shape do not (vector length, map dims).
struct DimensionError : Error {
  using Error::Error;
};

/// A name could not be resolved against its context (e.g. unbound atom).
struct SemanticError : Error {
  using Error::Error;
};

/// An iteration exhausted its step budget without meeting its tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

/// Rejected formula text. Carries the 1-based character position of the
/// offending token and descriptions of the tokens that were legal there.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& unexpected,
             std::vector<std::string> expected)
      : Error(format(position, unexpected, expected)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  static std::string format(std::size_t position, const std::string& unexpected,
                            const std::vector<std::string>& expected) {
    std::string msg = "syntax error at position " + std::to_string(position) +
                      ": unexpected " + unexpected;
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
        msg += expected[i];
      }
    }
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace plogic
