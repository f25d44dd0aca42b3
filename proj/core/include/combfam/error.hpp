#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace combfam {

/// Raised when an operation is called outside its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed family, vector, permutation or descriptor text. `line()` is
/// 1-based, 0 when the input is a single expression.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A lazy family whose tail behaviour cannot be classified, or whose
/// limit-rank certificate failed.
class UnsupportedDescriptor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result-size guard tripped (automorphism lists, truncations).
class SearchOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace combfam
