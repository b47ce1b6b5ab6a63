#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treedom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrc {
  kMissingHeader,
  kMalformedInteger,
  kLengthMismatch,
  kParentOrder,
  kNoRoot,
  kMalformedPair,
  kLabelOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
};

const char* to_string(ParseErrc code);

/// Input text did not match the .par / .edg grammar. Line and column are
/// 1-based and point at the offending token.
class ParseError : public Error {
 public:
  ParseError(ParseErrc code, std::size_t line, std::size_t column,
             const std::string& detail);

  ParseErrc code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrc code_;
  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid tree or forest (parent ordering, root count,
/// connectivity, edge count).
class InvalidTreeError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated (label out of range, bad
/// generator parameters, bench repetitions below the minimum, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive oracle or enumerator was asked for an instance above its cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace treedom
