#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prefdist {

enum class ErrorKind {
  UnknownObject,
  DuplicateObject,
  SyntaxError,
  EmptyExpression,
  IndexOutOfRange,
  SubsetNotMentioned,
  NotTotal,
  DimensionMismatch,
  ConventionMismatch,
  DegenerateUniverse,
  CapExceeded,
  EmptySubset,
  UnnormalizedMass,
  InconsistentMatrix,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace prefdist
