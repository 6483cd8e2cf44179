#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atomix {

enum class ErrorKind {
  Syntax,
  MissingTransition,
  DuplicateTransition,
  IndexOutOfRange,
  EmptyAlphabet,
  UnknownSymbol,
  Domain,
  NotMinimal,
  NotAnAtom,
  Truncated,
  LimitExceeded,
  OracleMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// command-line front end can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace atomix
