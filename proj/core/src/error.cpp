#include "atomix/error.hpp"

namespace atomix {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::MissingTransition: return "MissingTransition";
    case ErrorKind::DuplicateTransition: return "DuplicateTransition";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyAlphabet: return "EmptyAlphabet";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotAnAtom: return "NotAnAtom";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace atomix
