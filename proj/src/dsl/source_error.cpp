#include "ins/dsl/source_error.hpp"

namespace ins::dsl {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kLexError: return "LexError";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::kTypeMismatch: return "TypeMismatch";
    case ErrorKind::kUniverseMismatch: return "UniverseMismatch";
    case ErrorKind::kNonPositiveScalar: return "NonPositiveScalar";
  }
  return "Error";
}

SourceError::SourceError(ErrorKind kind, SourcePos pos, std::string message)
    : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
            std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      pos_(pos),
      message_(std::move(message)) {}

}  // namespace ins::dsl
