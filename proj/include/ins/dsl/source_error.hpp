#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ins/errors.hpp"

namespace ins::dsl {

/// 1-based position in source text. Columns count bytes.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class ErrorKind {
  kLexError,
  kParseError,
  kUnknownIdentifier,
  kTypeMismatch,
  kUniverseMismatch,
  kNonPositiveScalar,
};

std::string_view error_kind_name(ErrorKind kind);

/// Diagnostic tied to a position in an expression or set file.
/// what() renders as "LINE:COLUMN: KIND: MESSAGE".
class SourceError : public Error {
 public:
  SourceError(ErrorKind kind, SourcePos pos, std::string message);

  ErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  std::size_t line() const { return pos_.line; }
  std::size_t column() const { return pos_.column; }
  const std::string& message() const { return message_; }

  /// Lex and parse errors are usage errors; the rest are evaluation errors.
  bool is_syntax_error() const {
    return kind_ == ErrorKind::kLexError || kind_ == ErrorKind::kParseError;
  }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string message_;
};

}  // namespace ins::dsl
