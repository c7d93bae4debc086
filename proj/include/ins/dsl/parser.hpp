#pragma once

#include <string_view>

#include "ins/dsl/expr.hpp"

namespace ins::dsl {

/// Parses a set-algebra expression.
///
///   top     := predicate | expr
///   predicate := 'subset(' expr ',' expr ')' | 'eq(' expr ',' expr ')' | 'empty(' expr ')'
///   expr    := diff ('+' diff)*
///   diff    := union ('\' union)*
///   union   := inter ('|' inter)*
///   inter   := unary ('&' unary)*
///   unary   := '~' unary | atom
///   atom    := IDENT | '(' expr ')' | 'tf(' expr ')' | 'ff(' expr ')'
///            | 'cart(' expr ',' expr ')' | 'prod(' expr ',' expr ')'
///            | 'scale(' NUMBER ',' expr ')' | 'div(' expr ',' NUMBER ')'
///
/// An identifier directly followed by '(' is a call; otherwise it names a
/// set. NUMBER is a plain decimal (digits, optional fraction).
///
/// Throws SourceError: kLexError or kParseError for malformed text,
/// kNonPositiveScalar for a zero scale/div literal.
Expr parse_expr(std::string_view text);

}  // namespace ins::dsl
