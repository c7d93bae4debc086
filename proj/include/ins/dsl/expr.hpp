#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ins/dsl/source_error.hpp"

namespace ins::dsl {

enum class ExprKind {
  kIdent,
  kComplement,  // ~e
  kUnion,       // l | r
  kIntersect,   // l & r
  kDifference,  // l \ r
  kAdd,         // l + r
  kCart,        // cart(l, r)
  kProd,        // prod(l, r)
  kScale,       // scale(k, e)
  kDiv,         // div(e, k)
  kTruthFav,    // tf(e)
  kFalseFav,    // ff(e)
  kSubset,      // subset(l, r)
  kEqual,       // eq(l, r)
  kEmpty,       // empty(e)
};

/// Predicates yield booleans and may only appear at the root.
bool is_predicate(ExprKind kind);

/// Syntax tree node. `args` holds operands left to right; `scalar` is the
/// literal of scale/div. Equality is structural and ignores positions.
struct Expr {
  ExprKind kind = ExprKind::kIdent;
  std::string name;
  double scalar = 0.0;
  std::vector<Expr> args;
  SourcePos pos;

  static Expr ident(std::string name, SourcePos pos = {});
  static Expr unary(ExprKind kind, Expr operand, SourcePos pos = {});
  static Expr binary(ExprKind kind, Expr lhs, Expr rhs, SourcePos pos = {});
  static Expr scale(double k, Expr operand, SourcePos pos = {});
  static Expr div(Expr operand, double k, SourcePos pos = {});

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Source text with the fewest parentheses that parse back to the same tree.
std::string to_source(const Expr& e);

/// Shortest positional decimal that reads back as `v` ("2", "0.5", "0.00001").
std::string decimal_literal(double v);

}  // namespace ins::dsl
