#include "ins/dsl/expr.hpp"

#include <charconv>

namespace ins::dsl {

namespace {

// Binding levels; larger binds tighter. Calls, identifiers and ~ sit above
// every infix operator.
constexpr int kLevelAdd = 1;
constexpr int kLevelDifference = 2;
constexpr int kLevelUnion = 3;
constexpr int kLevelIntersect = 4;
constexpr int kLevelPrefix = 5;

int level(ExprKind kind) {
  switch (kind) {
    case ExprKind::kAdd: return kLevelAdd;
    case ExprKind::kDifference: return kLevelDifference;
    case ExprKind::kUnion: return kLevelUnion;
    case ExprKind::kIntersect: return kLevelIntersect;
    default: return kLevelPrefix;
  }
}

std::string_view infix_symbol(ExprKind kind) {
  switch (kind) {
    case ExprKind::kAdd: return " + ";
    case ExprKind::kDifference: return " \\ ";
    case ExprKind::kUnion: return " | ";
    case ExprKind::kIntersect: return " & ";
    default: return " ? ";
  }
}

std::string call_name(ExprKind kind) {
  switch (kind) {
    case ExprKind::kCart: return "cart";
    case ExprKind::kProd: return "prod";
    case ExprKind::kScale: return "scale";
    case ExprKind::kDiv: return "div";
    case ExprKind::kTruthFav: return "tf";
    case ExprKind::kFalseFav: return "ff";
    case ExprKind::kSubset: return "subset";
    case ExprKind::kEqual: return "eq";
    case ExprKind::kEmpty: return "empty";
    default: return "?";
  }
}

std::string wrap_if(bool parens, std::string text) {
  return parens ? "(" + text + ")" : text;
}

}  // namespace

bool is_predicate(ExprKind kind) {
  return kind == ExprKind::kSubset || kind == ExprKind::kEqual || kind == ExprKind::kEmpty;
}

Expr Expr::ident(std::string name, SourcePos pos) {
  Expr e;
  e.kind = ExprKind::kIdent;
  e.name = std::move(name);
  e.pos = pos;
  return e;
}

Expr Expr::unary(ExprKind kind, Expr operand, SourcePos pos) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(operand));
  e.pos = pos;
  return e;
}

Expr Expr::binary(ExprKind kind, Expr lhs, Expr rhs, SourcePos pos) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  e.pos = pos;
  return e;
}

Expr Expr::scale(double k, Expr operand, SourcePos pos) {
  Expr e = unary(ExprKind::kScale, std::move(operand), pos);
  e.scalar = k;
  return e;
}

Expr Expr::div(Expr operand, double k, SourcePos pos) {
  Expr e = unary(ExprKind::kDiv, std::move(operand), pos);
  e.scalar = k;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.name == b.name && a.scalar == b.scalar && a.args == b.args;
}

std::string decimal_literal(double v) {
  char buf[400];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, end);
}

std::string to_source(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kIdent:
      return e.name;
    case ExprKind::kComplement:
      return "~" + wrap_if(level(e.args[0].kind) < kLevelPrefix, to_source(e.args[0]));
    case ExprKind::kAdd:
    case ExprKind::kDifference:
    case ExprKind::kUnion:
    case ExprKind::kIntersect: {
      // Left-associative: a right operand at the same level needs parentheses.
      const int here = level(e.kind);
      return wrap_if(level(e.args[0].kind) < here, to_source(e.args[0])) +
             std::string(infix_symbol(e.kind)) +
             wrap_if(level(e.args[1].kind) <= here, to_source(e.args[1]));
    }
    case ExprKind::kScale:
      return "scale(" + decimal_literal(e.scalar) + ", " + to_source(e.args[0]) + ")";
    case ExprKind::kDiv:
      return "div(" + to_source(e.args[0]) + ", " + decimal_literal(e.scalar) + ")";
    default: {
      std::string out = call_name(e.kind) + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += to_source(e.args[i]);
      }
      return out + ")";
    }
  }
}

}  // namespace ins::dsl
