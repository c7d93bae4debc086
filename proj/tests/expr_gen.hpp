#pragma once

// Random expression trees and a direct evaluator over the core operators,
// shared by the unit and acceptance suites.

#include <string>
#include <variant>
#include <vector>

#include "ins/dsl/expr.hpp"
#include "ins/operators.hpp"
#include "ins/random.hpp"

namespace ins::test {

inline const char* const kNames[] = {"A", "B", "C"};

inline double random_scalar(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return static_cast<double>(1 + rng.below(8)) / 4.0;
    case 1: return static_cast<double>(1 + rng.below(5));
    case 2: return 0.001 * static_cast<double>(1 + rng.below(5000));
    default: return 0.01 + 4.0 * rng.uniform();
  }
}

/// Set-valued tree of depth <= `depth`, never containing cart or predicates.
inline dsl::Expr random_set_expr(Rng& rng, int depth) {
  using dsl::Expr;
  using dsl::ExprKind;
  if (depth <= 1 || rng.below(5) == 0) return Expr::ident(kNames[rng.below(3)]);
  switch (rng.below(10)) {
    case 0: return Expr::unary(ExprKind::kComplement, random_set_expr(rng, depth - 1));
    case 1: return Expr::unary(rng.coin() ? ExprKind::kTruthFav : ExprKind::kFalseFav, random_set_expr(rng, depth - 1));
    case 2: return Expr::scale(random_scalar(rng), random_set_expr(rng, depth - 1));
    case 3: return Expr::div(random_set_expr(rng, depth - 1), random_scalar(rng));
    default: {
      static const ExprKind kBinary[] = {ExprKind::kUnion, ExprKind::kIntersect, ExprKind::kDifference,
                                         ExprKind::kAdd, ExprKind::kProd};
      const ExprKind k = kBinary[rng.below(5)];
      auto lhs = random_set_expr(rng, depth - 1);
      auto rhs = random_set_expr(rng, depth - 1);
      return Expr::binary(k, std::move(lhs), std::move(rhs));
    }
  }
}

/// Any well-typed root: a set expression, a cart or a predicate.
inline dsl::Expr random_root_expr(Rng& rng, int depth) {
  using dsl::Expr;
  using dsl::ExprKind;
  switch (rng.below(8)) {
    case 0: {
      auto l = random_set_expr(rng, depth - 1);
      auto r = random_set_expr(rng, depth - 1);
      return Expr::binary(ExprKind::kCart, std::move(l), std::move(r));
    }
    case 1: {
      auto l = random_set_expr(rng, depth - 1);
      auto r = random_set_expr(rng, depth - 1);
      return Expr::binary(rng.coin() ? ExprKind::kSubset : ExprKind::kEqual, std::move(l), std::move(r));
    }
    case 2: return Expr::unary(ExprKind::kEmpty, random_set_expr(rng, depth - 1));
    default: return random_set_expr(rng, depth);
  }
}

/// Every node parenthesized; independent of the minimal printer.
inline std::string full_parens(const dsl::Expr& e) {
  using dsl::ExprKind;
  auto bin = [&](const char* op) { return "(" + full_parens(e.args[0]) + op + full_parens(e.args[1]) + ")"; };
  auto call2 = [&](const char* f) { return std::string(f) + "(" + full_parens(e.args[0]) + "," + full_parens(e.args[1]) + ")"; };
  auto call1 = [&](const char* f) { return std::string(f) + "(" + full_parens(e.args[0]) + ")"; };
  switch (e.kind) {
    case ExprKind::kIdent: return e.name;
    case ExprKind::kComplement: return "(~" + full_parens(e.args[0]) + ")";
    case ExprKind::kUnion: return bin(" | ");
    case ExprKind::kIntersect: return bin(" & ");
    case ExprKind::kDifference: return bin(" \\ ");
    case ExprKind::kAdd: return bin(" + ");
    case ExprKind::kCart: return call2("cart");
    case ExprKind::kProd: return call2("prod");
    case ExprKind::kScale: return "scale(" + dsl::decimal_literal(e.scalar) + "," + full_parens(e.args[0]) + ")";
    case ExprKind::kDiv: return "div(" + full_parens(e.args[0]) + "," + dsl::decimal_literal(e.scalar) + ")";
    case ExprKind::kTruthFav: return call1("tf");
    case ExprKind::kFalseFav: return call1("ff");
    case ExprKind::kSubset: return call2("subset");
    case ExprKind::kEqual: return call2("eq");
    case ExprKind::kEmpty: return call1("empty");
  }
  return "?";
}

using Direct = std::variant<DiscreteINS, PairedINS, bool>;

inline DiscreteINS direct_set(const dsl::Expr& e, const std::vector<DiscreteINS>& sets) {
  using dsl::ExprKind;
  auto arg = [&](std::size_t i) { return direct_set(e.args[i], sets); };
  switch (e.kind) {
    case ExprKind::kIdent: return sets[static_cast<std::size_t>(e.name[0] - 'A')];
    case ExprKind::kComplement: return complement(arg(0));
    case ExprKind::kUnion: { auto l = arg(0); return unite(l, arg(1)); }
    case ExprKind::kIntersect: { auto l = arg(0); return intersect(l, arg(1)); }
    case ExprKind::kDifference: { auto l = arg(0); return difference(l, arg(1)); }
    case ExprKind::kAdd: { auto l = arg(0); return add(l, arg(1)); }
    case ExprKind::kProd: { auto l = arg(0); return pointwise_product(l, arg(1)); }
    case ExprKind::kScale: return scalar_mul(e.scalar, arg(0));
    case ExprKind::kDiv: return scalar_div(arg(0), e.scalar);
    case ExprKind::kTruthFav: return truth_favorite(arg(0));
    case ExprKind::kFalseFav: return false_favorite(arg(0));
    default: break;
  }
  throw std::logic_error("not a set node");
}

inline Direct direct_eval(const dsl::Expr& e, const std::vector<DiscreteINS>& sets) {
  using dsl::ExprKind;
  switch (e.kind) {
    case ExprKind::kCart: { auto l = direct_set(e.args[0], sets); return cartesian_product(l, direct_set(e.args[1], sets)); }
    case ExprKind::kSubset: { auto l = direct_set(e.args[0], sets); return is_contained(l, direct_set(e.args[1], sets)); }
    case ExprKind::kEqual: { auto l = direct_set(e.args[0], sets); return equals(l, direct_set(e.args[1], sets)); }
    case ExprKind::kEmpty: return is_empty(direct_set(e.args[0], sets));
    default: return direct_set(e, sets);
  }
}

template <class Set>
bool identical(const Set& a, const Set& b) {
  return a.labels() == b.labels() && a.columns() == b.columns();
}

}  // namespace ins::test
