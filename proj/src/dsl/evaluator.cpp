#include "ins/dsl/evaluator.hpp"

#include "ins/errors.hpp"
#include "ins/operators.hpp"

namespace ins::dsl {

namespace {

std::string_view node_name(ExprKind kind) {
  switch (kind) {
    case ExprKind::kIdent: return "identifier";
    case ExprKind::kComplement: return "'~'";
    case ExprKind::kUnion: return "'|'";
    case ExprKind::kIntersect: return "'&'";
    case ExprKind::kDifference: return "'\\'";
    case ExprKind::kAdd: return "'+'";
    case ExprKind::kCart: return "cart";
    case ExprKind::kProd: return "prod";
    case ExprKind::kScale: return "scale";
    case ExprKind::kDiv: return "div";
    case ExprKind::kTruthFav: return "tf";
    case ExprKind::kFalseFav: return "ff";
    case ExprKind::kSubset: return "subset";
    case ExprKind::kEqual: return "eq";
    case ExprKind::kEmpty: return "empty";
  }
  return "node";
}

class Evaluator {
 public:
  explicit Evaluator(const Environment& env) : env_(env) {}

  Value eval(const Expr& e) {
    try {
      return dispatch(e);
    } catch (const UniverseMismatch& err) {
      throw SourceError(ErrorKind::kUniverseMismatch, e.pos,
                        std::string(node_name(e.kind)) + ": " + err.what());
    } catch (const NonPositiveScalar& err) {
      throw SourceError(ErrorKind::kNonPositiveScalar, e.pos, err.what());
    }
  }

 private:
  /// Operand `index` of `e`, which must evaluate to a plain set.
  DiscreteINS operand(const Expr& e, std::size_t index) {
    const Expr& arg = e.args[index];
    Value v = eval(arg);
    if (auto* set = std::get_if<DiscreteINS>(&v)) return std::move(*set);
    const char* what = std::holds_alternative<bool>(v) ? "a boolean" : "a paired set";
    throw SourceError(ErrorKind::kTypeMismatch, arg.pos,
                      std::string(node_name(e.kind)) + " expects a set operand, got " + what);
  }

  // Operands are evaluated left to right so the reported error is stable.
  template <class Fn>
  Value both(const Expr& e, Fn fn) {
    DiscreteINS lhs = operand(e, 0);
    DiscreteINS rhs = operand(e, 1);
    return fn(lhs, rhs);
  }

  Value dispatch(const Expr& e) {
    switch (e.kind) {
      case ExprKind::kIdent: {
        const DiscreteINS* set = env_.find(e.name);
        if (!set)
          throw SourceError(ErrorKind::kUnknownIdentifier, e.pos, "unknown set '" + e.name + "'");
        return *set;
      }
      case ExprKind::kComplement: return complement(operand(e, 0));
      case ExprKind::kUnion:
        return both(e, [](const DiscreteINS& l, const DiscreteINS& r) { return Value(unite(l, r)); });
      case ExprKind::kIntersect:
        return both(e, [](const DiscreteINS& l, const DiscreteINS& r) { return Value(intersect(l, r)); });
      case ExprKind::kDifference:
        return both(e, [](const DiscreteINS& l, const DiscreteINS& r) { return Value(difference(l, r)); });
      case ExprKind::kAdd:
        return both(e, [](const DiscreteINS& l, const DiscreteINS& r) { return Value(add(l, r)); });
      case ExprKind::kCart:
        return both(e, [](const DiscreteINS& l, const DiscreteINS& r) { return Value(cartesian_product(l, r)); });
      case ExprKind::kProd:
        return both(e, [](const DiscreteINS& l, const DiscreteINS& r) { return Value(pointwise_product(l, r)); });
      case ExprKind::kScale: return scalar_mul(e.scalar, operand(e, 0));
      case ExprKind::kDiv: return scalar_div(operand(e, 0), e.scalar);
      case ExprKind::kTruthFav: return truth_favorite(operand(e, 0));
      case ExprKind::kFalseFav: return false_favorite(operand(e, 0));
      case ExprKind::kSubset:
        return both(e, [](const DiscreteINS& l, const DiscreteINS& r) { return Value(is_contained(l, r)); });
      case ExprKind::kEqual:
        return both(e, [](const DiscreteINS& l, const DiscreteINS& r) { return Value(equals(l, r)); });
      case ExprKind::kEmpty: return is_empty(operand(e, 0));
    }
    throw SourceError(ErrorKind::kTypeMismatch, e.pos, "unsupported expression node");
  }

  const Environment& env_;
};

}  // namespace

Value evaluate(const Expr& e, const Environment& env) { return Evaluator(env).eval(e); }

}  // namespace ins::dsl
