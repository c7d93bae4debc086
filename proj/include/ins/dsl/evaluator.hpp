#pragma once

#include <variant>

#include "ins/discrete_set.hpp"
#include "ins/dsl/environment.hpp"
#include "ins/dsl/expr.hpp"

namespace ins::dsl {

using Value = std::variant<DiscreteINS, PairedINS, bool>;

/// Bottom-up evaluation over the ins operators. Errors carry the position
/// of the offending node: kUnknownIdentifier for unbound names,
/// kUniverseMismatch for operands over different universes,
/// kTypeMismatch when a paired set or boolean is used as a set operand,
/// kNonPositiveScalar for scale/div by k <= 0.
Value evaluate(const Expr& e, const Environment& env);

}  // namespace ins::dsl
