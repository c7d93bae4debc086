#pragma once

// Set-theoretic operators on discrete interval neutrosophic sets.
//
// Binary operators other than cartesian_product require both operands to be
// defined over the same universe (label order may differ) and throw
// UniverseMismatch otherwise. Results follow the left operand's order.

#include "ins/discrete_set.hpp"

namespace ins {

/// T <- F, I <- [1 - sup I, 1 - inf I], F <- T.
DiscreteINS complement(const DiscreteINS& a);

/// True iff T_a <= T_b and I_a >= I_b and F_a >= F_b on every endpoint of
/// every element.
bool is_contained(const DiscreteINS& a, const DiscreteINS& b);

/// Mutual containment, i.e. identical endpoints everywhere.
bool equals(const DiscreteINS& a, const DiscreteINS& b);

/// Every element is ⟨[0,0],[1,1],[1,1]⟩. Vacuously true on an empty universe.
bool is_empty(const DiscreteINS& a);

/// Max on T endpoints, min on I and F endpoints.
DiscreteINS unite(const DiscreteINS& a, const DiscreteINS& b);

/// Min on T endpoints, max on I and F endpoints.
DiscreteINS intersect(const DiscreteINS& a, const DiscreteINS& b);

/// T = min(T_a, F_b), I = [max(inf I_a, 1 - sup I_b), max(sup I_a, 1 - inf I_b)],
/// F = max(F_a, T_b).
DiscreteINS difference(const DiscreteINS& a, const DiscreteINS& b);

/// Endpointwise min(a + b, 1) on all three components.
DiscreteINS add(const DiscreteINS& a, const DiscreteINS& b);

/// Set over X1 x X2 (row-major: every y for the first x, then the next x).
/// T endpoints combine by probabilistic sum, I and F endpoints by product
/// (inf with inf, sup with sup).
PairedINS cartesian_product(const DiscreteINS& a, const DiscreteINS& b);

/// The cartesian product formulas applied at each shared element (the
/// diagonal of the product).
DiscreteINS pointwise_product(const DiscreteINS& a, const DiscreteINS& b);

/// Endpointwise min(v * k, 1). Throws NonPositiveScalar unless k > 0.
DiscreteINS scalar_mul(double k, const DiscreteINS& a);

/// Endpointwise min(v / k, 1). Throws NonPositiveScalar unless k > 0.
DiscreteINS scalar_div(const DiscreteINS& a, double k);

/// T <- min(T + I, 1), I <- [0,0], F unchanged.
DiscreteINS truth_favorite(const DiscreteINS& a);

/// F <- min(F + I, 1), I <- [0,0], T unchanged.
DiscreteINS false_favorite(const DiscreteINS& a);

/// Swap the components of every pair label.
PairedINS transpose(const PairedINS& p);

/// Exact endpoint equality for paired sets, ignoring element order.
bool equals(const PairedINS& a, const PairedINS& b);

}  // namespace ins
