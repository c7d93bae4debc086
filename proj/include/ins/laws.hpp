#pragma once

// Randomized checkers for the algebraic laws of the set operators.
//
// Each law runs `trials` independent trials. A trial draws operand sets on
// one universe and evaluates every identity, inclusion or implication the
// law states; the first failure is kept as a counterexample. Laws built
// only from min/max/copy compare exactly, laws involving +, * or 1 - x
// compare endpoints within `tol`.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ins/discrete_set.hpp"

namespace ins {

struct LawInfo {
  std::string_view name;
  std::string_view summary;
};

/// Every law, in the order `check_all` runs them.
std::span<const LawInfo> law_catalog();

struct LawOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-12;
  /// Universes to draw operands on, cycled per trial. Empty selects
  /// synthetic universes x1..xn with n uniform in 1..8.
  std::vector<std::vector<std::string>> universes;
  /// Sets used verbatim as operands in the first trial over their universe.
  std::vector<DiscreteINS> fixtures;
};

struct Counterexample {
  std::size_t trial = 0;
  std::string check;
  /// Failing element; empty for whole-set predicates.
  std::string label;
  std::optional<NeutrosophicValue> lhs;
  std::optional<NeutrosophicValue> rhs;
  /// Operand values at `label`.
  std::vector<std::pair<std::string, NeutrosophicValue>> operands;
  std::string note;
};

struct LawResult {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::optional<Counterexample> counterexample;
};

/// Throws UnknownLaw for a name outside law_catalog().
LawResult check_law(std::string_view name, const LawOptions& options);
std::vector<LawResult> check_all(const LawOptions& options);

/// Multi-line text rendering; the first line is "NAME: pass|FAIL ...".
std::string render(const LawResult& result);

}  // namespace ins
