#pragma once

// Text format for discrete sets:
//
//   # comment lines start with '#'
//   set A
//     x1 : [0.2,0.4] [0.3,0.5] [0.3,0.5]
//     x2 : [0.5,0.7] [0.0,0.2] [0.2,0.3]
//   end
//
// One element per line, T I F intervals in that order. Element order is
// preserved. Labels are any run of characters other than whitespace, ':',
// '[', ']' and '#'; paired sets write theirs as "(x,y)". Numbers are plain
// decimals.

#include <string>
#include <string_view>

#include "ins/discrete_set.hpp"
#include "ins/dsl/environment.hpp"
#include "ins/dsl/source_error.hpp"
#include "json.hpp"

namespace ins::dsl {

inline constexpr int kDefaultPrecision = 10;

/// Throws SourceError (kLexError / kParseError) with the offending position;
/// invalid intervals, duplicate set names and duplicate labels are
/// kParseError.
Environment parse_sets(std::string_view text);

/// Canonical block for one set. `precision` is the number of significant
/// digits (1..17); trailing zeros are dropped but one fractional digit is
/// always written. Throws std::invalid_argument for an out-of-range precision.
std::string format_set(std::string_view name, const DiscreteINS& set,
                       int precision = kDefaultPrecision);
std::string format_set(std::string_view name, const PairedINS& set,
                       int precision = kDefaultPrecision);
/// All bound sets, blocks separated by a blank line.
std::string format_sets(const Environment& env, int precision = kDefaultPrecision);

/// {"name": ..., "elements": [{"label", "T": [lo,hi], "I": [...], "F": [...]}]}.
/// Endpoints are rounded to `precision` significant digits.
nlohmann::json to_json(std::string_view name, const DiscreteINS& set,
                       int precision = kDefaultPrecision);
nlohmann::json to_json(std::string_view name, const PairedINS& set,
                       int precision = kDefaultPrecision);

/// `v` with `precision` significant digits in positional notation.
std::string format_endpoint(double v, int precision);

}  // namespace ins::dsl
