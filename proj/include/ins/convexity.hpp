#pragma once

// Interval neutrosophic sets over R^n and sampled convexity checks.
//
// Convexity here means: along every segment, both truth endpoints are
// quasi-concave and the four indeterminacy/falsity endpoints are
// quasi-convex. Strong convexity asks for strict inequalities at interior
// points of segments with distinct ends. The checkers can only falsify:
// a clean run reports "no-violation-found", never "convex".

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ins/interval.hpp"

namespace ins {

using Point = std::vector<double>;

/// Axis-aligned sampling domain, lo_i <= hi_i in every dimension.
class Box {
 public:
  /// Throws InvalidDomain for zero dimensions, NaN/infinite or unordered bounds.
  static Box make(std::vector<std::pair<double, double>> bounds);
  /// "LO:HI[,LO:HI...]"; throws InvalidDomain on malformed text.
  static Box parse(std::string_view text);

  std::size_t dimension() const { return bounds_.size(); }
  double lo(std::size_t d) const { return bounds_[d].first; }
  double hi(std::size_t d) const { return bounds_[d].second; }
  /// True when every dimension is a single point.
  bool degenerate() const;

 private:
  explicit Box(std::vector<std::pair<double, double>> b) : bounds_(std::move(b)) {}
  std::vector<std::pair<double, double>> bounds_;
};

/// Membership oracle on R^n. The oracle must be a pure function; the
/// checkers may call it any number of times in any order.
class FunctionalINS {
 public:
  using Membership = std::function<NeutrosophicValue(std::span<const double>)>;

  FunctionalINS(std::size_t dimension, Membership membership, std::string description = {});

  std::size_t dimension() const { return dimension_; }
  const std::string& description() const { return description_; }

  /// Throws DimensionMismatch when the point has the wrong arity.
  NeutrosophicValue operator()(std::span<const double> point) const;

 private:
  std::size_t dimension_;
  Membership membership_;
  std::string description_;
};

/// Pointwise intersection (min on T endpoints, max on I and F endpoints).
/// Throws DimensionMismatch for different dimensions.
FunctionalINS intersect_functional(const FunctionalINS& a, const FunctionalINS& b);

enum class Verdict { kNoViolationFound, kViolated };

std::string_view verdict_name(Verdict v);

struct Witness {
  Point x1;
  Point x2;
  double lambda = 0.0;
  Endpoint component = Endpoint::kInfT;
  /// Endpoint value at lambda*x1 + (1-lambda)*x2.
  double lhs = 0.0;
  /// min (truth) or max (indeterminacy, falsity) of the endpoint at x1, x2.
  double rhs = 0.0;
};

struct ConvexityReport {
  Verdict verdict = Verdict::kNoViolationFound;
  /// (x1, x2, lambda) evaluations performed, including the failing one.
  std::size_t samples_checked = 0;
  std::optional<Witness> witness;
};

struct CheckOptions {
  std::size_t trials = 1000;
  std::size_t lambda_grid = 11;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

/// Draws `trials` point pairs uniformly in the box and tests the six
/// inequalities on a uniform lambda grid over [0, 1] (endpoints included).
/// A comparison fails when it is off by more than `tol`. Stops at the first
/// failure in trial order. Throws InvalidDomain when the box does not match
/// the set's dimension and std::invalid_argument for trials < 1,
/// lambda_grid < 2 or tol < 0.
ConvexityReport check_convex(const FunctionalINS& set, const Box& domain,
                             const CheckOptions& options);

/// As check_convex with strict comparisons: pairs with x1 == x2 are redrawn,
/// the grid is k/(lambda_grid+1) for k = 1..lambda_grid, and a comparison
/// fails unless it holds with a margin greater than `tol`.
/// Throws InvalidDomain for a box with no extent.
ConvexityReport check_strongly_convex(const FunctionalINS& set, const Box& domain,
                                      const CheckOptions& options);

/// lambda*x1 + (1-lambda)*x2, coordinatewise.
Point segment_point(std::span<const double> x1, std::span<const double> x2, double lambda);

/// Whether `lhs` against `rhs` breaks the (strict) inequality for component `e`.
bool breaks_inequality(Endpoint e, double lhs, double rhs, double tol, bool strict);

/// The lambda values the checkers evaluate.
std::vector<double> lambda_values(std::size_t lambda_grid, bool strict);

}  // namespace ins
