#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace ins {

/// Closed subinterval [lo, hi] of [0, 1].
///
/// Only `make` can build one, so every live value satisfies
/// 0 <= lo <= hi <= 1. A negative zero endpoint is stored as +0.
class UnitInterval {
 public:
  /// The degenerate interval [0, 0].
  constexpr UnitInterval() = default;

  /// Throws InvalidInterval unless 0 <= lo <= hi <= 1 (NaN rejected).
  static UnitInterval make(double lo, double hi);
  static UnitInterval point(double v) { return make(v, v); }

  constexpr double lo() const { return lo_; }
  constexpr double hi() const { return hi_; }

  friend constexpr bool operator==(const UnitInterval&, const UnitInterval&) = default;

 private:
  constexpr UnitInterval(double lo, double hi) : lo_(lo), hi_(hi) {}

  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// The six scalar endpoints of a neutrosophic value, in storage order.
enum class Endpoint : std::size_t { kInfT = 0, kSupT, kInfI, kSupI, kInfF, kSupF };

inline constexpr std::size_t kEndpointCount = 6;
inline constexpr std::array<Endpoint, kEndpointCount> kAllEndpoints = {
    Endpoint::kInfT, Endpoint::kSupT, Endpoint::kInfI,
    Endpoint::kSupI, Endpoint::kInfF, Endpoint::kSupF};

/// "infT", "supT", ... as used in reports.
std::string_view endpoint_name(Endpoint e);

/// Truth, indeterminacy and falsity memberships of one element. The three
/// components are independent; nothing ties their sum to 1.
struct NeutrosophicValue {
  UnitInterval t;
  UnitInterval i;
  UnitInterval f;

  /// Throws InvalidInterval if any of the pairs is malformed.
  static NeutrosophicValue make(double t_lo, double t_hi, double i_lo, double i_hi,
                                double f_lo, double f_hi);
  /// Rebuild from endpoints laid out in Endpoint order.
  static NeutrosophicValue from_endpoints(const std::array<double, kEndpointCount>& e);

  std::array<double, kEndpointCount> endpoints() const;
  double endpoint(Endpoint e) const { return endpoints()[static_cast<std::size_t>(e)]; }

  friend constexpr bool operator==(const NeutrosophicValue&, const NeutrosophicValue&) = default;
};

/// ⟨[0,0],[1,1],[1,1]⟩, the absorbing element of intersection.
NeutrosophicValue empty_value();
/// ⟨[1,1],[0,0],[0,0]⟩, the absorbing element of union.
NeutrosophicValue universal_value();

/// "<[0.2,0.4],[0.3,0.5],[0.3,0.5]>" with shortest round-trip digits.
std::string to_string(const NeutrosophicValue& v);

// Value-level operators. The set-level operators in operators.hpp apply
// these elementwise (through the vector kernels).
namespace value {

NeutrosophicValue complement(const NeutrosophicValue& a);
NeutrosophicValue unite(const NeutrosophicValue& a, const NeutrosophicValue& b);
NeutrosophicValue intersect(const NeutrosophicValue& a, const NeutrosophicValue& b);
bool is_contained(const NeutrosophicValue& a, const NeutrosophicValue& b);

}  // namespace value

}  // namespace ins
