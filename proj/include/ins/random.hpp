#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ins/discrete_set.hpp"

namespace ins {

/// Seeded generator with a platform-stable stream.
///
/// Raw draws come from std::mt19937_64, whose output sequence is fixed by
/// the standard. Doubles are built from the top 53 bits, integers by
/// modulo reduction, so the same seed yields the same values everywhere
/// (the std distributions give no such guarantee).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform on [lo, hi]; returns lo when the range is empty.
  double uniform(double lo, double hi) {
    const double x = lo + (hi - lo) * uniform();
    return x > hi ? hi : x;
  }
  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Interval from a sorted pair of uniform draws.
UnitInterval random_interval(Rng& rng);
NeutrosophicValue random_value(Rng& rng);
DiscreteINS random_set(Rng& rng, const std::vector<std::string>& universe);

/// A value containing `v`: T endpoints no smaller, I and F endpoints no
/// larger, each drawn uniformly from the admissible range.
NeutrosophicValue random_superset(Rng& rng, const NeutrosophicValue& v);
/// A value contained in `v`.
NeutrosophicValue random_subset(Rng& rng, const NeutrosophicValue& v);
DiscreteINS random_superset(Rng& rng, const DiscreteINS& a);
DiscreteINS random_subset(Rng& rng, const DiscreteINS& a);

/// A set containing both `a` and `b`, drawn above the endpointwise bounds
/// without going through the set operators.
DiscreteINS random_upper_bound(Rng& rng, const DiscreteINS& a, const DiscreteINS& b);
/// A set contained in both `a` and `b`.
DiscreteINS random_lower_bound(Rng& rng, const DiscreteINS& a, const DiscreteINS& b);

}  // namespace ins
