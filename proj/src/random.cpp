#include "ins/random.hpp"

#include <algorithm>

namespace ins {

namespace {

// Draw a pair lo <= hi with lo in [lo_min, lo_max] and hi in [max(lo, hi_min), hi_max].
// Callers guarantee lo_min <= lo_max and hi_min <= hi_max and lo_min <= hi_max.
std::pair<double, double> draw_ordered(Rng& rng, double lo_min, double lo_max, double hi_min,
                                       double hi_max) {
  const double lo = rng.uniform(lo_min, std::min(lo_max, hi_max));
  const double hi = rng.uniform(std::max(lo, hi_min), hi_max);
  return {lo, hi};
}

// Raise both endpoints of [lo, hi] (truth side).
UnitInterval above(Rng& rng, double lo, double hi) {
  auto [l, h] = draw_ordered(rng, lo, 1.0, hi, 1.0);
  return UnitInterval::make(l, h);
}

// Lower both endpoints of [lo, hi] (indeterminacy and falsity side).
UnitInterval below(Rng& rng, double lo, double hi) {
  const double h = rng.uniform(0.0, hi);
  const double l = rng.uniform(0.0, std::min(lo, h));
  return UnitInterval::make(l, h);
}

template <class Fn>
DiscreteINS map_rows(const DiscreteINS& a, Fn fn) {
  std::vector<NeutrosophicValue> values;
  values.reserve(a.size());
  for (std::size_t row = 0; row < a.size(); ++row) values.push_back(fn(row));
  return DiscreteINS(a.labels(), values);
}

}  // namespace

UnitInterval random_interval(Rng& rng) {
  double x = rng.uniform();
  double y = rng.uniform();
  if (y < x) std::swap(x, y);
  return UnitInterval::make(x, y);
}

NeutrosophicValue random_value(Rng& rng) {
  const UnitInterval t = random_interval(rng);
  const UnitInterval i = random_interval(rng);
  const UnitInterval f = random_interval(rng);
  return {t, i, f};
}

DiscreteINS random_set(Rng& rng, const std::vector<std::string>& universe) {
  std::vector<NeutrosophicValue> values;
  values.reserve(universe.size());
  for (std::size_t k = 0; k < universe.size(); ++k) values.push_back(random_value(rng));
  return DiscreteINS(universe, values);
}

NeutrosophicValue random_superset(Rng& rng, const NeutrosophicValue& v) {
  const UnitInterval t = above(rng, v.t.lo(), v.t.hi());
  const UnitInterval i = below(rng, v.i.lo(), v.i.hi());
  const UnitInterval f = below(rng, v.f.lo(), v.f.hi());
  return {t, i, f};
}

NeutrosophicValue random_subset(Rng& rng, const NeutrosophicValue& v) {
  const NeutrosophicValue flipped{below(rng, v.t.lo(), v.t.hi()), above(rng, v.i.lo(), v.i.hi()),
                                  above(rng, v.f.lo(), v.f.hi())};
  return flipped;
}

DiscreteINS random_superset(Rng& rng, const DiscreteINS& a) {
  return map_rows(a, [&](std::size_t row) { return random_superset(rng, a.value(row)); });
}

DiscreteINS random_subset(Rng& rng, const DiscreteINS& a) {
  return map_rows(a, [&](std::size_t row) { return random_subset(rng, a.value(row)); });
}

DiscreteINS random_upper_bound(Rng& rng, const DiscreteINS& a, const DiscreteINS& b) {
  return map_rows(a, [&](std::size_t row) {
    const NeutrosophicValue x = a.value(row);
    const NeutrosophicValue y = b.at(a.label(row));
    const UnitInterval t =
        above(rng, std::max(x.t.lo(), y.t.lo()), std::max(x.t.hi(), y.t.hi()));
    const UnitInterval i =
        below(rng, std::min(x.i.lo(), y.i.lo()), std::min(x.i.hi(), y.i.hi()));
    const UnitInterval f =
        below(rng, std::min(x.f.lo(), y.f.lo()), std::min(x.f.hi(), y.f.hi()));
    return NeutrosophicValue{t, i, f};
  });
}

DiscreteINS random_lower_bound(Rng& rng, const DiscreteINS& a, const DiscreteINS& b) {
  return map_rows(a, [&](std::size_t row) {
    const NeutrosophicValue x = a.value(row);
    const NeutrosophicValue y = b.at(a.label(row));
    const UnitInterval t =
        below(rng, std::min(x.t.lo(), y.t.lo()), std::min(x.t.hi(), y.t.hi()));
    const UnitInterval i =
        above(rng, std::max(x.i.lo(), y.i.lo()), std::max(x.i.hi(), y.i.hi()));
    const UnitInterval f =
        above(rng, std::max(x.f.lo(), y.f.lo()), std::max(x.f.hi(), y.f.hi()));
    return NeutrosophicValue{t, i, f};
  });
}

}  // namespace ins
