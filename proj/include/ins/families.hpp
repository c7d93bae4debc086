#pragma once

// Parametric families of functional interval neutrosophic sets.
//
// Every family is built from a scalar profile m: R^n -> [0,1] and a Shape:
//
//   T = [a*m, m],  I = [b*(1-m), 1-m],  F = [c*(1-m)^p, (1-m)^p]
//
// with a, b, c in [0,1] and p > 0. Multiplying by a non-negative constant
// and raising to a positive power are non-decreasing maps of [0,1], so if m
// is quasi-concave then both T endpoints are quasi-concave and, because
// 1-m is then quasi-convex, all I and F endpoints are quasi-convex. The
// same maps are strictly increasing when a, b, c > 0, so a strictly
// quasi-concave m gives a strongly convex set.
//
// Profiles:
//   triangular  m = max(0, 1 - |x-c|/w). |x-c| is convex, so the superlevel
//               sets {m >= t} are balls: quasi-concave, flat (m = 0) outside
//               the support, hence convex but not strongly convex.
//   trapezoid   m = clamp((w - |x-c|) / (w - p), 0, 1), p < w: as above with
//               a plateau of radius p.
//   gaussian    m = exp(-|x-c|^2 / s^2). |x-c|^2 is strictly convex, so
//               m(mid) > min(m(x1), m(x2)) whenever x1 != x2: strictly
//               quasi-concave, hence strongly convex for a, b, c > 0.
//   bimodal     m = min(1, tri(x - e) + tri(x + e)) with e = (sep/2, 0, ...),
//               T = [m, m], I = F = [0, 0]. Not convex once sep > 2: the
//               segment between the two peaks dips to 0.
//   constant    T, I, F fixed degenerate intervals. Convex, never strongly.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ins/convexity.hpp"

namespace ins {

class Rng;

struct Shape {
  double truth_floor = 0.8;
  double indeterminacy_floor = 0.5;
  double falsity_floor = 0.5;
  double falsity_power = 1.0;
};

/// Neutrosophic value for profile level m under `shape`.
NeutrosophicValue shaped_value(double m, const Shape& shape);

FunctionalINS triangular_set(Point center, double width, const Shape& shape = {});
FunctionalINS trapezoid_set(Point center, double width, double plateau, const Shape& shape = {});
FunctionalINS gaussian_set(Point center, double sigma,
                           const Shape& shape = {0.9, 0.5, 0.5, 1.0});
FunctionalINS bimodal_set(std::size_t dimension, double separation);
FunctionalINS constant_set(std::size_t dimension, const NeutrosophicValue& v);

/// Parsed "name(p1,p2,...)".
struct FamilySpec {
  std::string name;
  std::vector<double> params;
};

/// Throws UnknownFamily on malformed text.
FamilySpec parse_family_spec(std::string_view text);

/// Instantiate a built-in family in R^dimension. Scalar centers are
/// broadcast to every coordinate. Known families and parameters:
///   triangular(center, width)            width > 0
///   trapezoid(center, width, plateau)    0 <= plateau < width
///   gaussian(center, sigma)              sigma > 0
///   bimodal(separation)                  separation >= 0
///   constant(t, i, f)                    each in [0,1]
/// Throws UnknownFamily for unknown names, wrong arity or bad parameters.
FunctionalINS make_family(const FamilySpec& spec, std::size_t dimension);

/// Names accepted by make_family.
std::vector<std::string> family_names();

/// Random convex instance (triangular or trapezoid profile) with its center
/// inside `domain`.
FunctionalINS random_convex_family(Rng& rng, const Box& domain);

/// Random strongly convex instance (gaussian profile, positive floors) with
/// its center in the middle half of `domain` and sigma tied to the box size
/// so the profile stays well above underflow.
FunctionalINS random_strongly_convex_family(Rng& rng, const Box& domain);

}  // namespace ins
