#include <cmath>

#include "ins/convexity.hpp"
#include "ins/errors.hpp"
#include "ins/families.hpp"
#include "ins/random.hpp"
#include "test_support.hpp"

namespace ins {
namespace {

// Memberships written out directly, independent of the family library.

FunctionalINS triangle_1d() {
  return FunctionalINS(1, [](std::span<const double> x) {
    const double m = std::max(0.0, 1.0 - std::abs(x[0]));
    return NeutrosophicValue::make(0.8 * m, m, 0.5 * (1 - m), 1 - m, 0.5 * (1 - m), 1 - m);
  });
}

FunctionalINS bump_1d() {
  return FunctionalINS(1, [](std::span<const double> x) {
    const double g = std::exp(-x[0] * x[0]);
    return NeutrosophicValue::make(0.9 * g, g, 0.5 * (1 - g), 1 - g, 0.5 * (1 - g), 1 - g);
  });
}

FunctionalINS two_peaks_1d() {
  return FunctionalINS(1, [](std::span<const double> x) {
    const double m = std::min(1.0, std::max(0.0, 1.0 - std::abs(x[0] - 2)) +
                                       std::max(0.0, 1.0 - std::abs(x[0] + 2)));
    return NeutrosophicValue{UnitInterval::point(m), UnitInterval(), UnitInterval()};
  });
}

FunctionalINS flat(std::size_t dim) {
  return constant_set(dim, NeutrosophicValue::make(0.3, 0.6, 0.1, 0.2, 0.4, 0.4));
}

CheckOptions opts(std::uint64_t seed, std::size_t trials = 1000, std::size_t grid = 11) {
  CheckOptions o;
  o.seed = seed;
  o.trials = trials;
  o.lambda_grid = grid;
  return o;
}

bool is_truth(Endpoint e) { return e == Endpoint::kInfT || e == Endpoint::kSupT; }

// Exhaustive check on a 0.05 grid of x1, x2 and lambda.
bool dense_grid_convex(const FunctionalINS& s, double lo, double hi, bool strict, double tol) {
  const int n = static_cast<int>(std::lround((hi - lo) / 0.05));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (strict && i == j) continue;
      const double x1 = lo + 0.05 * i, x2 = lo + 0.05 * j;
      const auto a = s(std::vector<double>{x1}).endpoints();
      const auto b = s(std::vector<double>{x2}).endpoints();
      for (int k = strict ? 1 : 0; k <= (strict ? 19 : 20); ++k) {
        const double l = 0.05 * k;
        const auto c = s(std::vector<double>{l * x1 + (1 - l) * x2}).endpoints();
        for (std::size_t e = 0; e < kEndpointCount; ++e) {
          const bool truth = e < 2;
          const double bound = truth ? std::min(a[e], b[e]) : std::max(a[e], b[e]);
          const bool ok = strict ? (truth ? c[e] > bound + tol : c[e] < bound - tol)
                                 : (truth ? c[e] >= bound - tol : c[e] <= bound + tol);
          if (!ok) return false;
        }
      }
    }
  }
  return true;
}

void expect_sound_witness(const FunctionalINS& s, const ConvexityReport& r, double tol, bool strict) {
  ASSERT_EQ(r.verdict, Verdict::kViolated);
  ASSERT_TRUE(r.witness.has_value());
  const Witness& w = *r.witness;
  EXPECT_GT(w.lambda, 0.0);
  EXPECT_LT(w.lambda, 1.0);
  Point mid(w.x1.size());
  for (std::size_t d = 0; d < mid.size(); ++d) mid[d] = w.lambda * w.x1[d] + (1 - w.lambda) * w.x2[d];
  const double lhs = s(mid).endpoint(w.component);
  const double a = s(w.x1).endpoint(w.component);
  const double b = s(w.x2).endpoint(w.component);
  const double rhs = is_truth(w.component) ? std::min(a, b) : std::max(a, b);
  EXPECT_NEAR(lhs, w.lhs, 1e-12);
  EXPECT_NEAR(rhs, w.rhs, 1e-12);
  if (strict) {
    EXPECT_TRUE(is_truth(w.component) ? lhs <= rhs + tol : lhs >= rhs - tol);
  } else {
    EXPECT_TRUE(is_truth(w.component) ? lhs < rhs - tol : lhs > rhs + tol);
  }
}

TEST(Box, ParseAndValidate) {
  const Box b = Box::parse("-2:2,0:1.5");
  ASSERT_EQ(b.dimension(), 2u);
  EXPECT_EQ(b.lo(0), -2.0);
  EXPECT_EQ(b.hi(1), 1.5);
  EXPECT_FALSE(b.degenerate());
  EXPECT_TRUE(Box::parse("1:1").degenerate());
  for (const char* bad : {"", "1", "2:1", "a:b", "0:1,", "0:1:2", "nan:1", "0:inf"})
    EXPECT_THROW(Box::parse(bad), InvalidDomain) << bad;
  EXPECT_THROW(Box::make({}), InvalidDomain);
}

TEST(FunctionalSet, DimensionChecked) {
  const FunctionalINS s = flat(2);
  EXPECT_THROW(s(std::vector<double>{1.0}), DimensionMismatch);
  EXPECT_THROW(intersect_functional(flat(1), flat(2)), DimensionMismatch);
  EXPECT_THROW(check_convex(s, Box::parse("0:1"), opts(0)), InvalidDomain);
}

TEST(FunctionalSet, IntersectionIsPointwise) {
  const FunctionalINS a = triangular_set({0.0}, 1.0);
  const FunctionalINS b = triangular_set({0.5}, 1.0);
  const FunctionalINS c = intersect_functional(a, b);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const std::vector<double> p{rng.uniform(-2, 2)};
    EXPECT_EQ(c(p), value::intersect(a(p), b(p)));
    EXPECT_EQ(intersect_functional(a, a)(p), a(p));
  }
}

TEST(FunctionalSet, IntersectWithEmptyIsEmpty) {
  const FunctionalINS e = constant_set(1, empty_value());
  const FunctionalINS c = intersect_functional(triangular_set({0.0}, 1.0), e);
  for (double x : {-1.5, -0.2, 0.0, 0.7}) EXPECT_EQ(c(std::vector<double>{x}), empty_value());
}

TEST(Options, Validated) {
  const FunctionalINS s = flat(1);
  const Box b = Box::parse("0:1");
  EXPECT_THROW(check_convex(s, b, opts(0, 0)), std::invalid_argument);
  EXPECT_THROW(check_convex(s, b, opts(0, 10, 1)), std::invalid_argument);
  CheckOptions neg = opts(0);
  neg.tol = -1;
  EXPECT_THROW(check_convex(s, b, neg), std::invalid_argument);
  EXPECT_THROW(check_strongly_convex(s, Box::parse("1:1"), opts(0)), InvalidDomain);
}

TEST(LambdaGrid, Values) {
  EXPECT_EQ(lambda_values(3, false), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(lambda_values(3, true), (std::vector<double>{0.25, 0.5, 0.75}));
  EXPECT_EQ(lambda_values(11, false).size(), 11u);
}

TEST(Inequality, Direction) {
  EXPECT_TRUE(breaks_inequality(Endpoint::kInfT, 0.1, 0.2, 1e-9, false));
  EXPECT_FALSE(breaks_inequality(Endpoint::kInfT, 0.2, 0.2, 1e-9, false));
  EXPECT_TRUE(breaks_inequality(Endpoint::kInfT, 0.2, 0.2, 1e-9, true));
  EXPECT_TRUE(breaks_inequality(Endpoint::kSupF, 0.3, 0.2, 1e-9, false));
  EXPECT_FALSE(breaks_inequality(Endpoint::kSupI, 0.1, 0.2, 1e-9, true));
  EXPECT_TRUE(breaks_inequality(Endpoint::kSupI, 0.2, 0.2 + 1e-10, 1e-9, true));
}

TEST(Convex, TriangleHasNoViolation) {
  const auto r = check_convex(triangle_1d(), Box::parse("-2:2"), opts(42));
  EXPECT_EQ(r.verdict, Verdict::kNoViolationFound);
  EXPECT_EQ(r.samples_checked, 11000u);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Convex, TriangleDenseGridOracle) {
  EXPECT_TRUE(dense_grid_convex(triangle_1d(), -2, 2, false, 1e-9));
  EXPECT_FALSE(dense_grid_convex(triangle_1d(), -2, 2, true, 1e-9));
}

TEST(Convex, ConstantHasNoViolation) {
  EXPECT_EQ(check_convex(flat(1), Box::parse("-3:3"), opts(1)).verdict, Verdict::kNoViolationFound);
  EXPECT_EQ(check_convex(flat(3), Box::parse("-1:1,0:2,5:6"), opts(1)).verdict, Verdict::kNoViolationFound);
}

TEST(Convex, TwoPeaksViolated) {
  const FunctionalINS s = two_peaks_1d();
  const auto r = check_convex(s, Box::parse("-3:3"), opts(0));
  expect_sound_witness(s, r, 1e-9, false);
  EXPECT_FALSE(dense_grid_convex(s, -3, 3, false, 1e-9));
}

TEST(Convex, TwoPeaksHandWitness) {
  const FunctionalINS s = two_peaks_1d();
  EXPECT_EQ(s(std::vector<double>{0.0}).t.lo(), 0.0);
  EXPECT_EQ(s(std::vector<double>{-2.0}).t.lo(), 1.0);
  EXPECT_EQ(s(std::vector<double>{2.0}).t.lo(), 1.0);
  EXPECT_TRUE(breaks_inequality(Endpoint::kInfT, 0.0, 1.0, 1e-9, false));
}

TEST(Convex, TwoPeaksFoundForMostSeeds) {
  const FunctionalINS s = two_peaks_1d();
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
    found += check_convex(s, Box::parse("-3:3"), opts(seed)).verdict == Verdict::kViolated ? 1 : 0;
  EXPECT_GE(found, 95);
}

TEST(Convex, NeverWitnessesAtSegmentEnds) {
  Rng rng(8);
  const Box box = Box::parse("-3:3");
  for (int i = 0; i < 200; ++i) {
    const FunctionalINS s = bimodal_set(1, rng.uniform(2.5, 5.0));
    const auto r = check_convex(s, box, opts(rng.next(), 50, 2 + rng.below(10)));
    if (r.witness) {
      EXPECT_GT(r.witness->lambda, 0.0);
      EXPECT_LT(r.witness->lambda, 1.0);
    }
  }
}

TEST(Convex, Deterministic) {
  const FunctionalINS s = two_peaks_1d();
  for (std::uint64_t seed : {0u, 3u, 77u}) {
    const auto a = check_convex(s, Box::parse("-3:3"), opts(seed));
    const auto b = check_convex(s, Box::parse("-3:3"), opts(seed));
    EXPECT_EQ(a.samples_checked, b.samples_checked);
    ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
    if (a.witness) {
      EXPECT_EQ(a.witness->x1, b.witness->x1);
      EXPECT_EQ(a.witness->x2, b.witness->x2);
      EXPECT_EQ(a.witness->lambda, b.witness->lambda);
      EXPECT_EQ(a.witness->component, b.witness->component);
    }
  }
}

TEST(Convex, SampleCountStopsAtFirstViolation) {
  const auto r = check_convex(two_peaks_1d(), Box::parse("-3:3"), opts(0));
  ASSERT_EQ(r.verdict, Verdict::kViolated);
  EXPECT_LT(r.samples_checked, 11000u);
  EXPECT_GE(r.samples_checked, 1u);
}

TEST(Strong, BumpHasNoViolation) {
  const auto r = check_strongly_convex(bump_1d(), Box::parse("-1:1"), opts(0));
  EXPECT_EQ(r.verdict, Verdict::kNoViolationFound);
  EXPECT_EQ(r.samples_checked, 11000u);
  EXPECT_TRUE(dense_grid_convex(bump_1d(), -1, 1, true, 1e-9));
}

TEST(Strong, ConstantViolated) {
  const FunctionalINS s = flat(1);
  const auto r = check_strongly_convex(s, Box::parse("-3:3"), opts(0));
  expect_sound_witness(s, r, 1e-9, true);
  EXPECT_EQ(r.samples_checked, 1u);
}

TEST(Strong, TriangleViolated) {
  const FunctionalINS s = triangle_1d();
  const auto r = check_strongly_convex(s, Box::parse("-2:2"), opts(42));
  expect_sound_witness(s, r, 1e-9, true);
}

TEST(Strong, TriangleFlatRegionByHand) {
  const FunctionalINS s = triangle_1d();
  const double v1 = s(std::vector<double>{1.2}).t.lo();
  const double v2 = s(std::vector<double>{1.8}).t.lo();
  const double mid = s(std::vector<double>{1.5}).t.lo();
  EXPECT_EQ(v1, 0.0);
  EXPECT_EQ(v2, 0.0);
  EXPECT_EQ(mid, 0.0);
  EXPECT_TRUE(breaks_inequality(Endpoint::kInfT, mid, std::min(v1, v2), 1e-9, true));
}

TEST(Strong, DistinctPointsOnly) {
  const Box box = Box::parse("0:1,2:2");
  const auto r = check_strongly_convex(flat(2), box, opts(3));
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->x1, r.witness->x2);
  EXPECT_EQ(r.witness->x1[1], 2.0);
}

TEST(Intersection, ConvexPairsStayConvex) {
  Rng rng(2024);
  const Box box = Box::parse("-3:3,-3:3");
  for (int i = 0; i < 30; ++i) {
    const FunctionalINS c =
        intersect_functional(random_convex_family(rng, box), random_convex_family(rng, box));
    const auto r = check_convex(c, box, opts(rng.next()));
    EXPECT_EQ(r.verdict, Verdict::kNoViolationFound) << c.description();
  }
}

TEST(Intersection, StronglyConvexPairsStayStronglyConvex) {
  Rng rng(2025);
  const Box box = Box::parse("-2:2");
  for (int i = 0; i < 30; ++i) {
    const FunctionalINS c = intersect_functional(random_strongly_convex_family(rng, box),
                                                 random_strongly_convex_family(rng, box));
    const auto r = check_strongly_convex(c, box, opts(rng.next()));
    EXPECT_EQ(r.verdict, Verdict::kNoViolationFound) << c.description();
  }
}

}  // namespace
}  // namespace ins
