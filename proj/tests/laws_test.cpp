#include <set>

#include "ins/errors.hpp"
#include "ins/laws.hpp"
#include "ins/operators.hpp"
#include "ins/random.hpp"
#include "test_support.hpp"

namespace ins {
namespace {

class EveryLaw : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryLaw, PassesOnSyntheticUniverses) {
  const LawResult r = check_law(GetParam(), LawOptions{});
  EXPECT_TRUE(r.passed) << render(r);
  EXPECT_FALSE(r.counterexample.has_value());
  EXPECT_GT(r.checks, 0u);
}

TEST_P(EveryLaw, PassesOnExampleUniverse) {
  LawOptions o;
  o.trials = 200;
  o.seed = 99;
  o.universes = {test::set_a().labels()};
  o.fixtures = {test::set_a(), test::set_b()};
  const LawResult r = check_law(GetParam(), o);
  EXPECT_TRUE(r.passed) << render(r);
}

std::vector<std::string> law_names() {
  std::vector<std::string> names;
  for (const auto& l : law_catalog()) names.emplace_back(l.name);
  return names;
}

INSTANTIATE_TEST_SUITE_P(Laws, EveryLaw, ::testing::ValuesIn(law_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

TEST(Laws, CatalogIsComplete) {
  const std::vector<std::string> names = law_names();
  EXPECT_EQ(names.size(), 17u);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  for (const char* n : {"commutativity", "associativity", "distributivity", "idempotency", "identity-absorber",
                        "favorite-additivity", "absorption", "demorgan", "involution", "lub", "glb",
                        "containment-complement", "favorite-inclusions"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
}

TEST(Laws, UnknownLawThrows) {
  EXPECT_THROW(check_law("commutative", LawOptions{}), UnknownLaw);
}

TEST(Laws, TrialCountsAreReported) {
  LawOptions o;
  o.trials = 37;
  EXPECT_EQ(check_law("demorgan", o).trials, 37u);
  EXPECT_EQ(check_law("involution", o).trials, 37u);
  // Stops at the first witness, which the first random set already gives.
  EXPECT_LT(check_law("excluded-middle-fails", o).trials, 37u);
}

TEST(Laws, Deterministic) {
  LawOptions o;
  o.trials = 300;
  o.seed = 5;
  const auto first = check_all(o);
  const auto second = check_all(o);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) EXPECT_EQ(render(first[i]), render(second[i]));
}

TEST(Laws, ExcludedMiddleWitnessedByExampleSet) {
  LawOptions o;
  o.trials = 1;
  o.fixtures = {test::set_a()};
  const LawResult r = check_law("excluded-middle-fails", o);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.trials, 1u);
}

TEST(Laws, ExcludedMiddleWithoutWitnessFails) {
  LawOptions o;
  o.trials = 1;
  o.fixtures = {DiscreteINS::uniform({"x"}, universal_value())};
  const LawResult r = check_law("excluded-middle-fails", o);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.counterexample.has_value());
  const std::string text = render(r);
  EXPECT_EQ(text.rfind("excluded-middle-fails: FAIL (1 trials, 1 checks)\n", 0), 0u) << text;
  EXPECT_NE(text.find("note: "), std::string::npos);
}

TEST(Laws, RenderPassLine) {
  LawOptions o;
  o.trials = 3;
  EXPECT_EQ(render(check_law("involution", o)), "involution: pass (3 trials, 3 checks)\n");
}

// Oracles below recompute the laws with direct endpoint arithmetic, not
// through the law engine.

NeutrosophicValue v6(const test::Row& r) { return NeutrosophicValue::from_endpoints(r); }

TEST(LawOracle, DifferenceIndeterminacyStaysOrdered) {
  Rng rng(1);
  for (int i = 0; i < 20000; ++i) {
    const auto u = numbered_universe(1 + rng.below(8));
    const DiscreteINS a = random_set(rng, u);
    const DiscreteINS b = random_set(rng, u);
    const DiscreteINS d = difference(a, b);
    for (std::size_t r = 0; r < u.size(); ++r) {
      const auto x = a.value(r).endpoints();
      const auto y = b.value(r).endpoints();
      const double lo = std::max(x[2], 1.0 - y[3]);
      const double hi = std::max(x[3], 1.0 - y[2]);
      ASSERT_LE(lo, hi);
      ASSERT_EQ(d.value(r).i.lo(), lo);
      ASSERT_EQ(d.value(r).i.hi(), hi);
    }
  }
}

TEST(LawOracle, UnionIsLeastUpperBoundOnValues) {
  Rng rng(2);
  for (int i = 0; i < 20000; ++i) {
    const auto a = random_value(rng);
    const auto b = random_value(rng);
    const auto ea = a.endpoints(), eb = b.endpoints();
    const test::Row j{std::max(ea[0], eb[0]), std::max(ea[1], eb[1]), std::min(ea[2], eb[2]),
                      std::min(ea[3], eb[3]), std::min(ea[4], eb[4]), std::min(ea[5], eb[5])};
    ASSERT_EQ(value::unite(a, b), v6(j));
    const auto d = random_superset(rng, v6(j));
    ASSERT_TRUE(value::is_contained(a, d) && value::is_contained(b, d));
    ASSERT_TRUE(value::is_contained(v6(j), d));
  }
}

TEST(LawOracle, FavoriteAdditivityWithinTolerance) {
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const auto u = numbered_universe(1 + rng.below(8));
    const DiscreteINS a = random_set(rng, u);
    const DiscreteINS b = random_set(rng, u);
    const DiscreteINS lhs = truth_favorite(add(a, b));
    for (std::size_t r = 0; r < u.size(); ++r) {
      const auto x = a.value(r).endpoints();
      const auto y = b.value(r).endpoints();
      const auto got = lhs.value(r).endpoints();
      for (int k = 0; k < 2; ++k) {
        const double want = std::min(std::min(x[k] + y[k], 1.0) + std::min(x[k + 2] + y[k + 2], 1.0), 1.0);
        ASSERT_NEAR(got[k], want, 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace ins
