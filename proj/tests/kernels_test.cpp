#include <cstring>
#include <functional>
#include <stdexcept>

#include "ins/kernels.hpp"
#include "ins/operators.hpp"
#include "ins/random.hpp"
#include "test_support.hpp"

namespace ins {
namespace {

using kernels::KernelTable;

const KernelTable& simd_or_skip() {
  static const KernelTable* t = kernels::isa_supported(kernels::Isa::kAvx2) ? kernels::avx2_table() : nullptr;
  return *t;
}

#define REQUIRE_AVX2()                                                          \
  if (!kernels::isa_supported(kernels::Isa::kAvx2)) GTEST_SKIP() << "no AVX2"

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

// Values in [0,1] with frequent exact ties, zeros and ones.
std::vector<double> unit_values(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) {
    switch (rng.below(5)) {
      case 0: x = 0.0; break;
      case 1: x = 1.0; break;
      case 2: x = static_cast<double>(rng.below(5)) / 4.0; break;
      default: x = rng.uniform(); break;
    }
  }
  return v;
}

constexpr std::size_t kMaxLen = 67;

TEST(Kernels, ScalarTableIsAlwaysAvailable) {
  EXPECT_TRUE(kernels::isa_supported(kernels::Isa::kScalar));
  EXPECT_EQ(kernels::scalar_table().isa, kernels::Isa::kScalar);
}

TEST(Kernels, ForceAndReset) {
  kernels::force_isa(kernels::Isa::kScalar);
  EXPECT_EQ(kernels::active().isa, kernels::Isa::kScalar);
  kernels::reset_isa();
  if (kernels::isa_supported(kernels::Isa::kAvx2)) {
    EXPECT_EQ(kernels::active().isa, kernels::Isa::kAvx2);
  } else {
    EXPECT_THROW(kernels::force_isa(kernels::Isa::kAvx2), std::invalid_argument);
  }
}

TEST(Kernels, ScalarReferenceValues) {
  const KernelTable& s = kernels::scalar_table();
  const double a[] = {0.2, 0.7, 1.0};
  const double b[] = {0.5, 0.7, 0.3};
  double out[3];
  s.add_sat(a, b, out, 3);
  EXPECT_EQ(out[0], 0.2 + 0.5);
  EXPECT_EQ(out[1], 1.0);
  EXPECT_EQ(out[2], 1.0);
  s.prob_sum(a, b, out, 3);
  EXPECT_NEAR(out[0], 0.6, 1e-15);
  EXPECT_EQ(out[2], 1.0);
  s.scale_sat(a, 2.0, out, 3);
  EXPECT_EQ(out[0], 0.4);
  EXPECT_EQ(out[1], 1.0);
  s.div_sat(a, 0.5, out, 3);
  EXPECT_EQ(out[0], 0.4);
  EXPECT_EQ(out[2], 1.0);
  EXPECT_TRUE(s.all_le(a, a, 3));
  EXPECT_FALSE(s.all_le(a, b, 3));
}

using Binary = void (*KernelTable::*)(const double*, const double*, double*, std::size_t);

TEST(Kernels, BinaryKernelsMatchBitForBit) {
  REQUIRE_AVX2();
  const KernelTable& s = kernels::scalar_table();
  const KernelTable& v = simd_or_skip();
  const std::pair<const char*, Binary> ops[] = {{"max", &KernelTable::max},
                                                {"min", &KernelTable::min},
                                                {"add_sat", &KernelTable::add_sat},
                                                {"prob_sum", &KernelTable::prob_sum},
                                                {"mul", &KernelTable::mul}};
  Rng rng(11);
  for (std::size_t n = 0; n <= kMaxLen; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = unit_values(rng, n);
      const auto b = unit_values(rng, n);
      for (const auto& [name, op] : ops) {
        std::vector<double> x(n, -1.0), y(n, -2.0);
        (s.*op)(a.data(), b.data(), x.data(), n);
        (v.*op)(a.data(), b.data(), y.data(), n);
        ASSERT_TRUE(same_bits(x, y)) << name << " n=" << n;
      }
    }
  }
}

TEST(Kernels, ScalarArgumentKernelsMatchBitForBit) {
  REQUIRE_AVX2();
  const KernelTable& s = kernels::scalar_table();
  const KernelTable& v = simd_or_skip();
  Rng rng(12);
  const double ks[] = {0.1, 0.5, 1.0, 1.5, 3.0, 1e-300, 1e300};
  for (std::size_t n = 0; n <= kMaxLen; ++n) {
    const auto a = unit_values(rng, n);
    for (double k : ks) {
      std::vector<double> x(n), y(n);
      s.scale_sat(a.data(), k, x.data(), n);
      v.scale_sat(a.data(), k, y.data(), n);
      ASSERT_TRUE(same_bits(x, y)) << "scale_sat n=" << n << " k=" << k;
      s.div_sat(a.data(), k, x.data(), n);
      v.div_sat(a.data(), k, y.data(), n);
      ASSERT_TRUE(same_bits(x, y)) << "div_sat n=" << n << " k=" << k;
    }
    std::vector<double> x(n), y(n);
    s.one_minus(a.data(), x.data(), n);
    v.one_minus(a.data(), y.data(), n);
    ASSERT_TRUE(same_bits(x, y)) << "one_minus n=" << n;
  }
}

TEST(Kernels, AllLeFindsEveryPosition) {
  REQUIRE_AVX2();
  const KernelTable& s = kernels::scalar_table();
  const KernelTable& v = simd_or_skip();
  Rng rng(13);
  for (std::size_t n = 0; n <= kMaxLen; ++n) {
    auto a = unit_values(rng, n);
    auto b = a;
    ASSERT_TRUE(s.all_le(a.data(), b.data(), n));
    ASSERT_TRUE(v.all_le(a.data(), b.data(), n));
    for (std::size_t i = 0; i < n; ++i) {
      auto c = b;
      c[i] = a[i] - 0.25;
      ASSERT_FALSE(s.all_le(a.data(), c.data(), n)) << n << " " << i;
      ASSERT_FALSE(v.all_le(a.data(), c.data(), n)) << n << " " << i;
    }
  }
}

TEST(Kernels, AndEqualsFindsEveryWord) {
  REQUIRE_AVX2();
  const KernelTable& s = kernels::scalar_table();
  const KernelTable& v = simd_or_skip();
  Rng rng(14);
  for (std::size_t w = 0; w <= 19; ++w) {
    std::vector<std::uint64_t> a(w), b(w), c(w);
    for (std::size_t i = 0; i < w; ++i) {
      a[i] = rng.next();
      b[i] = rng.next();
      c[i] = a[i] & b[i];
    }
    ASSERT_TRUE(s.and_equals(a.data(), b.data(), c.data(), w));
    ASSERT_TRUE(v.and_equals(a.data(), b.data(), c.data(), w));
    for (std::size_t i = 0; i < w; ++i) {
      auto d = c;
      d[i] ^= std::uint64_t{1} << rng.below(64);
      ASSERT_FALSE(s.and_equals(a.data(), b.data(), d.data(), w)) << w << " " << i;
      ASSERT_FALSE(v.and_equals(a.data(), b.data(), d.data(), w)) << w << " " << i;
    }
  }
}

template <class Set>
bool same_set_bits(const Set& x, const Set& y) {
  if (x.labels() != y.labels()) return false;
  for (std::size_t k = 0; k < kEndpointCount; ++k) {
    const auto p = x.columns()[k];
    const auto q = y.columns()[k];
    if (!same_bits(p, q)) return false;
  }
  return true;
}

TEST(Kernels, OperatorsAgreeAcrossIsas) {
  REQUIRE_AVX2();
  Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const auto universe = numbered_universe(1 + rng.below(40), "x");
    const DiscreteINS a = random_set(rng, universe);
    const DiscreteINS b = random_set(rng, universe);
    const double k = 0.1 + 3.0 * rng.uniform();
    auto run = [&](kernels::Isa isa) {
      kernels::force_isa(isa);
      std::vector<DiscreteINS> out{complement(a), unite(a, b), intersect(a, b), difference(a, b),
                                   add(a, b), pointwise_product(a, b), scalar_mul(k, a), scalar_div(a, k),
                                   truth_favorite(a), false_favorite(b)};
      const PairedINS c = cartesian_product(a, b);
      const bool flags[] = {is_contained(a, b), is_contained(intersect(a, b), a), equals(a, b), is_empty(a)};
      kernels::reset_isa();
      return std::make_tuple(out, c, std::vector<bool>(std::begin(flags), std::end(flags)));
    };
    const auto [s_sets, s_cart, s_flags] = run(kernels::Isa::kScalar);
    const auto [v_sets, v_cart, v_flags] = run(kernels::Isa::kAvx2);
    for (std::size_t i = 0; i < s_sets.size(); ++i) ASSERT_TRUE(same_set_bits(s_sets[i], v_sets[i])) << i;
    ASSERT_TRUE(same_set_bits(s_cart, v_cart));
    ASSERT_EQ(s_flags, v_flags);
  }
}

}  // namespace
}  // namespace ins
