// AVX2 kernels. Built with -mavx2 (no -mfma, so nothing is contracted) and
// only reached after a runtime CPU check.

#include "tables.hpp"

#if INS_HAVE_AVX2

#include <immintrin.h>

namespace ins::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;

template <class Op>
inline void binary(const double* a, const double* b, double* out, std::size_t n, Op op) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    _mm256_storeu_pd(out + i, op(va, vb));
  }
  if (i < n) {
    // Masked tail keeps the arithmetic in the same unit as the body.
    alignas(32) double ta[kLanes] = {0, 0, 0, 0};
    alignas(32) double tb[kLanes] = {0, 0, 0, 0};
    alignas(32) double to[kLanes];
    for (std::size_t j = i; j < n; ++j) {
      ta[j - i] = a[j];
      tb[j - i] = b[j];
    }
    _mm256_store_pd(to, op(_mm256_load_pd(ta), _mm256_load_pd(tb)));
    for (std::size_t j = i; j < n; ++j) out[j] = to[j - i];
  }
}

void max_avx2(const double* a, const double* b, double* out, std::size_t n) {
  binary(a, b, out, n, [](__m256d x, __m256d y) { return _mm256_max_pd(x, y); });
}

void min_avx2(const double* a, const double* b, double* out, std::size_t n) {
  binary(a, b, out, n, [](__m256d x, __m256d y) { return _mm256_min_pd(x, y); });
}

void add_sat_avx2(const double* a, const double* b, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  binary(a, b, out, n,
         [one](__m256d x, __m256d y) { return _mm256_min_pd(_mm256_add_pd(x, y), one); });
}

void prob_sum_avx2(const double* a, const double* b, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  binary(a, b, out, n, [one](__m256d x, __m256d y) {
    const __m256d keep = _mm256_mul_pd(_mm256_sub_pd(one, x), _mm256_sub_pd(one, y));
    return _mm256_sub_pd(one, keep);
  });
}

void mul_avx2(const double* a, const double* b, double* out, std::size_t n) {
  binary(a, b, out, n, [](__m256d x, __m256d y) { return _mm256_mul_pd(x, y); });
}

void scale_sat_avx2(const double* a, double k, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d vk = _mm256_set1_pd(k);
  binary(a, a, out, n,
         [one, vk](__m256d x, __m256d) { return _mm256_min_pd(_mm256_mul_pd(x, vk), one); });
}

void div_sat_avx2(const double* a, double k, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d vk = _mm256_set1_pd(k);
  binary(a, a, out, n,
         [one, vk](__m256d x, __m256d) { return _mm256_min_pd(_mm256_div_pd(x, vk), one); });
}

void one_minus_avx2(const double* a, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  binary(a, a, out, n, [one](__m256d x, __m256d) { return _mm256_sub_pd(one, x); });
}

bool all_le_avx2(const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d le = _mm256_cmp_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), _CMP_LE_OQ);
    if (_mm256_movemask_pd(le) != 0xF) return false;
  }
  for (; i < n; ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

bool and_equals_avx2(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                     std::size_t words) {
  std::size_t w = 0;
  for (; w + kLanes <= words; w += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    const __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + w));
    const __m256i diff = _mm256_xor_si256(_mm256_and_si256(va, vb), vc);
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; w < words; ++w)
    if ((a[w] & b[w]) != c[w]) return false;
  return true;
}

}  // namespace

const KernelTable kAvx2Table = {
    Isa::kAvx2,     "avx2",         max_avx2,     min_avx2,
    add_sat_avx2,   prob_sum_avx2,  mul_avx2,     scale_sat_avx2,
    div_sat_avx2,   one_minus_avx2, all_le_avx2,  and_equals_avx2,
};

}  // namespace ins::kernels::detail

#endif  // INS_HAVE_AVX2
