// Reference kernels. The comparison forms mirror the x86 MINPD/MAXPD
// definitions (second operand returned on ties) so the SIMD variants can
// be checked bit for bit.

#include "tables.hpp"

namespace ins::kernels::detail {

namespace {

inline double pick_max(double a, double b) { return a > b ? a : b; }
inline double pick_min(double a, double b) { return a < b ? a : b; }

void max_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = pick_max(a[i], b[i]);
}

void min_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = pick_min(a[i], b[i]);
}

void add_sat_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = pick_min(a[i] + b[i], 1.0);
}

void prob_sum_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double keep = (1.0 - a[i]) * (1.0 - b[i]);
    out[i] = 1.0 - keep;
  }
}

void mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void scale_sat_scalar(const double* a, double k, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = pick_min(a[i] * k, 1.0);
}

void div_sat_scalar(const double* a, double k, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = pick_min(a[i] / k, 1.0);
}

void one_minus_scalar(const double* a, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 1.0 - a[i];
}

bool all_le_scalar(const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

bool and_equals_scalar(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                       std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if ((a[w] & b[w]) != c[w]) return false;
  return true;
}

}  // namespace

const KernelTable kScalarTable = {
    Isa::kScalar,     "scalar",         max_scalar,     min_scalar,
    add_sat_scalar,   prob_sum_scalar,  mul_scalar,     scale_sat_scalar,
    div_sat_scalar,   one_minus_scalar, all_le_scalar,  and_equals_scalar,
};

}  // namespace ins::kernels::detail
