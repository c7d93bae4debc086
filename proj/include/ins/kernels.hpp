#pragma once

// Vector kernels behind the set operators.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. Both produce bit-identical results: only IEEE min/max, +, -, *, /
// are used and no operation is fused. The AVX2 table is picked at startup
// when the CPU reports support.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ins::kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;
  // out[i] = a[i] > b[i] ? a[i] : b[i]
  void (*max)(const double* a, const double* b, double* out, std::size_t n);
  // out[i] = a[i] < b[i] ? a[i] : b[i]
  void (*min)(const double* a, const double* b, double* out, std::size_t n);
  // out[i] = min(a[i] + b[i], 1)
  void (*add_sat)(const double* a, const double* b, double* out, std::size_t n);
  // out[i] = 1 - (1 - a[i]) * (1 - b[i])
  void (*prob_sum)(const double* a, const double* b, double* out, std::size_t n);
  // out[i] = a[i] * b[i]
  void (*mul)(const double* a, const double* b, double* out, std::size_t n);
  // out[i] = min(a[i] * k, 1)
  void (*scale_sat)(const double* a, double k, double* out, std::size_t n);
  // out[i] = min(a[i] / k, 1)
  void (*div_sat)(const double* a, double k, double* out, std::size_t n);
  // out[i] = 1 - a[i]
  void (*one_minus)(const double* a, double* out, std::size_t n);
  // all(a[i] <= b[i])
  bool (*all_le)(const double* a, const double* b, std::size_t n);
  // all((a[w] & b[w]) == c[w])
  bool (*and_equals)(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                     std::size_t words);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

bool isa_supported(Isa isa);
/// Table used by the set operators.
const KernelTable& active();
/// Route subsequent operator calls through `isa`; throws std::invalid_argument
/// when the CPU or build lacks it.
void force_isa(Isa isa);
/// Back to the best table for this CPU.
void reset_isa();

// Span front ends over active(); sizes must agree.
void max(std::span<const double> a, std::span<const double> b, std::span<double> out);
void min(std::span<const double> a, std::span<const double> b, std::span<double> out);
void add_sat(std::span<const double> a, std::span<const double> b, std::span<double> out);
void prob_sum(std::span<const double> a, std::span<const double> b, std::span<double> out);
void mul(std::span<const double> a, std::span<const double> b, std::span<double> out);
void scale_sat(std::span<const double> a, double k, std::span<double> out);
void div_sat(std::span<const double> a, double k, std::span<double> out);
void one_minus(std::span<const double> a, std::span<double> out);
bool all_le(std::span<const double> a, std::span<const double> b);
bool and_equals(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                std::span<const std::uint64_t> c);

}  // namespace ins::kernels
