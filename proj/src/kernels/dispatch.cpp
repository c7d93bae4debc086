#include <atomic>
#include <cassert>
#include <stdexcept>

#include "tables.hpp"

namespace ins::kernels {

namespace {

bool cpu_has_avx2() {
#if INS_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* best_table() {
#if INS_HAVE_AVX2
  if (cpu_has_avx2()) return &detail::kAvx2Table;
#endif
  return &detail::kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{best_table()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() { return detail::kScalarTable; }

const KernelTable* avx2_table() {
#if INS_HAVE_AVX2
  return &detail::kAvx2Table;
#else
  return nullptr;
#endif
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2: return cpu_has_avx2();
  }
  return false;
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("requested ISA is not available");
  current().store(isa == Isa::kAvx2 ? avx2_table() : &detail::kScalarTable);
}

void reset_isa() { current().store(best_table()); }

void max(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  active().max(a.data(), b.data(), out.data(), out.size());
}

void min(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  active().min(a.data(), b.data(), out.data(), out.size());
}

void add_sat(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  active().add_sat(a.data(), b.data(), out.data(), out.size());
}

void prob_sum(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  active().prob_sum(a.data(), b.data(), out.data(), out.size());
}

void mul(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  active().mul(a.data(), b.data(), out.data(), out.size());
}

void scale_sat(std::span<const double> a, double k, std::span<double> out) {
  assert(a.size() == out.size());
  active().scale_sat(a.data(), k, out.data(), out.size());
}

void div_sat(std::span<const double> a, double k, std::span<double> out) {
  assert(a.size() == out.size());
  active().div_sat(a.data(), k, out.data(), out.size());
}

void one_minus(std::span<const double> a, std::span<double> out) {
  assert(a.size() == out.size());
  active().one_minus(a.data(), out.data(), out.size());
}

bool all_le(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().all_le(a.data(), b.data(), a.size());
}

bool and_equals(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                std::span<const std::uint64_t> c) {
  assert(a.size() == b.size() && a.size() == c.size());
  return active().and_equals(a.data(), b.data(), c.data(), a.size());
}

}  // namespace ins::kernels
