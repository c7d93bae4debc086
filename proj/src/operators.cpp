#include "ins/operators.hpp"

#include <cmath>
#include <string>

#include "ins/errors.hpp"
#include "ins/kernels.hpp"

namespace ins {

namespace {

constexpr std::size_t kInfT = 0, kSupT = 1, kInfI = 2, kSupI = 3, kInfF = 4, kSupF = 5;

using Column = std::vector<double>;

Column blank(std::size_t n) { return Column(n); }

/// `b`'s columns in `a`'s label order.
Columns aligned(const DiscreteINS& a, const DiscreteINS& b) {
  return b.columns_in_order(a.labels());
}

Column apply(void (*fn)(std::span<const double>, std::span<const double>, std::span<double>),
             const Column& x, const Column& y) {
  Column out = blank(x.size());
  fn(x, y, out);
  return out;
}

void check_scalar(double k) {
  if (!(k > 0.0) || std::isinf(k))
    throw NonPositiveScalar("scalar must be a positive finite real, got " + std::to_string(k));
}

}  // namespace

DiscreteINS complement(const DiscreteINS& a) {
  const auto& c = a.columns();
  Columns out;
  out[kInfT] = c[kInfF];
  out[kSupT] = c[kSupF];
  out[kInfI] = blank(a.size());
  out[kSupI] = blank(a.size());
  kernels::one_minus(c[kSupI], out[kInfI]);
  kernels::one_minus(c[kInfI], out[kSupI]);
  out[kInfF] = c[kInfT];
  out[kSupF] = c[kSupT];
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

bool is_contained(const DiscreteINS& a, const DiscreteINS& b) {
  const auto& ca = a.columns();
  const Columns cb = aligned(a, b);
  return kernels::all_le(ca[kInfT], cb[kInfT]) && kernels::all_le(ca[kSupT], cb[kSupT]) &&
         kernels::all_le(cb[kInfI], ca[kInfI]) && kernels::all_le(cb[kSupI], ca[kSupI]) &&
         kernels::all_le(cb[kInfF], ca[kInfF]) && kernels::all_le(cb[kSupF], ca[kSupF]);
}

bool equals(const DiscreteINS& a, const DiscreteINS& b) {
  return is_contained(a, b) && is_contained(b, a);
}

bool is_empty(const DiscreteINS& a) {
  const NeutrosophicValue phi = empty_value();
  for (std::size_t row = 0; row < a.size(); ++row)
    if (!(a.value(row) == phi)) return false;
  return true;
}

DiscreteINS unite(const DiscreteINS& a, const DiscreteINS& b) {
  const auto& ca = a.columns();
  const Columns cb = aligned(a, b);
  Columns out;
  for (std::size_t k : {kInfT, kSupT}) out[k] = apply(kernels::max, ca[k], cb[k]);
  for (std::size_t k : {kInfI, kSupI, kInfF, kSupF}) out[k] = apply(kernels::min, ca[k], cb[k]);
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

DiscreteINS intersect(const DiscreteINS& a, const DiscreteINS& b) {
  const auto& ca = a.columns();
  const Columns cb = aligned(a, b);
  Columns out;
  for (std::size_t k : {kInfT, kSupT}) out[k] = apply(kernels::min, ca[k], cb[k]);
  for (std::size_t k : {kInfI, kSupI, kInfF, kSupF}) out[k] = apply(kernels::max, ca[k], cb[k]);
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

DiscreteINS difference(const DiscreteINS& a, const DiscreteINS& b) {
  const auto& ca = a.columns();
  const Columns cb = aligned(a, b);
  Columns out;
  out[kInfT] = apply(kernels::min, ca[kInfT], cb[kInfF]);
  out[kSupT] = apply(kernels::min, ca[kSupT], cb[kSupF]);
  Column reflected_sup = blank(a.size());
  Column reflected_inf = blank(a.size());
  kernels::one_minus(cb[kSupI], reflected_sup);
  kernels::one_minus(cb[kInfI], reflected_inf);
  out[kInfI] = apply(kernels::max, ca[kInfI], reflected_sup);
  out[kSupI] = apply(kernels::max, ca[kSupI], reflected_inf);
  out[kInfF] = apply(kernels::max, ca[kInfF], cb[kInfT]);
  out[kSupF] = apply(kernels::max, ca[kSupF], cb[kSupT]);
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

DiscreteINS add(const DiscreteINS& a, const DiscreteINS& b) {
  const auto& ca = a.columns();
  const Columns cb = aligned(a, b);
  Columns out;
  for (std::size_t k = 0; k < kEndpointCount; ++k) out[k] = apply(kernels::add_sat, ca[k], cb[k]);
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

DiscreteINS pointwise_product(const DiscreteINS& a, const DiscreteINS& b) {
  const auto& ca = a.columns();
  const Columns cb = aligned(a, b);
  Columns out;
  for (std::size_t k : {kInfT, kSupT}) out[k] = apply(kernels::prob_sum, ca[k], cb[k]);
  for (std::size_t k : {kInfI, kSupI, kInfF, kSupF}) out[k] = apply(kernels::mul, ca[k], cb[k]);
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

PairedINS cartesian_product(const DiscreteINS& a, const DiscreteINS& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<LabelPair> labels;
  labels.reserve(n);
  // Row-major expansion: broadcast a's row against all of b.
  Columns left, right;
  for (auto* c : {&left, &right})
    for (auto& col : *c) col.reserve(n);
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      labels.emplace_back(a.label(x), b.label(y));
      for (std::size_t k = 0; k < kEndpointCount; ++k) {
        left[k].push_back(a.columns()[k][x]);
        right[k].push_back(b.columns()[k][y]);
      }
    }
  }
  Columns out;
  for (std::size_t k : {kInfT, kSupT}) out[k] = apply(kernels::prob_sum, left[k], right[k]);
  for (std::size_t k : {kInfI, kSupI, kInfF, kSupF}) out[k] = apply(kernels::mul, left[k], right[k]);
  return PairedINS::from_columns(std::move(labels), std::move(out));
}

DiscreteINS scalar_mul(double k, const DiscreteINS& a) {
  check_scalar(k);
  Columns out;
  for (std::size_t e = 0; e < kEndpointCount; ++e) {
    out[e] = blank(a.size());
    kernels::scale_sat(a.columns()[e], k, out[e]);
  }
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

DiscreteINS scalar_div(const DiscreteINS& a, double k) {
  check_scalar(k);
  Columns out;
  for (std::size_t e = 0; e < kEndpointCount; ++e) {
    out[e] = blank(a.size());
    kernels::div_sat(a.columns()[e], k, out[e]);
  }
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

DiscreteINS truth_favorite(const DiscreteINS& a) {
  const auto& c = a.columns();
  Columns out;
  out[kInfT] = apply(kernels::add_sat, c[kInfT], c[kInfI]);
  out[kSupT] = apply(kernels::add_sat, c[kSupT], c[kSupI]);
  out[kInfI] = Column(a.size(), 0.0);
  out[kSupI] = Column(a.size(), 0.0);
  out[kInfF] = c[kInfF];
  out[kSupF] = c[kSupF];
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

DiscreteINS false_favorite(const DiscreteINS& a) {
  const auto& c = a.columns();
  Columns out;
  out[kInfT] = c[kInfT];
  out[kSupT] = c[kSupT];
  out[kInfI] = Column(a.size(), 0.0);
  out[kSupI] = Column(a.size(), 0.0);
  out[kInfF] = apply(kernels::add_sat, c[kInfF], c[kInfI]);
  out[kSupF] = apply(kernels::add_sat, c[kSupF], c[kSupI]);
  return DiscreteINS::from_columns(a.labels(), std::move(out));
}

PairedINS transpose(const PairedINS& p) {
  std::vector<LabelPair> labels;
  labels.reserve(p.size());
  for (const auto& [x, y] : p.labels()) labels.emplace_back(y, x);
  return PairedINS::from_columns(std::move(labels), p.columns());
}

bool equals(const PairedINS& a, const PairedINS& b) {
  if (!a.same_universe(b))
    throw UniverseMismatch("paired sets are defined over different universes");
  return a.columns() == b.columns_in_order(a.labels());
}

}  // namespace ins
