#include "ins/discrete_set.hpp"

#include <stdexcept>

#include "ins/errors.hpp"

namespace ins {

namespace {

std::string describe(const std::string& l) { return "'" + l + "'"; }
std::string describe(const LabelPair& l) { return pair_label(l); }

template <class Label>
std::map<Label, std::size_t> build_index(const std::vector<Label>& labels) {
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second)
      throw InvalidUniverse("duplicate element label " + describe(labels[i]));
  }
  return index;
}

}  // namespace

template <class Label>
BasicSet<Label>::BasicSet(std::vector<Label> labels, std::span<const NeutrosophicValue> values)
    : labels_(std::move(labels)) {
  if (values.size() != labels_.size())
    throw InvalidUniverse("universe has " + std::to_string(labels_.size()) +
                          " labels but " + std::to_string(values.size()) + " values");
  index_ = build_index(labels_);
  for (auto& c : columns_) c.reserve(values.size());
  for (const auto& v : values) {
    const auto e = v.endpoints();
    for (std::size_t k = 0; k < kEndpointCount; ++k) columns_[k].push_back(e[k]);
  }
}

template <class Label>
BasicSet<Label> BasicSet<Label>::uniform(std::vector<Label> labels, const NeutrosophicValue& v) {
  std::vector<NeutrosophicValue> values(labels.size(), v);
  return BasicSet(std::move(labels), values);
}

template <class Label>
BasicSet<Label> BasicSet<Label>::from_columns(std::vector<Label> labels, Columns columns) {
  for (const auto& c : columns) {
    if (c.size() != labels.size())
      throw InvalidUniverse("endpoint column length does not match the universe");
  }
  BasicSet s;
  s.index_ = build_index(labels);
  s.labels_ = std::move(labels);
  s.columns_ = std::move(columns);
  for (std::size_t row = 0; row < s.size(); ++row) {
    // Validates, and canonicalizes -0.0.
    const auto e = s.value(row).endpoints();
    for (std::size_t k = 0; k < kEndpointCount; ++k) s.columns_[k][row] = e[k];
  }
  return s;
}

template <class Label>
std::optional<std::size_t> BasicSet<Label>::index_of(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class Label>
NeutrosophicValue BasicSet<Label>::value(std::size_t row) const {
  std::array<double, kEndpointCount> e{};
  for (std::size_t k = 0; k < kEndpointCount; ++k) e[k] = columns_[k][row];
  return NeutrosophicValue::from_endpoints(e);
}

template <class Label>
NeutrosophicValue BasicSet<Label>::at(const Label& label) const {
  auto row = index_of(label);
  if (!row) throw std::out_of_range("no element " + describe(label) + " in universe");
  return value(*row);
}

template <class Label>
Columns BasicSet<Label>::columns_in_order(const std::vector<Label>& order) const {
  if (order == labels_) return columns_;
  if (order.size() != labels_.size())
    throw UniverseMismatch("universes differ in size (" + std::to_string(order.size()) +
                           " vs " + std::to_string(labels_.size()) + ")");
  Columns out;
  for (auto& c : out) c.resize(order.size());
  for (std::size_t row = 0; row < order.size(); ++row) {
    auto src = index_of(order[row]);
    if (!src) throw UniverseMismatch("element " + describe(order[row]) + " missing from operand");
    for (std::size_t k = 0; k < kEndpointCount; ++k) out[k][row] = columns_[k][*src];
  }
  return out;
}

template class BasicSet<std::string>;
template class BasicSet<LabelPair>;

std::string pair_label(const LabelPair& p) { return "(" + p.first + "," + p.second + ")"; }

std::vector<std::string> numbered_universe(std::size_t n, std::string_view prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

}  // namespace ins
