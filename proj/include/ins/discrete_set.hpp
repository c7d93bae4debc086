#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ins/interval.hpp"

namespace ins {

/// Endpoint storage: one column per Endpoint, one row per universe element.
using Columns = std::array<std::vector<double>, kEndpointCount>;

/// A finite interval neutrosophic set: an ordered universe of distinct labels
/// and a total map from label to NeutrosophicValue.
///
/// Values are kept column-wise so the set operators run as vector kernels
/// over each endpoint. Iteration order is declaration order.
template <class Label>
class BasicSet {
 public:
  /// The set over the empty universe.
  BasicSet() = default;

  /// Throws InvalidUniverse on duplicate labels or a size mismatch.
  BasicSet(std::vector<Label> labels, std::span<const NeutrosophicValue> values);

  /// Every element mapped to `v`.
  static BasicSet uniform(std::vector<Label> labels, const NeutrosophicValue& v);

  /// Throws InvalidUniverse on a malformed universe and InvalidInterval when
  /// a row does not describe valid intervals.
  static BasicSet from_columns(std::vector<Label> labels, Columns columns);

  std::size_t size() const { return labels_.size(); }
  bool empty_universe() const { return labels_.empty(); }

  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t row) const { return labels_[row]; }
  std::optional<std::size_t> index_of(const Label& label) const;

  NeutrosophicValue value(std::size_t row) const;
  /// Throws std::out_of_range for a label outside the universe.
  NeutrosophicValue at(const Label& label) const;

  std::span<const double> column(Endpoint e) const {
    return columns_[static_cast<std::size_t>(e)];
  }
  const Columns& columns() const { return columns_; }

  /// Same universe as `other` ignoring element order.
  template <class OtherLabel>
  bool same_universe(const BasicSet<OtherLabel>& other) const;

  /// Columns reordered to follow `order`; throws UniverseMismatch if `order`
  /// is not a permutation of this universe.
  Columns columns_in_order(const std::vector<Label>& order) const;

 private:
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
  Columns columns_;
};

using LabelPair = std::pair<std::string, std::string>;

using DiscreteINS = BasicSet<std::string>;
/// Result of the cartesian product, keyed by (x, y).
using PairedINS = BasicSet<LabelPair>;

extern template class BasicSet<std::string>;
extern template class BasicSet<LabelPair>;

template <class Label>
template <class OtherLabel>
bool BasicSet<Label>::same_universe(const BasicSet<OtherLabel>& other) const {
  if constexpr (!std::is_same_v<Label, OtherLabel>) {
    return false;
  } else {
    if (size() != other.size()) return false;
    if (labels_ == other.labels()) return true;
    for (const auto& l : other.labels())
      if (!index_.contains(l)) return false;
    return true;
  }
}

/// "(x,y)", the serialized form of a pair label.
std::string pair_label(const LabelPair& p);

/// "x1", "x2", ... "xn".
std::vector<std::string> numbered_universe(std::size_t n, std::string_view prefix = "x");

}  // namespace ins
