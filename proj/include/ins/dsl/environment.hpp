#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ins/discrete_set.hpp"

namespace ins::dsl {

/// Named sets in declaration order. Lookup is case-sensitive.
class Environment {
 public:
  /// Throws std::invalid_argument for a name outside [A-Za-z][A-Za-z0-9_]*
  /// or one already bound.
  void bind(std::string name, DiscreteINS set);

  const DiscreteINS* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<std::string, DiscreteINS>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, DiscreteINS>> entries_;
};

bool is_valid_name(std::string_view name);

}  // namespace ins::dsl
