#include "ins/dsl/environment.hpp"

#include <cctype>
#include <stdexcept>

namespace ins::dsl {

bool is_valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void Environment::bind(std::string name, DiscreteINS set) {
  if (!is_valid_name(name)) throw std::invalid_argument("invalid set name '" + name + "'");
  if (contains(name)) throw std::invalid_argument("set '" + name + "' is already defined");
  entries_.emplace_back(std::move(name), std::move(set));
}

const DiscreteINS* Environment::find(std::string_view name) const {
  for (const auto& [n, s] : entries_)
    if (n == name) return &s;
  return nullptr;
}

}  // namespace ins::dsl
