#include "bsk/ring.hpp"

#include <algorithm>
#include <set>

#include "bsk/errors.hpp"
#include "bsk/monomial.hpp"

namespace bsk {

Ring RingContext::make(std::vector<std::string> names, Field field, std::size_t variable_cap) {
  if (names.size() > std::min(variable_cap, kMaxVars)) {
    throw ConfigError("ring has " + std::to_string(names.size()) + " variables; the cap is " +
                      std::to_string(std::min(variable_cap, kMaxVars)));
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw ConfigError("empty variable name");
    if (!seen.insert(n).second) throw ConfigError("duplicate variable name '" + n + "'");
  }
  return Ring(new RingContext(std::move(names), field));
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string RingContext::describe() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ",";
    s += names_[i];
  }
  return s + "]";
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a || !b || !a->same_as(*b)) throw ContextError("operands belong to different rings");
}

}  // namespace bsk
