#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bsk/field.hpp"

namespace bsk {

// Default cap on the number of user-declared variables. Auxiliary rings
// (elimination variable, Rees variables) may exceed it up to kMaxVars.
inline constexpr std::size_t kDefaultVariableCap = 6;

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

// The polynomial ring k[x_1..x_n] with distinguished maximal ideal
// m = (x_1..x_n). Local questions about R_m are answered inside this ring.
class RingContext {
 public:
  // Throws ConfigError on duplicate or empty names, or more than
  // `variable_cap` variables.
  static Ring make(std::vector<std::string> names, Field field,
                   std::size_t variable_cap = kDefaultVariableCap);

  std::size_t dimension() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const Field& field() const noexcept { return field_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // "QQ[x,y,z]"
  std::string describe() const;

  bool same_as(const RingContext& other) const noexcept {
    return this == &other || (field_ == other.field_ && names_ == other.names_);
  }

 private:
  RingContext(std::vector<std::string> names, Field field)
      : names_(std::move(names)), field_(field) {}

  std::vector<std::string> names_;
  Field field_;
};

// Throws ContextError unless both rings are the same.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace bsk
