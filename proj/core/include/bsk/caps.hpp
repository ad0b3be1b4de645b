#pragma once

#include "bsk/groebner.hpp"
#include "bsk/newton.hpp"

namespace bsk {

// Resource caps shared by the higher-level modules.
struct EngineCaps {
  GroebnerCaps groebner;
  ClosureCaps closure;
  unsigned colon_iterations = 12;
  unsigned reduction_retries = 8;
  unsigned r_cap = 6;
  unsigned ladder_depth = 4;
  // Try subsets of the generators as the reduction before random
  // combinations. For monomial ideals such a subset, when it is a reduction
  // with ℓ elements, is already minimal.
  bool prefer_generator_subsets = true;
};

}  // namespace bsk
