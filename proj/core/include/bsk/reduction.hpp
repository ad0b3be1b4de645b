#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsk/caps.hpp"
#include "bsk/ideal.hpp"
#include "bsk/newton.hpp"

namespace bsk {

struct AnalyticSpreadResult {
  unsigned spread = 0;
  // Rees ideal: kernel of k[x, y_1..y_s] -> R[It], y_i -> f_i t. Lives in
  // rees_ring, whose variables are the ring's followed by _y1.._ys.
  Ring rees_ring;
  std::optional<Ideal> rees_ideal;
  // Indices (into the y variables, 0-based) of an independent set in the
  // special fiber realizing the dimension.
  std::vector<std::size_t> fiber_witness;
};

// ℓ(I) = dim k[x, y] / (Rees ideal + (x)). Requires I ⊆ m and I proper.
AnalyticSpreadResult analytic_spread(const Ideal& ideal, const EngineCaps& caps = {});

// Height of a monomial ideal: the least number of variables meeting the
// support of every generator.
unsigned monomial_height(const MonomialIdeal& ideal);

enum class ReductionMethod { GeneratorSubset, RandomCombination };

struct ReductionCertificate {
  explicit ReductionCertificate(Ideal j) : reduction(std::move(j)) {}

  Ideal reduction;
  // Reduction number with respect to `reduction`, when verified.
  std::optional<unsigned> r;
  bool verified = false;
  std::uint64_t seed = 0;
  ReductionMethod method = ReductionMethod::RandomCombination;
  // ℓ × s matrix; row i gives generator i of the reduction as a combination
  // of the generators of I.
  std::vector<std::vector<Scalar>> coefficient_matrix;
  unsigned attempts = 0;
  unsigned spread = 0;
};

// Least r <= r_cap with J·I^r = I^{r+1} in R_m, or nullopt when no such r
// was found. Throws InvalidArgument unless J ⊆ I locally.
std::optional<unsigned> reduction_number(const Ideal& ideal, const Ideal& candidate, unsigned r_cap,
                                         const EngineCaps& caps = {});

// ℓ(I) combinations of the generators of I that form a reduction. Over F_p
// requires p >= 101 (ConfigError otherwise). An unverified certificate means
// every candidate failed within r_cap and the retry budget.
ReductionCertificate generic_minimal_reduction(const Ideal& ideal, std::uint64_t seed,
                                               const EngineCaps& caps = {});

// Checks (J+L)(I+L)^r = (I+L)^{r+1} locally. Throws InvalidArgument unless
// J·I^r = I^{r+1} locally.
bool verify_padding_preserves_reduction(const Ideal& ideal, const Ideal& reduction, unsigned r,
                                        const Ideal& pad, const EngineCaps& caps = {});

inline constexpr std::uint64_t kMinGenericCharacteristic = 101;

}  // namespace bsk
