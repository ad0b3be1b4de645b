#include "bsk/reduction.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace bsk {

namespace {

void require_inside_maximal(const Ideal& ideal) {
  if (!ideal.inside_maximal()) throw InvalidArgument("ideal is not contained in the maximal ideal: " + ideal.to_string());
}

// Uniform in [0, bound) by rejection, so the draw sequence does not depend on
// the standard library's distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

Ideal combination(const Ideal& ideal, const std::vector<std::vector<Scalar>>& matrix) {
  const Ring& ring = ideal.ring();
  std::vector<Polynomial> gens;
  for (const auto& row : matrix) {
    Polynomial g(ring);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(row[j]) != 0) g = g + ideal.generators()[j].scaled(row[j]);
    }
    gens.push_back(std::move(g));
  }
  return Ideal(ring, std::move(gens));
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t s) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < s - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

AnalyticSpreadResult analytic_spread(const Ideal& ideal, const EngineCaps& caps) {
  require_inside_maximal(ideal);
  const Ring& ring = ideal.ring();
  const std::size_t n = ring->dimension();
  AnalyticSpreadResult result;
  if (ideal.is_zero()) return result;
  const auto& gens = ideal.generators();
  const std::size_t s = gens.size();
  if (n + 1 + s > kMaxVars) {
    throw BudgetError("Rees algebra needs " + std::to_string(n + 1 + s) + " variables; limit is " +
                      std::to_string(kMaxVars));
  }
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  for (std::size_t i = 0; i < s; ++i) names.push_back("_y" + std::to_string(i + 1));
  Ring big = RingContext::make(names, ring->field(), kMaxVars);
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  Polynomial t = Polynomial::variable(big, 0);
  std::vector<Polynomial> relations;
  for (std::size_t i = 0; i < s; ++i) {
    relations.push_back(Polynomial::variable(big, 1 + n + i) - t * gens[i].remap(big, shift));
  }
  Ideal in_big = eliminate(Ideal(big, relations), {0}, caps.groebner);

  std::vector<std::string> rees_names(names.begin() + 1, names.end());
  result.rees_ring = RingContext::make(rees_names, ring->field(), kMaxVars);
  std::vector<std::size_t> drop_t(n + s + 1, 0);
  for (std::size_t i = 1; i <= n + s; ++i) drop_t[i] = i - 1;
  std::vector<Polynomial> rees_gens;
  for (const auto& g : in_big.generators()) rees_gens.push_back(g.remap(result.rees_ring, drop_t));
  result.rees_ideal = Ideal(result.rees_ring, rees_gens);

  std::vector<Polynomial> fiber_gens = rees_gens;
  for (std::size_t i = 0; i < n; ++i) fiber_gens.push_back(Polynomial::variable(result.rees_ring, i));
  DimensionResult dim = quotient_dimension(Ideal(result.rees_ring, fiber_gens), caps.groebner);
  result.spread = static_cast<unsigned>(dim.dimension);
  for (std::size_t v : dim.independent_set) result.fiber_witness.push_back(v - n);
  return result;
}

unsigned monomial_height(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring()->dimension();
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.generators()) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (g[v]) s |= 1u << v;
    }
    if (s == 0) return static_cast<unsigned>(n) + 1;  // unit ideal: height is infinite
    supports.push_back(s);
  }
  unsigned best = static_cast<unsigned>(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool cover = std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & mask) != 0; });
    if (cover) best = std::min(best, static_cast<unsigned>(__builtin_popcount(mask)));
  }
  return best;
}

std::optional<unsigned> reduction_number(const Ideal& ideal, const Ideal& candidate, unsigned r_cap,
                                         const EngineCaps& caps) {
  require_same_ring(ideal.ring(), candidate.ring());
  if (!local_contained(candidate, ideal, caps.groebner)) {
    throw InvalidArgument("reduction candidate " + candidate.to_string() + " is not contained in " + ideal.to_string());
  }
  Ideal power = Ideal::unit(ideal.ring());  // I^r
  for (unsigned r = 0; r <= r_cap; ++r) {
    Ideal next = ideal_product(ideal, power);
    if (local_ideal_equal(ideal_product(candidate, power), next, caps.groebner)) return r;
    power = std::move(next);
  }
  return std::nullopt;
}

ReductionCertificate generic_minimal_reduction(const Ideal& ideal, std::uint64_t seed, const EngineCaps& caps) {
  require_inside_maximal(ideal);
  const Field& field = ideal.ring()->field();
  if (!field.is_rational() && field.characteristic() < kMinGenericCharacteristic) {
    throw ConfigError("generic reductions need characteristic >= " + std::to_string(kMinGenericCharacteristic) +
                      "; got " + std::to_string(field.characteristic()));
  }
  const unsigned spread = analytic_spread(ideal, caps).spread;
  const std::size_t s = ideal.generators().size();
  ReductionCertificate cert{Ideal::zero(ideal.ring())};
  cert.seed = seed;
  cert.spread = spread;
  if (ideal.is_zero()) {
    cert.r = 0;
    cert.verified = true;
    cert.method = ReductionMethod::GeneratorSubset;
    return cert;
  }

  auto attempt = [&](std::vector<std::vector<Scalar>> matrix, ReductionMethod method) {
    Ideal candidate = combination(ideal, matrix);
    ++cert.attempts;
    auto r = reduction_number(ideal, candidate, caps.r_cap, caps);
    cert.reduction = candidate;
    cert.coefficient_matrix = std::move(matrix);
    cert.method = method;
    cert.r = r;
    cert.verified = r.has_value();
    return cert.verified;
  };

  if (caps.prefer_generator_subsets && spread > 0) {
    std::vector<std::size_t> idx(spread);
    for (std::size_t i = 0; i < spread; ++i) idx[i] = i;
    do {
      std::vector<std::vector<Scalar>> matrix(spread, std::vector<Scalar>(s, Scalar(0)));
      for (std::size_t i = 0; i < spread; ++i) matrix[i][idx[i]] = 1;
      if (attempt(std::move(matrix), ReductionMethod::GeneratorSubset)) return cert;
    } while (next_subset(idx, s));
  }

  std::mt19937_64 rng(seed);
  for (unsigned k = 0; k < caps.reduction_retries; ++k) {
    std::vector<std::vector<Scalar>> matrix(spread, std::vector<Scalar>(s));
    for (auto& row : matrix) {
      for (auto& entry : row) {
        if (field.is_rational()) {
          long v = static_cast<long>(draw(rng, 10));
          entry = Scalar(v < 5 ? v - 5 : v - 4);
        } else {
          entry = Scalar(static_cast<unsigned long>(1 + draw(rng, field.characteristic() - 1)));
        }
      }
    }
    if (attempt(std::move(matrix), ReductionMethod::RandomCombination)) return cert;
  }
  return cert;
}

bool verify_padding_preserves_reduction(const Ideal& ideal, const Ideal& reduction, unsigned r, const Ideal& pad,
                                        const EngineCaps& caps) {
  require_same_ring(ideal.ring(), pad.ring());
  const Ideal ir = ideal_power(ideal, r);
  if (!local_ideal_equal(ideal_product(reduction, ir), ideal_product(ideal, ir), caps.groebner)) {
    throw InvalidArgument("J·I^r = I^(r+1) does not hold for r = " + std::to_string(r));
  }
  const Ideal padded_i = ideal_sum(ideal, pad);
  const Ideal padded_j = ideal_sum(reduction, pad);
  const Ideal pr = ideal_power(padded_i, r);
  return local_ideal_equal(ideal_product(padded_j, pr), ideal_product(padded_i, pr), caps.groebner);
}

}  // namespace bsk
