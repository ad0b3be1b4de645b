#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "bsk/ideal.hpp"
#include "bsk/monomial.hpp"

namespace bsk {

// Monomial ideal given by its minimal generators (an antichain under
// divisibility), sorted in decreasing grevlex order.
class MonomialIdeal {
 public:
  // Throws InvalidArgument for an empty generator list.
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);
  // Throws InvalidArgument unless the ideal is nonzero and monomial.
  static MonomialIdeal from_ideal(const Ideal& ideal);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool contains(const Monomial& m) const;
  Ideal to_ideal() const { return Ideal::from_monomials(ring_, gens_); }

  bool operator==(const MonomialIdeal& other) const {
    return ring_->same_as(*other.ring_) && gens_ == other.gens_;
  }

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

// Witness that a lies in k·NP(I): sum_j weights[j]·k·v_j + slack = a with
// nonnegative weights summing to 1 and nonnegative slack. The weights follow
// the order of I.generators().
struct NewtonCertificate {
  std::vector<mpq_class> weights;
  std::vector<mpq_class> slack;
  unsigned power = 1;

  // Exact re-check of every defining identity.
  bool verify(const Monomial& a, const MonomialIdeal& ideal) const;
  // lcm of the weight denominators.
  mpz_class denominator() const;
};

// Exact membership of x^a in the integral closure of I^k, decided by
// Fourier–Motzkin feasibility of {λ >= 0, Σλ = 1, Σ λ_j k v_j <= a}.
std::optional<NewtonCertificate> np_member(const Monomial& a, const MonomialIdeal& ideal, unsigned k);

struct ClosureCaps {
  // Largest number of lattice points enumerated for one closure.
  std::size_t box_budget = 2'000'000;
};

// Lattice points of ∏_i [0, k·max_j v_{j,i}]. Every minimal generator of the
// closure of I^k lies here: if a is minimal in k·NP(I) and a_i exceeded
// k·max_j v_{j,i}, lowering a_i by one keeps the convex-combination part
// below a, so a - e_i would still be a member.
std::vector<Monomial> closure_box(const MonomialIdeal& ideal, unsigned k, const ClosureCaps& caps = {});

// Integral closure of I^k (k >= 1) as its minimal monomial generators.
MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, unsigned k, const ClosureCaps& caps = {});

// Least m <= m_max with x^{m·a} ∈ I^m, i.e. some m generators (with
// repetition) have exponent sum <= m·a componentwise.
std::optional<unsigned> power_test_witness(const Monomial& a, const MonomialIdeal& ideal, unsigned m_max);
inline bool power_test_oracle(const Monomial& a, const MonomialIdeal& ideal, unsigned m_max) {
  return power_test_witness(a, ideal, m_max).has_value();
}

}  // namespace bsk
