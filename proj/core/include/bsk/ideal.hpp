#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bsk/groebner.hpp"
#include "bsk/polynomial.hpp"

namespace bsk {

// Finitely generated ideal of a RingContext. Generators are stored monic,
// without duplicates, and with monomial generators divisible by another
// monomial generator pruned. The zero ideal is the single generator 0.
//
// Copies share a write-once cache of the reduced grevlex Gröbner basis.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal zero(Ring ring);
  static Ideal unit(Ring ring);
  // m = (x_1, ..., x_n)
  static Ideal maximal(Ring ring);
  static Ideal from_monomials(Ring ring, const std::vector<Monomial>& monomials);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.size() == 1 && gens_[0].is_zero(); }
  bool is_monomial() const noexcept;
  bool is_homogeneous() const noexcept;
  // Every generator vanishes at the origin, i.e. the ideal lies in m.
  bool inside_maximal() const noexcept;

  // Reduced grevlex basis, computed once.
  const GroebnerBasis& groebner(const GroebnerCaps& caps = {}) const;

  // The radical is m, so m is the only associated prime and membership in
  // R_m agrees with global membership. Computed once; gives up (false) when
  // R/I has more than kPrimaryCheckBudget standard monomials.
  bool primary_to_maximal(const GroebnerCaps& caps = {}) const;
  static constexpr std::size_t kPrimaryCheckBudget = 200000;

  // "(x^2, x*y, y^2)"
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> basis;
    std::optional<bool> m_primary;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

// --- membership -----------------------------------------------------------

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerCaps& caps = {});

// f ∈ I·R_m. Global membership short-circuits to true; for homogeneous or
// m-primary I all associated primes lie in m, so local and global membership
// agree; otherwise
// the colon (I : f) is computed and tested for a generator with nonzero
// constant term.
bool local_member(const Polynomial& f, const Ideal& ideal, const GroebnerCaps& caps = {});

// The colon-unit test alone, on a fresh copy of the ideal (no shared cache,
// no shortcuts). Used to re-verify witnesses.
bool local_member_by_colon(const Polynomial& f, const Ideal& ideal, const GroebnerCaps& caps = {});

bool contained(const Ideal& a, const Ideal& b, const GroebnerCaps& caps = {});
bool local_contained(const Ideal& a, const Ideal& b, const GroebnerCaps& caps = {});
bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerCaps& caps = {});
bool local_ideal_equal(const Ideal& a, const Ideal& b, const GroebnerCaps& caps = {});

// --- combination ----------------------------------------------------------

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
// I^0 = (1)
Ideal ideal_power(const Ideal& ideal, std::uint64_t k);

// Monomial ideals use lcms; anything else goes through elimination.
Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GroebnerCaps& caps = {});
// (t·A + (1-t)·B) ∩ k[x], always.
Ideal intersection_by_elimination(const Ideal& a, const Ideal& b, const GroebnerCaps& caps = {});

// (I : J) = ∩_g (I : g) over the generators g of J. Throws InvalidArgument
// for J = 0.
Ideal ideal_colon(const Ideal& ideal, const Ideal& divisor, const GroebnerCaps& caps = {});
// (I : f) = (I ∩ (f)) / f
Ideal colon_by_element(const Ideal& ideal, const Polynomial& f, const GroebnerCaps& caps = {});
// Same as ideal_colon but never takes the monomial shortcut.
Ideal colon_by_elimination(const Ideal& ideal, const Ideal& divisor, const GroebnerCaps& caps = {});

// Exact quotient f / g; throws InvalidArgument when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// I ∩ k[variables not in `drop`], returned in the same ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop,
                const GroebnerCaps& caps = {});

struct DimensionResult {
  std::size_t dimension = 0;
  // A maximal set of variables (by index) containing no leading monomial's support.
  std::vector<std::size_t> independent_set;
};

// Krull dimension of k[x]/I from the leading monomials of the grevlex basis.
// Throws InvalidArgument when 1 ∈ I.
DimensionResult quotient_dimension(const Ideal& ideal, const GroebnerCaps& caps = {});

// The same ideal generated by its reduced grevlex basis, largest element first.
Ideal canonical(const Ideal& ideal, const GroebnerCaps& caps = {});

}  // namespace bsk
