#pragma once

#include <cstddef>
#include <vector>

#include "bsk/errors.hpp"
#include "bsk/polynomial.hpp"

namespace bsk {

struct GroebnerCaps {
  // S-pairs whose lcm exceeds this total degree abort the computation.
  unsigned max_degree = 30;
  // Upper bound on S-pairs reduced in one run.
  std::size_t max_pairs = 200000;
};

// Raised when a Buchberger run exceeds its caps. Carries the basis as it
// stood when the cap was hit (not reduced, not a Gröbner basis).
class GroebnerBudgetError : public BudgetError {
 public:
  GroebnerBudgetError(const std::string& what, std::vector<Polynomial> partial)
      : BudgetError(what, partial.size()), partial_(std::move(partial)) {}
  const std::vector<Polynomial>& partial_basis() const noexcept { return partial_; }

 private:
  std::vector<Polynomial> partial_;
};

// Reduced Gröbner basis: monic, no term of an element divisible by the
// leading monomial of another, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  const Ring& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  // Terms of element i sorted decreasingly in order().
  const std::vector<Term>& ordered_terms(std::size_t i) const { return ordered_[i]; }
  const Monomial& leading_monomial(std::size_t i) const { return ordered_[i].front().mono; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const noexcept;
  bool is_zero() const noexcept { return elements_.empty(); }

  bool operator==(const GroebnerBasis& other) const;

 private:
  friend GroebnerBasis buchberger(const std::vector<Polynomial>&, const MonomialOrder&,
                                  const GroebnerCaps&);
  void push(std::vector<Term> ordered);

  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<std::vector<Term>> ordered_;
};

// Full reduction of f: repeatedly the largest reducible term is reduced by the
// first basis element (in list order) whose leading monomial divides it.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Buchberger's algorithm with the coprime and chain criteria (Gebauer–Möller
// update) and normal pair selection. Zero generators are ignored; an empty
// list yields the zero ideal's empty basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerCaps& caps = {});

// S-polynomial of two elements of the basis, reduced against it. The basis
// is Gröbner iff this is zero for all pairs.
Polynomial reduced_s_polynomial(const GroebnerBasis& basis, std::size_t i, std::size_t j);
bool all_s_polynomials_reduce_to_zero(const GroebnerBasis& basis);

}  // namespace bsk
