#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsk/field.hpp"
#include "bsk/monomial.hpp"
#include "bsk/ring.hpp"

namespace bsk {

struct Term {
  Monomial mono;
  Scalar coeff;
  bool operator==(const Term& other) const { return mono == other.mono && coeff == other.coeff; }
};

// Sparse polynomial over a RingContext. Terms are kept sorted in strictly
// decreasing grevlex order with nonzero coefficients, so structural equality
// is polynomial equality. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);
  // Combines like terms, drops zeros and sorts.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const Scalar& c);
  static Polynomial one(Ring ring) { return constant(ring, Scalar(1)); }
  static Polynomial variable(Ring ring, std::size_t i);
  static Polynomial monomial(Ring ring, Monomial m, Scalar c = Scalar(1));

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_homogeneous() const noexcept;
  // Highest total degree; 0 for the zero polynomial.
  std::uint64_t total_degree() const noexcept;
  Scalar constant_term() const;
  const Term& leading_term() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c) const;
  // f^k by repeated squaring; in characteristic p the base-p digits of k are
  // handled by Frobenius (term-wise p-th powers).
  Polynomial pow(std::uint64_t k) const;
  // Scaled so the grevlex-leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  // Same polynomial in `target`, variable i moved to positions[i]. The
  // target must have the same coefficient field.
  Polynomial remap(const Ring& target, std::span<const std::size_t> positions) const;

  bool operator==(const Polynomial& other) const;

  // Canonical text, e.g. "x^2-3/2*x*y+1". Parseable by the script language.
  std::string to_string() const;

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms, bool already_canonical);

  Ring ring_;
  std::vector<Term> terms_;
};

// Canonical printing of a single monomial ("x^2*y", "1").
std::string format_monomial(const RingContext& ring, const Monomial& m);

// Merge-based a + c*m*b over sorted term lists, in the given order. Used by
// the Gröbner engine, which keeps its own order.
void sort_terms(std::vector<Term>& terms, const MonomialOrder& order);
std::vector<Term> axpy_terms(const Field& field, const std::vector<Term>& a, const Scalar& c,
                             const Monomial& m, const std::vector<Term>& b,
                             const MonomialOrder& order);

}  // namespace bsk
