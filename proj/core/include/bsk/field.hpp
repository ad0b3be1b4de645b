#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bsk {

// Field elements are exact rationals. Over F_p the stored value is always an
// integer in [0, p), so equality of elements is equality of representatives.
using Scalar = mpq_class;

class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws ConfigError unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_integer(long long v) const;
  Scalar from_integer(const mpz_class& v) const;
  // num/den mapped into the field; a zero image of den throws DivisionByZero.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  // a^e for e >= 0; 0^0 = 1.
  Scalar pow(const Scalar& a, std::uint64_t e) const;

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

  // "QQ" or "F<p>", the spelling used by the script language.
  std::string name() const;
  std::string format(const Scalar& a) const;

  bool operator==(const Field& other) const noexcept { return p_ == other.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t residue(const Scalar& a) const;
  Scalar from_residue(std::uint64_t r) const;

  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace bsk
