#include "bsk/field.hpp"

#include "bsk/errors.hpp"

namespace bsk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) {
    throw ConfigError("characteristic " + std::to_string(p) + " does not fit a machine word");
  }
  if (!is_prime(p)) {
    throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::uint64_t Field::residue(const Scalar& a) const {
  return mpz_get_ui(a.get_num_mpz_t());
}

Scalar Field::from_residue(std::uint64_t r) const {
  return Scalar(static_cast<unsigned long>(r));
}

Scalar Field::from_integer(long long v) const {
  return from_integer(mpz_class(std::to_string(v)));
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (is_rational()) return Scalar(v);
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p_));
  return Scalar(r);
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DivisionByZero();
  if (is_rational()) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }
  return div(from_integer(num), from_integer(den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a + b;
  std::uint64_t s = residue(a) + residue(b);
  if (s >= p_) s -= p_;
  return from_residue(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a - b;
  std::uint64_t x = residue(a), y = residue(b);
  return from_residue(x >= y ? x - y : x + p_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a * b;
  return from_residue((residue(a) * residue(b)) % p_);
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return -a;
  std::uint64_t x = residue(a);
  return from_residue(x == 0 ? 0 : p_ - x);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw DivisionByZero();
  if (is_rational()) return 1 / a;
  // Fermat: a^(p-2).
  return pow(a, p_ - 2);
}

Scalar Field::pow(const Scalar& a, std::uint64_t e) const {
  if (is_rational()) {
    Scalar result(1), base(a);
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }
  std::uint64_t result = 1 % p_, base = residue(a);
  while (e > 0) {
    if (e & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return from_residue(result);
}

std::string Field::name() const {
  return is_rational() ? std::string("QQ") : "F" + std::to_string(p_);
}

std::string Field::format(const Scalar& a) const { return a.get_str(); }

}  // namespace bsk
