#include "bsk/monomial.hpp"

#include <algorithm>
#include <limits>

#include "bsk/errors.hpp"

namespace bsk {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxVars) {
    throw ContextError("monomial with " + std::to_string(n) + " variables exceeds the limit of " +
                       std::to_string(kMaxVars));
  }
}

Exponent checked_exponent(std::uint64_t v) {
  if (v > std::numeric_limits<Exponent>::max()) throw BudgetError("exponent overflow");
  return static_cast<Exponent>(v);
}

// grevlex restricted to positions [lo, hi).
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_size(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<Exponent> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (Exponent v : exps) set(i++, v);
}

Monomial Monomial::from_span(std::span<const Exponent> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

Monomial Monomial::from_ints(std::span<const long long> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw InvalidArgument("negative exponent");
    m.set(i, checked_exponent(static_cast<std::uint64_t>(exps[i])));
  }
  return m;
}

void Monomial::set(std::size_t i, Exponent v) {
  if (i >= n_) throw ContextError("exponent index out of range");
  deg_ = deg_ - e_[i] + v;
  e_[i] = v;
}

std::vector<Exponent> Monomial::to_vector() const {
  return std::vector<Exponent>(e_.begin(), e_.begin() + n_);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(std::max(n_, other.n_));
  for (std::size_t i = 0; i < r.n_; ++i) {
    r.e_[i] = checked_exponent(std::uint64_t{e_[i]} + other.e_[i]);
  }
  r.deg_ = deg_ + other.deg_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(other.n_);
  for (std::size_t i = 0; i < r.n_; ++i) r.e_[i] = other.e_[i] - e_[i];
  r.deg_ = other.deg_ - deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(std::max(n_, other.n_));
  for (std::size_t i = 0; i < r.n_; ++i) {
    r.e_[i] = std::max(e_[i], other.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::pow(std::uint64_t k) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r.e_[i] = checked_exponent(std::uint64_t{e_[i]} * k);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::colon(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r.e_[i] = e_[i] > other.e_[i] ? e_[i] - other.e_[i] : 0;
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::remap(std::span<const std::size_t> positions, std::size_t nvars) const {
  Monomial r(nvars);
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0) r.set(positions[i], e_[i]);
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw ContextError("comparing monomials of different lengths");
  const std::size_t n = a.size();
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::GrevLex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::Elimination: {
      const std::size_t k = std::min(block_, n);
      if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace bsk
