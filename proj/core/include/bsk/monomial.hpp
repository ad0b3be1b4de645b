#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bsk {

// Hard limit on variables in any ring, including the auxiliary rings built
// for elimination and Rees algebras. User-declared rings have a lower,
// configurable cap (see RingContext).
inline constexpr std::size_t kMaxVars = 16;

using Exponent = std::uint32_t;

// Exponent vector of fixed capacity. Entries past size() are zero, so
// divisibility and lcm work without consulting the length.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  static Monomial from_span(std::span<const Exponent> exps);
  static Monomial from_ints(std::span<const long long> exps);

  std::size_t size() const noexcept { return n_; }
  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, Exponent v);
  std::uint64_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }
  std::vector<Exponent> to_vector() const;

  // this | other
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  // componentwise <=
  bool dominated_by(const Monomial& other) const noexcept { return divides(other); }

  Monomial operator*(const Monomial& other) const;
  // other / this, requires divides(other)
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial pow(std::uint64_t k) const;
  // max(this - other, 0) componentwise: the generator of (this) : (other).
  Monomial colon(const Monomial& other) const;

  // Same exponents placed at new positions of a ring with `nvars` variables.
  Monomial remap(std::span<const std::size_t> positions, std::size_t nvars) const;

  std::size_t hash() const noexcept;

  bool operator==(const Monomial& other) const noexcept {
    return n_ == other.n_ && e_ == other.e_;
  }
  // Storage order, for use as a map key. Not a monomial order.
  std::strong_ordering operator<=>(const Monomial& other) const noexcept {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    return e_ <=> other.e_;
  }

 private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint64_t deg_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { Lex, GrevLex, Elimination };

// Multiplicative total order on exponent vectors with 1 minimal.
// Elimination(k): total degree in the first k variables decides first, then
// grevlex on the first block, then grevlex on the rest; any monomial that
// involves a variable of the first block is larger than every monomial free
// of them.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex, 0); }
  static MonomialOrder elimination(std::size_t k) { return MonomialOrder(OrderKind::Elimination, k); }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }

  // Throws ContextError on length mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  bool operator==(const MonomialOrder& other) const noexcept {
    return kind_ == other.kind_ && block_ == other.block_;
  }

 private:
  MonomialOrder(OrderKind kind, std::size_t block) : kind_(kind), block_(block) {}
  OrderKind kind_;
  std::size_t block_;
};

}  // namespace bsk
