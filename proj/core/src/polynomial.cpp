#include "bsk/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "bsk/errors.hpp"

namespace bsk {

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

std::vector<Term> combine(const Field& field, std::vector<Term> terms) {
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
    if (!inserted) it->second = field.add(it->second, t.coeff);
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!field.is_zero(c)) out.push_back(Term{m, c});
  }
  sort_terms(out, kCanonical);
  return out;
}

}  // namespace

void sort_terms(std::vector<Term>& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
}

std::vector<Term> axpy_terms(const Field& field, const std::vector<Term>& a, const Scalar& c,
                             const Monomial& m, const std::vector<Term>& b,
                             const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = m * b[j].mono;
    if (i == a.size()) {
      out.push_back(Term{mb, field.mul(c, b[j].coeff)});
      ++j;
      continue;
    }
    auto cmp = order.compare(a[i].mono, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{mb, field.mul(c, b[j].coeff)});
      ++j;
    } else {
      Scalar s = field.add(a[i].coeff, field.mul(c, b[j].coeff));
      if (!field.is_zero(s)) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw ContextError("polynomial without a ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : Polynomial(std::move(ring)) {
  for (const auto& t : terms) {
    if (t.mono.size() != ring_->dimension()) throw ContextError("term has wrong number of variables");
  }
  terms_ = combine(ring_->field(), std::move(terms));
}

Polynomial::Polynomial(Ring ring, std::vector<Term> sorted_terms, bool)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(Ring ring, const Scalar& c) {
  Polynomial p(ring);
  Scalar v = ring->field().is_rational() ? c : ring->field().from_fraction(c.get_num(), c.get_den());
  if (!ring->field().is_zero(v)) p.terms_.push_back(Term{Monomial(ring->dimension()), v});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  if (i >= ring->dimension()) throw ContextError("variable index out of range");
  Monomial m(ring->dimension());
  m.set(i, 1);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Scalar c) {
  if (m.size() != ring->dimension()) throw ContextError("monomial has wrong number of variables");
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

std::uint64_t Polynomial::total_degree() const noexcept {
  // grevlex sorts by degree first.
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar(0);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  return Polynomial(ring_,
                    axpy_terms(ring_->field(), terms_, Scalar(1), Monomial(ring_->dimension()),
                               other.terms_, kCanonical),
                    true);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  return Polynomial(ring_,
                    axpy_terms(ring_->field(), terms_, ring_->field().neg(Scalar(1)),
                               Monomial(ring_->dimension()), other.terms_, kCanonical),
                    true);
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(Scalar(1))); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  if (other.is_monomial()) return times_monomial(other.terms_[0].mono, other.terms_[0].coeff);
  if (is_monomial()) return other.times_monomial(terms_[0].mono, terms_[0].coeff);
  const Field& field = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prod.push_back(Term{a.mono * b.mono, field.mul(a.coeff, b.coeff)});
  }
  return Polynomial(ring_, combine(field, std::move(prod)), true);
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& field = ring_->field();
  if (field.is_zero(c)) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field.mul(t.coeff, c);
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  const Field& field = ring_->field();
  if (field.is_zero(c)) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, field.mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  const std::uint64_t p = ring_->field().characteristic();
  if (k == 0) return one(ring_);
  if (p != 0 && k >= p) {
    // f^k = prod_j (f^(p^j))^(d_j) with d_j the base-p digits of k.
    Polynomial result = one(ring_);
    Polynomial frob = *this;
    while (k > 0) {
      std::uint64_t digit = k % p;
      if (digit) result = result * frob.pow(digit);
      k /= p;
      if (k > 0) {
        std::vector<Term> next;
        next.reserve(frob.terms_.size());
        for (const auto& t : frob.terms_) next.push_back(Term{t.mono.pow(p), t.coeff});
        frob = Polynomial(ring_, std::move(next), true);
      }
    }
    return result;
  }
  Polynomial result = one(ring_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || ring_->field().is_one(terms_[0].coeff)) return *this;
  return scaled(ring_->field().inv(terms_[0].coeff));
}

Polynomial Polynomial::remap(const Ring& target, std::span<const std::size_t> positions) const {
  if (!(target->field() == ring_->field())) throw ContextError("remap across coefficient fields");
  if (positions.size() != ring_->dimension()) throw ContextError("remap position list has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono.remap(positions, target->dimension()), t.coeff});
  return Polynomial(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  return ring_->same_as(*other.ring_) && terms_ == other.terms_;
}

std::string format_monomial(const RingContext& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (negative) {
      s += "-";
    } else if (!s.empty()) {
      s += "+";
    }
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += format_monomial(*ring_, t.mono);
    }
  }
  return s;
}

}  // namespace bsk
