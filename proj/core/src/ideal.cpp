#include "bsk/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace bsk {

namespace {

std::vector<Polynomial> simplify(const Ring& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (m.is_constant()) return {Polynomial::one(ring)};
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  // prune monomial generators divisible by an earlier (or smaller) monomial one
  std::vector<Polynomial> pruned;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i].is_monomial()) {
      pruned.push_back(out[i]);
      continue;
    }
    const Monomial& mi = out[i].terms()[0].mono;
    bool redundant = false;
    for (std::size_t j = 0; j < out.size() && !redundant; ++j) {
      if (j == i || !out[j].is_monomial()) continue;
      const Monomial& mj = out[j].terms()[0].mono;
      if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) pruned.push_back(out[i]);
  }
  if (pruned.empty()) pruned.emplace_back(ring);
  return pruned;
}

Ideal monomial_intersection(const Ideal& a, const Ideal& b) {
  std::vector<Monomial> lcms;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) lcms.push_back(f.terms()[0].mono.lcm(g.terms()[0].mono));
  }
  return Ideal::from_monomials(a.ring(), lcms);
}

// Ring with fresh variables prepended: ["_e0", ..., x_1, ..., x_n].
Ring prepend_variables(const Ring& ring, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("_e" + std::to_string(i));
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  return RingContext::make(std::move(names), ring->field(), kMaxVars);
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(simplify(ring_, std::move(generators))), cache_(std::make_shared<Cache>()) {}

Ideal Ideal::zero(Ring ring) { return Ideal(ring, {}); }
Ideal Ideal::unit(Ring ring) { return Ideal(ring, {Polynomial::one(ring)}); }

Ideal Ideal::maximal(Ring ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->dimension(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::from_monomials(Ring ring, const std::vector<Monomial>& monomials) {
  std::vector<Polynomial> gens;
  gens.reserve(monomials.size());
  for (const auto& m : monomials) gens.push_back(Polynomial::monomial(ring, m));
  return Ideal(ring, std::move(gens));
}

bool Ideal::is_monomial() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_zero() || g.is_monomial(); });
}

bool Ideal::is_homogeneous() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::inside_maximal() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return sgn(g.constant_term()) == 0; });
}

const GroebnerBasis& Ideal::groebner(const GroebnerCaps& caps) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->basis) return *cache_->basis;
  }
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(gens_, MonomialOrder::grevlex(), caps));
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->basis) cache_->basis = std::move(basis);
  return *cache_->basis;
}

bool Ideal::primary_to_maximal(const GroebnerCaps& caps) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->m_primary) return *cache_->m_primary;
  }
  auto decide = [&]() {
    if (!inside_maximal() || is_zero()) return false;
    const GroebnerBasis& g = groebner(caps);
    const std::size_t n = ring_->dimension();
    std::vector<Monomial> leads;
    for (std::size_t i = 0; i < g.size(); ++i) leads.push_back(g.leading_monomial(i));
    // zero-dimensional: every variable has a pure power among the leading monomials
    for (std::size_t v = 0; v < n; ++v) {
      const bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m[v] > 0 && m.degree() == m[v]; });
      if (!pure) return false;
    }
    // D = dim_k R/I bounds the nilpotency index of each variable modulo I.
    std::vector<Monomial> standard{Monomial(n)};
    std::unordered_set<Monomial, MonomialHash> seen{Monomial(n)};
    for (std::size_t head = 0; head < standard.size(); ++head) {
      for (std::size_t v = 0; v < n; ++v) {
        Monomial next = standard[head];
        next.set(v, next[v] + 1);
        if (seen.count(next)) continue;
        if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.divides(next); })) continue;
        seen.insert(next);
        standard.push_back(next);
        if (standard.size() > kPrimaryCheckBudget) return false;
      }
    }
    const std::size_t d = standard.size();
    for (std::size_t v = 0; v < n; ++v) {
      const Polynomial x = Polynomial::variable(ring_, v);
      Polynomial p = x;
      for (std::size_t k = 1; k < d && !p.is_zero(); ++k) p = normal_form(x * p, g);
      if (!normal_form(p, g).is_zero()) return false;
    }
    return true;
  };
  const bool result = decide();
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->m_primary = result;
  return result;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerCaps& caps) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  if (ideal.is_monomial()) {
    // every term must be divisible by some generator
    for (const auto& t : f.terms()) {
      bool hit = false;
      for (const auto& g : ideal.generators()) {
        if (g.terms()[0].mono.divides(t.mono)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  }
  return normal_form(f, ideal.groebner(caps)).is_zero();
}

bool local_member_by_colon(const Polynomial& f, const Ideal& ideal, const GroebnerCaps& caps) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  Ideal fresh(ideal.ring(), ideal.generators());
  Ideal q = colon_by_elimination(fresh, Ideal(ideal.ring(), {f}), caps);
  return !q.inside_maximal();
}

bool local_member(const Polynomial& f, const Ideal& ideal, const GroebnerCaps& caps) {
  if (ideal_member(f, ideal, caps)) return true;
  if (ideal.is_homogeneous() || ideal.primary_to_maximal(caps)) return false;
  return !colon_by_element(ideal, f, caps).inside_maximal();
}

bool contained(const Ideal& a, const Ideal& b, const GroebnerCaps& caps) {
  require_same_ring(a.ring(), b.ring());
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& g) { return ideal_member(g, b, caps); });
}

bool local_contained(const Ideal& a, const Ideal& b, const GroebnerCaps& caps) {
  require_same_ring(a.ring(), b.ring());
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& g) { return local_member(g, b, caps); });
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerCaps& caps) {
  require_same_ring(a.ring(), b.ring());
  return a.groebner(caps) == b.groebner(caps);
}

bool local_ideal_equal(const Ideal& a, const Ideal& b, const GroebnerCaps& caps) {
  return local_contained(a, b, caps) && local_contained(b, a, caps);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& ideal, std::uint64_t k) {
  Ideal result = Ideal::unit(ideal.ring());
  for (std::uint64_t i = 0; i < k; ++i) result = ideal_product(result, ideal);
  return result;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const GroebnerCaps& caps) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring->dimension();
  if (drop.empty()) return ideal;
  std::vector<bool> dropped(n, false);
  for (std::size_t d : drop) {
    if (d >= n) throw InvalidArgument("eliminated variable index out of range");
    dropped[d] = true;
  }
  // permuted ring: dropped variables first
  std::vector<std::size_t> positions(n);
  std::vector<std::string> names;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (dropped[i]) {
      positions[i] = names.size();
      names.push_back(ring->name(i));
      ++k;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!dropped[i]) {
      positions[i] = names.size();
      names.push_back(ring->name(i));
    }
  }
  Ring permuted = RingContext::make(names, ring->field(), kMaxVars);
  std::vector<std::size_t> back(n);
  for (std::size_t i = 0; i < n; ++i) back[positions[i]] = i;

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(permuted, positions));
  GroebnerBasis basis = buchberger(gens, MonomialOrder::elimination(k), caps);
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lm = basis.leading_monomial(i);
    bool free = true;
    for (std::size_t v = 0; v < k; ++v) free = free && lm[v] == 0;
    // elimination order: a leading monomial free of the block means the whole
    // element is free of it
    if (free) kept.push_back(basis.elements()[i].remap(ring, back));
  }
  return Ideal(ring, std::move(kept));
}

Ideal intersection_by_elimination(const Ideal& a, const Ideal& b, const GroebnerCaps& caps) {
  require_same_ring(a.ring(), b.ring());
  const Ring& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  const std::size_t n = ring->dimension();
  Ring ext = prepend_variables(ring, 1);
  std::vector<std::size_t> shift(n);
  std::iota(shift.begin(), shift.end(), 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::one(ext) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.remap(ext, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.remap(ext, shift));
  Ideal in_ext = eliminate(Ideal(ext, std::move(gens)), {0}, caps);
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  std::vector<Polynomial> out;
  for (const auto& g : in_ext.generators()) out.push_back(g.remap(ring, back));
  return Ideal(ring, std::move(out));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GroebnerCaps& caps) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_monomial() && b.is_monomial()) return monomial_intersection(a, b);
  return intersection_by_elimination(a, b, caps);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw DivisionByZero();
  const Field& field = f.ring()->field();
  const Term& lg = g.leading_term();
  Scalar inv = field.inv(lg.coeff);
  std::vector<Term> quotient;
  Polynomial r = f;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lg.mono.divides(lr.mono)) throw InvalidArgument("divide_exact: " + g.to_string() + " does not divide " + f.to_string());
    Term q{lg.mono.quotient_of(lr.mono), field.mul(lr.coeff, inv)};
    r = r - g.times_monomial(q.mono, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial(f.ring(), std::move(quotient));
}

Ideal colon_by_element(const Ideal& ideal, const Polynomial& f, const GroebnerCaps& caps) {
  require_same_ring(ideal.ring(), f.ring());
  const Ring& ring = ideal.ring();
  if (f.is_zero()) throw InvalidArgument("colon by the zero element");
  if (f.is_constant() || ideal.is_zero()) return ideal;
  if (ideal_member(f, ideal, caps)) return Ideal::unit(ring);
  if (ideal.is_monomial() && f.is_monomial()) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.terms()[0].mono.colon(f.terms()[0].mono));
    return Ideal::from_monomials(ring, gens);
  }
  Ideal inter = ideal_intersection(ideal, Ideal(ring, {f}), caps);
  std::vector<Polynomial> gens;
  for (const auto& g : inter.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(ring, std::move(gens));
}

Ideal ideal_colon(const Ideal& ideal, const Ideal& divisor, const GroebnerCaps& caps) {
  require_same_ring(ideal.ring(), divisor.ring());
  if (divisor.is_zero()) throw InvalidArgument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : divisor.generators()) {
    Ideal part = colon_by_element(ideal, g, caps);
    acc = acc ? ideal_intersection(*acc, part, caps) : part;
  }
  return *acc;
}

Ideal colon_by_elimination(const Ideal& ideal, const Ideal& divisor, const GroebnerCaps& caps) {
  require_same_ring(ideal.ring(), divisor.ring());
  const Ring& ring = ideal.ring();
  if (divisor.is_zero()) throw InvalidArgument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : divisor.generators()) {
    Ideal part = ideal;
    if (!g.is_constant()) {
      if (ideal.is_zero()) {
        part = ideal;
      } else {
        Ideal inter = intersection_by_elimination(ideal, Ideal(ring, {g}), caps);
        std::vector<Polynomial> gens;
        for (const auto& h : inter.generators()) gens.push_back(divide_exact(h, g));
        part = Ideal(ring, std::move(gens));
      }
    }
    acc = acc ? intersection_by_elimination(*acc, part, caps) : part;
  }
  return *acc;
}

DimensionResult quotient_dimension(const Ideal& ideal, const GroebnerCaps& caps) {
  const std::size_t n = ideal.ring()->dimension();
  DimensionResult result;
  if (ideal.is_zero()) {
    result.dimension = n;
    result.independent_set.resize(n);
    std::iota(result.independent_set.begin(), result.independent_set.end(), 0);
    return result;
  }
  const GroebnerBasis& basis = ideal.groebner(caps);
  if (basis.is_unit()) throw InvalidArgument("quotient dimension of the unit ideal");
  std::vector<std::uint32_t> supports;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lm = basis.leading_monomial(i);
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (lm[v]) s |= 1u << v;
    }
    supports.push_back(s);
  }
  std::uint32_t best = 0;
  int best_size = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best_size) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~mask) == 0; });
    if (independent) {
      best = mask;
      best_size = size;
    }
  }
  result.dimension = static_cast<std::size_t>(best_size);
  for (std::size_t v = 0; v < n; ++v) {
    if (best & (1u << v)) result.independent_set.push_back(v);
  }
  return result;
}

Ideal canonical(const Ideal& ideal, const GroebnerCaps& caps) {
  if (ideal.is_zero()) return ideal;
  const auto& elems = ideal.groebner(caps).elements();
  std::vector<Polynomial> gens(elems.rbegin(), elems.rend());
  return Ideal(ideal.ring(), std::move(gens));
}

}  // namespace bsk
