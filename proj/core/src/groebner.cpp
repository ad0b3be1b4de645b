#include "bsk/groebner.hpp"

#include <algorithm>
#include <span>

namespace bsk {

namespace {

using Terms = std::vector<Term>;

// a - c*m*b over sorted spans.
Terms sub_scaled(const Field& field, std::span<const Term> a, const Scalar& c, const Monomial& m,
                 std::span<const Term> b, const MonomialOrder& order) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = m * b[j].mono;
    auto cmp = i == a.size() ? std::strong_ordering::less : order.compare(a[i].mono, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{mb, field.neg(field.mul(c, b[j].coeff))});
      ++j;
    } else {
      Scalar s = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
      if (!field.is_zero(s)) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(const Field& field, Terms& t) {
  if (t.empty() || field.is_one(t.front().coeff)) return;
  Scalar inv = field.inv(t.front().coeff);
  for (auto& term : t) term.coeff = field.mul(term.coeff, inv);
}

// Full reduction against monic reducers; with `top_only` stops at the first
// irreducible leading term.
Terms reduce(const Field& field, Terms work, const std::vector<const Terms*>& reducers,
             const MonomialOrder& order, bool top_only = false) {
  Terms rem;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term& lt = work[head];
    const Terms* hit = nullptr;
    for (const Terms* g : reducers) {
      if (g->front().mono.divides(lt.mono)) {
        hit = g;
        break;
      }
    }
    if (!hit) {
      if (top_only) {
        rem.insert(rem.end(), work.begin() + static_cast<std::ptrdiff_t>(head), work.end());
        return rem;
      }
      rem.push_back(lt);
      ++head;
      continue;
    }
    Monomial q = hit->front().mono.quotient_of(lt.mono);
    Scalar c = lt.coeff;
    work = sub_scaled(field, std::span<const Term>(work).subspan(head + 1), c, q,
                      std::span<const Term>(*hit).subspan(1), order);
    head = 0;
  }
  return rem;
}

Terms ordered_copy(const Polynomial& f, const MonomialOrder& order) {
  Terms t = f.terms();
  if (order.kind() != OrderKind::GrevLex) sort_terms(t, order);
  return t;
}

Terms s_polynomial(const Field& field, const Terms& f, const Terms& g, const MonomialOrder& order) {
  const Monomial l = f.front().mono.lcm(g.front().mono);
  Terms left;
  left.reserve(f.size());
  Monomial mf = f.front().mono.quotient_of(l);
  for (std::size_t i = 1; i < f.size(); ++i) left.push_back(Term{f[i].mono * mf, f[i].coeff});
  Monomial mg = g.front().mono.quotient_of(l);
  // both monic: S = mf*f - mg*g, leading terms cancel
  return sub_scaled(field, left, Scalar(1), mg, std::span<const Term>(g).subspan(1), order);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(const Field& field, const MonomialOrder& order, const GroebnerCaps& caps, Ring ring)
      : field_(field), order_(order), caps_(caps), ring_(std::move(ring)) {}

  // Returns false if the ideal turned out to be the unit ideal.
  bool run(const std::vector<Polynomial>& generators) {
    for (const auto& f : generators) {
      if (f.is_zero()) continue;
      Terms t = ordered_copy(f, order_);
      make_monic(field_, t);
      if (t.front().mono.is_one()) return false;
      update(std::move(t));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      auto best = select();
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (polys_[p.i].size() == 1 && polys_[p.j].size() == 1) continue;
      if (p.lcm.degree() > caps_.max_degree) {
        throw GroebnerBudgetError("Groebner degree cap " + std::to_string(caps_.max_degree) +
                                      " exceeded (S-pair of degree " +
                                      std::to_string(p.lcm.degree()) + ")",
                                  partial());
      }
      if (++processed > caps_.max_pairs) {
        throw GroebnerBudgetError("Groebner pair cap exceeded", partial());
      }
      Terms h = s_polynomial(field_, polys_[p.i], polys_[p.j], order_);
      h = reduce(field_, std::move(h), reducers(), order_, /*top_only=*/true);
      if (h.empty()) continue;
      make_monic(field_, h);
      if (h.front().mono.is_one()) return false;
      update(std::move(h));
    }
    return true;
  }

  // Minimal, interreduced, monic, sorted by increasing leading monomial.
  std::vector<Terms> reduced_basis() const {
    std::vector<const Terms*> live;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) live.push_back(&polys_[i]);
    }
    std::sort(live.begin(), live.end(), [&](const Terms* a, const Terms* b) {
      return order_.compare(a->front().mono, b->front().mono) < 0;
    });
    std::vector<const Terms*> minimal;
    for (const Terms* g : live) {
      bool redundant = false;
      for (const Terms* k : minimal) {
        if (k->front().mono.divides(g->front().mono)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(g);
    }
    std::vector<Terms> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const Terms*> others;
      for (std::size_t k = 0; k < minimal.size(); ++k) {
        if (k != i) others.push_back(minimal[k]);
      }
      Terms tail(minimal[i]->begin() + 1, minimal[i]->end());
      Terms r = reduce(field_, std::move(tail), others, order_);
      r.insert(r.begin(), minimal[i]->front());
      make_monic(field_, r);
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::vector<const Terms*> reducers() const {
    std::vector<const Terms*> out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) out.push_back(&polys_[i]);
    }
    return out;
  }

  std::vector<Polynomial> partial() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) out.emplace_back(ring_, polys_[i]);
    }
    return out;
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      auto c = order_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  // Gebauer–Möller installation of a new basis element h.
  void update(Terms h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.front().mono;
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) candidates.push_back(Pair{g, hi, lh.lcm(polys_[g].front().mono)});
    }
    // Criterion M: drop (h,g1) if some other (h,g2) has an lcm properly dividing
    // its lcm, or an equal lcm earlier in the list; coprime pairs are kept
    // here so they can shadow others, then discarded.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = lh.coprime(polys_[p.i].front().mono);
      bool shadowed = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !shadowed; ++b) {
          if (b == a) continue;
          const Monomial& l2 = candidates[b].lcm;
          if (l2.divides(p.lcm) && (!(l2 == p.lcm) || b < a)) shadowed = true;
        }
      }
      if (!shadowed) kept.push_back(p);
    }
    // Chain criterion on existing pairs.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(polys_[p.i].front().mono.lcm(lh) == p.lcm) &&
                  !(polys_[p.j].front().mono.lcm(lh) == p.lcm);
      if (!drop) old.push_back(p);
    }
    pairs_ = std::move(old);
    for (const Pair& p : kept) {
      if (!lh.coprime(polys_[p.i].front().mono)) pairs_.push_back(p);
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].front().mono)) active_[g] = false;
    }
  }

  const Field& field_;
  MonomialOrder order_;
  GroebnerCaps caps_;
  Ring ring_;
  std::vector<Terms> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && ordered_[0].front().mono.is_one();
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
  return ring_->same_as(*other.ring_) && order_ == other.order_ && elements_ == other.elements_;
}

void GroebnerBasis::push(std::vector<Term> ordered) {
  elements_.emplace_back(ring_, ordered);
  ordered_.push_back(std::move(ordered));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  require_same_ring(f.ring(), basis.ring());
  if (f.is_zero() || basis.is_zero()) return f;
  std::vector<const Terms*> reducers;
  for (std::size_t i = 0; i < basis.size(); ++i) reducers.push_back(&basis.ordered_terms(i));
  Terms r = reduce(f.ring()->field(), ordered_copy(f, basis.order()), reducers, basis.order());
  return Polynomial(f.ring(), std::move(r));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerCaps& caps) {
  if (generators.empty()) throw InvalidArgument("buchberger needs a ring; pass the zero polynomial");
  const Ring& ring = generators.front().ring();
  for (const auto& g : generators) require_same_ring(ring, g.ring());
  GroebnerBasis out(ring, order);
  Engine engine(ring->field(), order, caps, ring);
  if (!engine.run(generators)) {
    out.push(Terms{Term{Monomial(ring->dimension()), Scalar(1)}});
    return out;
  }
  for (auto& t : engine.reduced_basis()) out.push(std::move(t));
  return out;
}

Polynomial reduced_s_polynomial(const GroebnerBasis& basis, std::size_t i, std::size_t j) {
  const Field& field = basis.ring()->field();
  Terms s = s_polynomial(field, basis.ordered_terms(i), basis.ordered_terms(j), basis.order());
  std::vector<const Terms*> reducers;
  for (std::size_t k = 0; k < basis.size(); ++k) reducers.push_back(&basis.ordered_terms(k));
  return Polynomial(basis.ring(), reduce(field, std::move(s), reducers, basis.order()));
}

bool all_s_polynomials_reduce_to_zero(const GroebnerBasis& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduced_s_polynomial(basis, i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace bsk
