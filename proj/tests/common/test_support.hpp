#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "bsk/dsl/parser.hpp"
#include "bsk/ideal.hpp"

namespace bsk::testing {

inline Ring ring_of(std::vector<std::string> names, Field field = Field::rationals()) {
  return RingContext::make(std::move(names), field);
}

inline Polynomial P(const Ring& ring, const std::string& text) { return dsl::parse_polynomial(text, ring); }

inline Ideal I(const Ring& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(ring, g));
  return Ideal(ring, std::move(ps));
}

// Generators of the reduced grevlex basis, largest first.
inline std::vector<std::string> canon(const Ideal& ideal) {
  std::vector<std::string> out;
  const Ideal c = canonical(ideal);
  for (const auto& g : c.generators()) out.push_back(g.to_string());
  return out;
}

inline Polynomial random_poly(const Ring& ring, std::mt19937_64& rng, unsigned max_degree, unsigned terms,
                              int coeff_range = 5) {
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  std::vector<Term> ts;
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m(ring->dimension());
    unsigned budget = max_degree;
    for (std::size_t v = 0; v < ring->dimension(); ++v) {
      const unsigned e = std::min(budget, exp(rng));
      m.set(v, e);
      budget -= e;
    }
    ts.push_back(Term{m, ring->field().from_integer(coeff(rng))});
  }
  return Polynomial(ring, std::move(ts));
}

inline Polynomial random_homogeneous(const Ring& ring, std::mt19937_64& rng, unsigned degree, unsigned terms) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<std::size_t> var(0, ring->dimension() - 1);
  std::vector<Term> ts;
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m(ring->dimension());
    for (unsigned d = 0; d < degree; ++d) {
      const std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    ts.push_back(Term{m, ring->field().from_integer(coeff(rng))});
  }
  return Polynomial(ring, std::move(ts));
}

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == nvars) {
      m.set(v, left);
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(v, e);
      self(self, v + 1, left - e);
    }
  };
  if (nvars == 0) return {m};
  rec(rec, 0, degree);
  return out;
}

// Independent membership oracle for homogeneous ideals: f (homogeneous of
// degree d) lies in (g_1..g_s) iff it is in the span of the m·g_i of degree
// d. Rank is computed by exact Gaussian elimination over the field.
inline bool linear_algebra_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
  const Ring& ring = f.ring();
  const Field& field = ring->field();
  if (f.is_zero()) return true;
  const unsigned d = static_cast<unsigned>(f.total_degree());
  std::vector<std::vector<Term>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > d) continue;
    for (const auto& m : monomials_of_degree(ring->dimension(), d - static_cast<unsigned>(g.total_degree()))) {
      rows.push_back(g.times_monomial(m, field.from_integer(1)).terms());
    }
  }
  const std::vector<Monomial> cols = monomials_of_degree(ring->dimension(), d);
  auto col_of = [&](const Monomial& m) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] == m) return c;
    }
    return cols.size();
  };
  auto dense = [&](const std::vector<Term>& ts) {
    std::vector<Scalar> v(cols.size(), Scalar(0));
    for (const auto& t : ts) v[col_of(t.mono)] = t.coeff;
    return v;
  };
  std::vector<std::vector<Scalar>> basis;
  std::vector<std::size_t> pivots;
  auto reduce = [&](std::vector<Scalar> v) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Scalar c = v[pivots[b]];
      if (field.is_zero(c)) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = field.sub(v[k], field.mul(c, basis[b][k]));
    }
    return v;
  };
  for (const auto& r : rows) {
    std::vector<Scalar> v = reduce(dense(r));
    std::size_t piv = v.size();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!field.is_zero(v[k])) {
        piv = k;
        break;
      }
    }
    if (piv == v.size()) continue;
    const Scalar inv = field.inv(v[piv]);
    for (auto& x : v) x = field.mul(x, inv);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Scalar c = basis[b][piv];
      if (field.is_zero(c)) continue;
      for (std::size_t k = 0; k < v.size(); ++k) basis[b][k] = field.sub(basis[b][k], field.mul(c, v[k]));
    }
    basis.push_back(std::move(v));
    pivots.push_back(piv);
  }
  const std::vector<Scalar> rest = reduce(dense(f.terms()));
  for (const auto& x : rest) {
    if (!field.is_zero(x)) return false;
  }
  return true;
}

}  // namespace bsk::testing
