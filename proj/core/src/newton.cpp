#include "bsk/newton.hpp"

#include <algorithm>

#include "bsk/fourier_motzkin.hpp"

namespace bsk {

namespace {

std::vector<Monomial> minimal_antichain(std::vector<Monomial> gens) {
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) { return grevlex.compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    // a divisor has no larger degree, so it sorts earlier
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); })) out.push_back(g);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool sum_fits(const std::vector<Monomial>& gens, std::size_t from, unsigned remaining,
              std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& bound) {
  if (remaining == 0) return true;
  if (from == gens.size()) return false;
  const std::size_t n = bound.size();
  const Monomial& g = gens[from];
  // take c copies of gens[from], largest first
  unsigned max_copies = remaining;
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i] > 0) {
      std::uint64_t room = (bound[i] - acc[i]) / g[i];
      max_copies = static_cast<unsigned>(std::min<std::uint64_t>(max_copies, room));
    }
  }
  for (unsigned c = max_copies + 1; c-- > 0;) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += std::uint64_t{c} * g[i];
    bool ok = sum_fits(gens, from + 1, remaining - c, acc, bound);
    for (std::size_t i = 0; i < n; ++i) acc[i] -= std::uint64_t{c} * g[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
  if (generators.empty()) throw InvalidArgument("monomial ideal needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != ring_->dimension()) throw ContextError("generator has wrong number of variables");
  }
  gens_ = minimal_antichain(std::move(generators));
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  if (ideal.is_zero() || !ideal.is_monomial()) {
    throw InvalidArgument("integral closure is available for nonzero monomial ideals only: " + ideal.to_string());
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.terms()[0].mono);
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool NewtonCertificate::verify(const Monomial& a, const MonomialIdeal& ideal) const {
  const auto& gens = ideal.generators();
  const std::size_t n = a.size();
  if (weights.size() != gens.size() || slack.size() != n || power == 0) return false;
  mpq_class total = 0;
  for (const auto& w : weights) {
    if (sgn(w) < 0) return false;
    total += w;
  }
  if (total != 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(slack[i]) < 0) return false;
    mpq_class lhs = slack[i];
    for (std::size_t j = 0; j < gens.size(); ++j) lhs += weights[j] * power * gens[j][i];
    if (lhs != a[i]) return false;
  }
  return true;
}

mpz_class NewtonCertificate::denominator() const {
  mpz_class d = 1;
  for (const auto& w : weights) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), w.get_den_mpz_t());
  return d;
}

std::optional<NewtonCertificate> np_member(const Monomial& a, const MonomialIdeal& ideal, unsigned k) {
  const auto& gens = ideal.generators();
  const std::size_t n = ideal.ring()->dimension();
  if (a.size() != n) throw ContextError("exponent vector has wrong length");
  if (k == 0) throw InvalidArgument("np_member needs k >= 1");
  const std::size_t s = gens.size();

  auto finish = [&](std::vector<mpq_class> weights) {
    NewtonCertificate cert{std::move(weights), std::vector<mpq_class>(n), k};
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class used = 0;
      for (std::size_t j = 0; j < s; ++j) used += cert.weights[j] * k * gens[j][i];
      cert.slack[i] = a[i] - used;
    }
    return cert;
  };

  for (std::size_t j = 0; j < s; ++j) {
    if (gens[j].pow(k).divides(a)) {
      std::vector<mpq_class> w(s);
      w[j] = 1;
      return finish(std::move(w));
    }
  }
  if (s == 1) return std::nullopt;

  // Substitute λ_last = 1 - Σ_{j<last} λ_j; unknowns λ_0..λ_{s-2}.
  const std::size_t m = s - 1;
  const Monomial& last = gens[m];
  std::vector<LinearInequality> rows;
  for (std::size_t i = 0; i < n; ++i) {
    LinearInequality r{std::vector<mpq_class>(m), mpq_class(a[i]) - mpq_class(k) * last[i]};
    for (std::size_t j = 0; j < m; ++j) r.coeffs[j] = mpq_class(k) * (mpz_class(gens[j][i]) - mpz_class(last[i]));
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < m; ++j) {
    LinearInequality r{std::vector<mpq_class>(m), 0};
    r.coeffs[j] = -1;
    rows.push_back(std::move(r));
  }
  rows.push_back(LinearInequality{std::vector<mpq_class>(m, mpq_class(1)), 1});

  auto x = fourier_motzkin_solve(rows, m);
  if (!x) return std::nullopt;
  std::vector<mpq_class> weights(s);
  mpq_class rest = 1;
  for (std::size_t j = 0; j < m; ++j) {
    weights[j] = (*x)[j];
    rest -= weights[j];
  }
  weights[m] = rest;
  return finish(std::move(weights));
}

std::vector<Monomial> closure_box(const MonomialIdeal& ideal, unsigned k, const ClosureCaps& caps) {
  const std::size_t n = ideal.ring()->dimension();
  std::vector<std::uint64_t> hi(n, 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < n; ++i) hi[i] = std::max<std::uint64_t>(hi[i], std::uint64_t{g[i]} * k);
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= hi[i] + 1;
    if (count > caps.box_budget) {
      throw BudgetError("closure enumeration box exceeds budget of " + std::to_string(caps.box_budget) + " points");
    }
  }
  std::vector<Monomial> points;
  points.reserve(count);
  Monomial cur(n);
  while (true) {
    points.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == hi[i]) {
      cur.set(i, 0);
      ++i;
    }
    if (i == n) break;
    cur.set(i, cur[i] + 1);
  }
  return points;
}

MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, unsigned k, const ClosureCaps& caps) {
  if (k == 0) throw InvalidArgument("integral_closure_power needs k >= 1");
  std::vector<Monomial> points = closure_box(ideal, k, caps);
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  // increasing degree: anything dominated by a found generator is skipped,
  // and a member not dominated is minimal
  std::sort(points.begin(), points.end(), [&](const Monomial& a, const Monomial& b) { return grevlex.compare(a, b) < 0; });
  std::vector<Monomial> found;
  for (const auto& p : points) {
    if (std::any_of(found.begin(), found.end(), [&](const Monomial& g) { return g.divides(p); })) continue;
    if (np_member(p, ideal, k)) found.push_back(p);
  }
  return MonomialIdeal(ideal.ring(), std::move(found));
}

std::optional<unsigned> power_test_witness(const Monomial& a, const MonomialIdeal& ideal, unsigned m_max) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> acc(n, 0), bound(n);
  for (unsigned m = 1; m <= m_max; ++m) {
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::uint64_t{a[i]} * m;
    if (sum_fits(ideal.generators(), 0, m, acc, bound)) return m;
  }
  return std::nullopt;
}

}  // namespace bsk
