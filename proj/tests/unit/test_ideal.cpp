#include <random>

#include "bsk/errors.hpp"
#include "bsk/ideal.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bsk;
using namespace bsk::testing;

namespace {

Ideal random_monomial_ideal(const Ring& r, std::mt19937_64& rng, unsigned count, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Monomial> ms;
  for (unsigned k = 0; k < count; ++k) {
    Monomial m(r->dimension());
    for (std::size_t v = 0; v < r->dimension(); ++v) m.set(v, e(rng));
    if (m.is_one()) m.set(0, 1);
    ms.push_back(m);
  }
  return Ideal::from_monomials(r, ms);
}

// (I : m) for monomial I is generated by g / gcd(g, m).
Ideal monomial_colon_oracle(const Ideal& ideal, const Monomial& m) {
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators()) {
    const Monomial& gm = g.terms()[0].mono;
    Monomial q(gm.size());
    for (std::size_t v = 0; v < gm.size(); ++v) q.set(v, gm[v] > m[v] ? gm[v] - m[v] : 0);
    out.push_back(q);
  }
  return Ideal::from_monomials(ideal.ring(), out);
}

}  // namespace

TEST_SUITE("ideal") {
  TEST_CASE("generator simplification") {
    Ring r = ring_of({"x", "y"});
    CHECK(I(r, {"2*x^2", "x^2", "x^3", "x*y"}).to_string() == "(x^2, x*y)");
    CHECK(I(r, {"x", "3"}).to_string() == "(1)");
    CHECK(I(r, {"0", "0"}).is_zero());
    CHECK(Ideal::maximal(r).to_string() == "(x, y)");
  }

  TEST_CASE("frozen colon and intersection examples") {
    Ring r = ring_of({"x", "y"});
    CHECK(canon(ideal_colon(I(r, {"x^2", "y^2"}), I(r, {"x*y"}))) == std::vector<std::string>{"x", "y"});
    CHECK(canon(ideal_intersection(I(r, {"x"}), I(r, {"y"}))) == std::vector<std::string>{"x*y"});
    CHECK(canon(ideal_intersection(I(r, {"x^2", "y"}), I(r, {"x", "y^2"}))) == std::vector<std::string>{"x^2", "x*y", "y^2"});
    CHECK(canon(colon_by_element(I(r, {"x^2 - y^2"}), P(r, "x - y"))) == std::vector<std::string>{"x+y"});
  }

  TEST_CASE("monomial colon matches the closed form") {
    std::mt19937_64 rng(17);
    Ring r = ring_of({"x", "y", "z"});
    for (int trial = 0; trial < 40; ++trial) {
      Ideal a = random_monomial_ideal(r, rng, 3, 3);
      Monomial m(3);
      for (std::size_t v = 0; v < 3; ++v) m.set(v, static_cast<Exponent>(rng() % 3));
      Ideal got = colon_by_element(a, Polynomial::monomial(r, m));
      CHECK(ideal_equal(got, monomial_colon_oracle(a, m)));
    }
  }

  TEST_CASE("colon and intersection: fast and elimination routes agree") {
    std::mt19937_64 rng(29);
    Ring r = ring_of({"x", "y", "z"});
    for (int trial = 0; trial < 12; ++trial) {
      Ideal a(r, {random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 2)});
      Ideal b(r, {random_poly(r, rng, 2, 2)});
      CHECK(ideal_equal(ideal_intersection(a, b), intersection_by_elimination(a, b)));
      CHECK(ideal_equal(ideal_colon(a, b), colon_by_elimination(a, b)));
      // (A : B)·B ⊆ A and A ∩ B ⊆ A, B
      CHECK(contained(ideal_product(ideal_colon(a, b), b), a));
      Ideal meet = ideal_intersection(a, b);
      CHECK(contained(meet, a));
      CHECK(contained(meet, b));
      CHECK(contained(ideal_product(a, b), meet));
    }
    for (int trial = 0; trial < 20; ++trial) {
      Ideal a = random_monomial_ideal(r, rng, 3, 3), b = random_monomial_ideal(r, rng, 2, 2);
      CHECK(ideal_equal(ideal_intersection(a, b), intersection_by_elimination(a, b)));
      CHECK(ideal_equal(ideal_colon(a, b), colon_by_elimination(a, b)));
    }
  }

  TEST_CASE("local membership") {
    Ring r = ring_of({"x", "y"});
    Ideal a = I(r, {"y + x*y"});
    CHECK_FALSE(ideal_member(P(r, "y"), a));
    CHECK(local_member(P(r, "y"), a));
    CHECK(local_member_by_colon(P(r, "y"), a));
    CHECK_FALSE(local_member(P(r, "x"), a));
    CHECK_FALSE(local_member_by_colon(P(r, "x"), a));
    // homogeneous: local equals global
    CHECK_FALSE(local_member(P(r, "x*y"), I(r, {"x^2", "y^2"})));
    // a component away from the origin does not matter locally
    Ideal split = I(r, {"x^2 - x", "y"});
    CHECK(local_member(P(r, "x"), split));
    CHECK_FALSE(ideal_member(P(r, "x"), split));
  }

  TEST_CASE("local membership: both routes agree on random samples") {
    std::mt19937_64 rng(41);
    Ring r = ring_of({"x", "y"});
    for (int trial = 0; trial < 25; ++trial) {
      Ideal a(r, {random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3)});
      if (!a.inside_maximal()) continue;
      const Polynomial f = random_poly(r, rng, 2, 2);
      CHECK(local_member(f, a) == local_member_by_colon(f, a));
    }
  }

  TEST_CASE("primary to the maximal ideal") {
    Ring r = ring_of({"x", "y"});
    CHECK(ideal_power(Ideal::maximal(r), 2).primary_to_maximal());
    CHECK(I(r, {"x^2 + y^3", "y^2"}).primary_to_maximal());
    CHECK_FALSE(I(r, {"x"}).primary_to_maximal());
    CHECK_FALSE(I(r, {"x^2 + 4*y", "y^2 - 7/2*x"}).primary_to_maximal());  // several points
    CHECK_FALSE(I(r, {"x - 1", "y"}).primary_to_maximal());
    CHECK_FALSE(Ideal::unit(r).primary_to_maximal());
  }

  TEST_CASE("dimension") {
    Ring r2 = ring_of({"x", "y"});
    CHECK(quotient_dimension(I(r2, {"x"})).dimension == 1);
    CHECK(quotient_dimension(Ideal::maximal(r2)).dimension == 0);
    CHECK(quotient_dimension(I(r2, {"x*y"})).dimension == 1);
    CHECK(quotient_dimension(Ideal::zero(r2)).dimension == 2);
    Ring r3 = ring_of({"x", "y", "z"});
    CHECK(quotient_dimension(I(r3, {"x*z", "y*z"})).dimension == 2);
    CHECK(quotient_dimension(I(r3, {"x^2", "x*y", "y^2"})).dimension == 1);
    CHECK_THROWS_AS(quotient_dimension(Ideal::unit(r3)), InvalidArgument);
  }

  TEST_CASE("elimination") {
    Ring r = ring_of({"t", "x", "z"});
    Ideal e = eliminate(I(r, {"x - t^2", "z - t^8"}), {0});
    CHECK(canon(e) == std::vector<std::string>{"x^4-z"});
  }

  TEST_CASE("sums, products, powers") {
    Ring r = ring_of({"x", "y"});
    Ideal m = Ideal::maximal(r);
    CHECK(canon(ideal_power(m, 0)) == std::vector<std::string>{"1"});
    CHECK(canon(ideal_power(m, 3)).size() == 4);
    CHECK(ideal_equal(ideal_product(m, m), ideal_power(m, 2)));
    CHECK(ideal_equal(ideal_sum(I(r, {"x"}), I(r, {"y"})), m));
    CHECK(local_ideal_equal(I(r, {"x + x*y"}), I(r, {"x"})));
    CHECK_FALSE(ideal_equal(I(r, {"x + x*y"}), I(r, {"x"})));
  }
}
