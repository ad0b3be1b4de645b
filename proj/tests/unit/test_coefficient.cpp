#include "bsk/coefficient.hpp"
#include "bsk/errors.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bsk;
using namespace bsk::testing;

namespace {

using Strings = std::vector<std::string>;

bool same_product(const Ideal& a, const Ideal& b, const Ideal& c) {
  return local_ideal_equal(ideal_product(a, c), ideal_product(b, c));
}

// The defining property, checked directly: I·a = J·a, and adjoining any
// monomial of degree <= max_degree outside a breaks it.
void check_largest(const Ideal& ideal, const Ideal& j, const Ideal& a, unsigned max_degree) {
  CHECK(same_product(ideal, j, a));
  const Ring& r = ideal.ring();
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const auto& m : monomials_of_degree(r->dimension(), d)) {
      const Polynomial pm = Polynomial::monomial(r, m);
      if (local_member(pm, a)) continue;
      CHECK_FALSE(same_product(ideal, j, ideal_sum(a, Ideal(r, {pm}))));
    }
  }
}

}  // namespace

TEST_SUITE("coefficient") {
  TEST_CASE("frozen fixpoint example in two and three variables") {
    for (const auto& names : {Strings{"x", "y"}, Strings{"x", "y", "z"}}) {
      Ring r = ring_of(names);
      auto res = coefficient_ideal(I(r, {"x^2", "x*y", "y^2"}), I(r, {"x^2", "y^2"}), 12, 1u);
      CHECK(res.certified);
      CHECK(res.fixpoint_index == 1u);
      CHECK(canon(res.value) == Strings{"x", "y"});
      CHECK(res.trace.terminated == Termination::Fixpoint);
      REQUIRE(res.known_member_floor);
    }
  }

  TEST_CASE("a(I, I) is the unit ideal at step 0") {
    Ring r = ring_of({"x", "y"});
    Ideal ideal = I(r, {"x^3", "y^2"});
    auto res = coefficient_ideal(ideal, ideal, 5);
    CHECK(res.certified);
    CHECK(res.fixpoint_index == 0u);
    CHECK(canon(res.value) == Strings{"1"});
  }

  TEST_CASE("colon iteration on (m^2, m^3) descends through powers of m") {
    Ring r = ring_of({"x", "y"});
    const Ideal m = Ideal::maximal(r);
    auto res = coefficient_ideal(ideal_power(m, 2), ideal_power(m, 3), 8);
    CHECK_FALSE(res.certified);
    CHECK(res.trace.terminated == Termination::CapReached);
    REQUIRE(res.trace.steps.size() == 9);
    for (std::size_t k = 0; k < res.trace.steps.size(); ++k) CHECK(ideal_equal(res.trace.steps[k], ideal_power(m, k)));
    CHECK(coefficient_ideal(ideal_power(m, 2), ideal_power(m, 3), 0).trace.steps.size() == 1);
    auto one = coefficient_ideal(ideal_power(m, 2), ideal_power(m, 3), 1);
    REQUIRE(one.trace.steps.size() == 2);
    CHECK(ideal_equal(one.trace.steps[1], m));
  }

  TEST_CASE("certified values are the largest ideals with I b = J b") {
    Ring r = ring_of({"x", "y"});
    struct Pair {
      std::vector<const char*> i, j;
    };
    for (const Pair& p : std::vector<Pair>{{{"x^2", "x*y", "y^2"}, {"x^2", "y^2"}},
                                           {{"x^3", "x^2*y", "y^3"}, {"x^3", "y^3"}},
                                           {{"x^4", "x^3*y", "x*y^3", "y^4"}, {"x^4", "y^4"}},
                                           {{"x^2", "x*y"}, {"x^2", "x*y"}}}) {
      std::vector<Polynomial> gi, gj;
      for (auto g : p.i) gi.push_back(P(r, g));
      for (auto g : p.j) gj.push_back(P(r, g));
      Ideal ideal(r, gi), j(r, gj);
      auto res = coefficient_ideal(ideal, j, 12);
      REQUIRE(res.certified);
      check_largest(ideal, j, res.value, 5);
    }
  }

  TEST_CASE("preconditions") {
    Ring r = ring_of({"x", "y"});
    CHECK_THROWS_AS(coefficient_ideal(I(r, {"x"}), I(r, {"y"}), 4), InvalidArgument);
    CHECK_THROWS_AS(coefficient_ideal(I(r, {"x + 1"}), I(r, {"x + 1"}), 4), InvalidArgument);
  }

  TEST_CASE("default pads and padded pairs") {
    Ring r2 = ring_of({"x", "y"});
    CHECK(default_pads(I(r2, {"x^2", "x*y"})) == std::vector<Polynomial>{P(r2, "y")});
    CHECK(default_pads(I(r2, {"x^2", "y^3"})).empty());
    Ring r3 = ring_of({"x", "y", "z"});
    CHECK(default_pads(I(r3, {"x^2", "x*y", "y^2"})) == std::vector<Polynomial>{P(r3, "z")});
    auto pair = padded_pair(I(r3, {"x^2", "x*y", "y^2"}), I(r3, {"x^2", "y^2"}), {P(r3, "z")}, 3);
    CHECK(pair.ideal.to_string() == "(x^2, x*y, y^2, z^3)");
    CHECK(pair.reduction.to_string() == "(x^2, y^2, z^3)");
    CHECK(padded_pair(I(r3, {"x^2", "x*y", "y^2"}), I(r3, {"x^2", "y^2"}), {P(r3, "z")}, 1).ideal.to_string() ==
          "(x^2, x*y, y^2, z)");
    CHECK_THROWS_AS(padded_pair(I(r3, {"x^2", "x*y"}), I(r3, {"x^2", "x*y"}), {P(r3, "z")}, 1), InvalidArgument);
    CHECK_THROWS_AS(padded_pair(I(r3, {"x^2"}), I(r3, {"x^2"}), {P(r3, "z")}, 1), InvalidArgument);
  }

  TEST_CASE("ladder over an m-primary ideal with no pads is constant") {
    Ring r = ring_of({"x", "y"});
    Ideal ideal = I(r, {"x^2", "x*y", "y^2"});
    PaddingLadder l = coefficient_ladder(ideal, I(r, {"x^2", "y^2"}), {}, 4, 1u);
    REQUIRE(l.rungs.size() == 4);
    for (const auto& rung : l.rungs) CHECK(local_ideal_equal(rung.coefficient.value, l.base.value));
    CHECK(l.monotone);
    CHECK(l.base_included == true);
    CHECK(l.stabilization == 1u);
    CHECK(l.limit_matches_base);
  }

  TEST_CASE("ladder lemmas and truncation probe on a non m-primary pair") {
    Ring r = ring_of({"x", "y", "z"});
    Ideal ideal = I(r, {"x^2", "x*y", "y^2"});
    PaddingLadder l = coefficient_ladder(ideal, I(r, {"x^2", "y^2"}), {P(r, "z")}, 5, 1u);
    CHECK(l.all_rungs_certified);
    CHECK(l.monotone);
    CHECK(l.base_included == true);
    for (const auto& rung : l.rungs) CHECK(local_contained(l.base.value, rung.coefficient.value));
    auto rows = chevalley_truncation_probe(l, 3);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) CHECK(row.t.has_value());
  }
}
