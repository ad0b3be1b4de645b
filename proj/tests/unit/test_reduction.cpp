#include "bsk/errors.hpp"
#include "bsk/reduction.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bsk;
using namespace bsk::testing;

TEST_SUITE("reduction") {
  TEST_CASE("analytic spread") {
    Ring r2 = ring_of({"x", "y"});
    Ring r3 = ring_of({"x", "y", "z"});
    CHECK(analytic_spread(I(r2, {"x^2"})).spread == 1);
    CHECK(analytic_spread(I(r3, {"x*y*z"})).spread == 1);
    CHECK(analytic_spread(I(r2, {"x^2", "x*y", "y^2"})).spread == 2);
    CHECK(analytic_spread(I(r2, {"x^2", "x*y"})).spread == 2);
    CHECK(analytic_spread(I(r3, {"x^2", "y^2", "z^2", "x*y"})).spread == 3);
    CHECK(analytic_spread(I(r3, {"x*y", "y*z", "x*z"})).spread == 3);
    CHECK(analytic_spread(I(r3, {"x^2", "y^2", "x*y*z"})).spread == 2);
    CHECK(analytic_spread(I(r3, {"x^2", "x*y", "y^2"})).spread == 2);
    CHECK(analytic_spread(Ideal::zero(r2)).spread == 0);
    CHECK_THROWS_AS(analytic_spread(I(r2, {"x + 1"})), InvalidArgument);
  }

  TEST_CASE("spread bounds: height <= spread <= dimension") {
    Ring r3 = ring_of({"x", "y", "z"});
    for (const auto& gens : std::vector<std::vector<const char*>>{
             {"x^2", "x*y"}, {"x*z", "y*z"}, {"x^3", "y^3", "x*y*z"}, {"x*y", "z^2"}, {"x", "y"}}) {
      std::vector<Polynomial> ps;
      for (const char* g : gens) ps.push_back(P(r3, g));
      Ideal ideal(r3, ps);
      const unsigned ell = analytic_spread(ideal).spread;
      CHECK(monomial_height(MonomialIdeal::from_ideal(ideal)) <= ell);
      CHECK(ell <= 3);
      CHECK(ell <= ideal.generators().size());
    }
  }

  TEST_CASE("reduction numbers") {
    Ring r = ring_of({"x", "y"});
    CHECK(reduction_number(I(r, {"x^2", "x*y", "y^2"}), I(r, {"x^2", "y^2"}), 6) == 1u);
    CHECK(reduction_number(I(r, {"x^3", "x^2*y", "y^3"}), I(r, {"x^3", "y^3"}), 6) == 2u);
    CHECK(reduction_number(I(r, {"x^2", "y^2"}), I(r, {"x^2", "y^2"}), 6) == 0u);
    CHECK_FALSE(reduction_number(I(r, {"x^2", "x*y", "y^2"}), I(r, {"x^2", "x*y"}), 6));
    CHECK_THROWS_AS(reduction_number(I(r, {"x^2"}), I(r, {"x"}), 6), InvalidArgument);
  }

  TEST_CASE("generic minimal reductions") {
    Ring r = ring_of({"x", "y"});
    Ideal ideal = I(r, {"x^3", "x*y", "y^3"});
    ReductionCertificate a = generic_minimal_reduction(ideal, 7);
    REQUIRE(a.verified);
    CHECK(a.spread == 2);
    CHECK(a.reduction.generators().size() == 2);
    CHECK(a.method == ReductionMethod::RandomCombination);
    CHECK(reduction_number(ideal, a.reduction, 6) == a.r);
    // same seed, same answer
    ReductionCertificate b = generic_minimal_reduction(ideal, 7);
    CHECK(a.reduction.to_string() == b.reduction.to_string());
    // the coefficient matrix reproduces the generators
    for (std::size_t i = 0; i < a.coefficient_matrix.size(); ++i) {
      Polynomial combo(r);
      for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
        combo = combo + ideal.generators()[j].scaled(a.coefficient_matrix[i][j]);
      }
      CHECK(Ideal(r, {combo}).to_string() == Ideal(r, {a.reduction.generators()[i]}).to_string());
    }
    ReductionCertificate subset = generic_minimal_reduction(I(r, {"x^2", "x*y", "y^2"}), 0);
    CHECK(subset.method == ReductionMethod::GeneratorSubset);
    CHECK(subset.reduction.to_string() == "(x^2, y^2)");
  }

  TEST_CASE("small prime fields are rejected for generic constructions") {
    Ring small = ring_of({"x", "y"}, Field::prime(7));
    CHECK_THROWS_AS(generic_minimal_reduction(I(small, {"x^3", "x*y", "y^3"}), 0), ConfigError);
    Ring big = ring_of({"x", "y"}, Field::prime(101));
    CHECK(generic_minimal_reduction(I(big, {"x^3", "x*y", "y^3"}), 0).verified);
  }

  TEST_CASE("padding preserves reductions") {
    Ring r = ring_of({"x", "y", "z"});
    Ideal ideal = I(r, {"x^2", "x*y", "y^2"});
    Ideal j = I(r, {"x^2", "y^2"});
    CHECK(verify_padding_preserves_reduction(ideal, j, 1, I(r, {"z^3"})));
    CHECK(verify_padding_preserves_reduction(ideal, j, 1, ideal_power(Ideal::maximal(r), 3)));
    CHECK(verify_padding_preserves_reduction(ideal, j, 1, I(r, {"x*z", "y^4"})));
    CHECK_THROWS_AS(verify_padding_preserves_reduction(ideal, I(r, {"x^2", "x*y"}), 1, I(r, {"z"})), InvalidArgument);
  }
}
