#include <random>

#include "bsk/errors.hpp"
#include "bsk/fourier_motzkin.hpp"
#include "bsk/newton.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bsk;
using namespace bsk::testing;

namespace {

MonomialIdeal MI(const Ring& r, std::initializer_list<const char*> gens) { return MonomialIdeal::from_ideal(I(r, gens)); }

std::vector<std::string> gens_of(const MonomialIdeal& m) { return canon(m.to_ideal()); }

MonomialIdeal random_mi(const Ring& r, std::mt19937_64& rng) {
  std::vector<Monomial> ms;
  const unsigned count = 1 + static_cast<unsigned>(rng() % 3);
  for (unsigned k = 0; k < count; ++k) {
    Monomial m(r->dimension());
    for (std::size_t v = 0; v < r->dimension(); ++v) m.set(v, static_cast<Exponent>(rng() % 4));
    if (m.is_one()) m.set(0, 2);
    ms.push_back(m);
  }
  return MonomialIdeal(r, ms);
}

}  // namespace

TEST_SUITE("newton") {
  TEST_CASE("Fourier-Motzkin") {
    // x + y <= 1, x >= 0, y >= 0, x + y >= 1
    std::vector<LinearInequality> sys{{{1, 1}, 1}, {{-1, 0}, 0}, {{0, -1}, 0}, {{-1, -1}, -1}};
    auto pt = fourier_motzkin_solve(sys, 2);
    REQUIRE(pt);
    CHECK((*pt)[0] + (*pt)[1] == 1);
    CHECK((*pt)[0] >= 0);
    CHECK((*pt)[1] >= 0);
    sys.push_back({{1, 0}, mpq_class(-1, 2)});  // x <= -1/2 contradicts x >= 0
    CHECK_FALSE(fourier_motzkin_solve(sys, 2));
  }

  TEST_CASE("frozen closures") {
    Ring r = ring_of({"x", "y"});
    CHECK(gens_of(integral_closure_power(MI(r, {"x^3", "y^3"}), 1)) ==
          std::vector<std::string>{"x^3", "x^2*y", "x*y^2", "y^3"});
    CHECK(gens_of(integral_closure_power(MI(r, {"x^2", "y^2"}), 1)) == std::vector<std::string>{"x^2", "x*y", "y^2"});
    CHECK(integral_closure_power(MI(r, {"x^2", "x*y", "y^2"}), 2).to_ideal().to_string() ==
          ideal_power(Ideal::maximal(r), 4).to_string());
    CHECK(gens_of(integral_closure_power(MI(r, {"x^2", "x*y"}), 1)) == std::vector<std::string>{"x^2", "x*y"});
    Ring r3 = ring_of({"x", "y", "z"});
    // xyz is integral over (x^3, y^3, z^3)
    CHECK(integral_closure_power(MI(r3, {"x^3", "y^3", "z^3"}), 1).contains(Monomial{1, 1, 1}));
    CHECK_FALSE(integral_closure_power(MI(r3, {"x^3", "y^3", "z^3"}), 1).contains(Monomial{1, 1, 0}));
  }

  TEST_CASE("certificates verify and match the power test") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
      Ring r = ring_of(trial % 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"});
      MonomialIdeal ideal = random_mi(r, rng);
      for (unsigned k = 1; k <= 2; ++k) {
        MonomialIdeal power = MonomialIdeal::from_ideal(ideal_power(ideal.to_ideal(), k));
        for (const auto& a : closure_box(ideal, k)) {
          auto cert = np_member(a, ideal, k);
          if (cert) {
            CHECK(cert->verify(a, ideal));
            const unsigned m = static_cast<unsigned>(cert->denominator().get_ui());
            // x^{m a} ∈ (I^k)^m
            CHECK(power_test_witness(a, power, m).has_value());
          } else {
            CHECK_FALSE(power_test_oracle(a, power, 6));
          }
        }
      }
    }
  }

  TEST_CASE("closure is idempotent, contains I^k, and is monotone in k") {
    std::mt19937_64 rng(12);
    Ring r = ring_of({"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
      MonomialIdeal ideal = random_mi(r, rng);
      for (unsigned k = 1; k <= 2; ++k) {
        MonomialIdeal c = integral_closure_power(ideal, k);
        CHECK(integral_closure_power(c, 1) == c);
        CHECK(contained(ideal_power(ideal.to_ideal(), k), c.to_ideal()));
      }
      CHECK(contained(integral_closure_power(ideal, 2).to_ideal(), integral_closure_power(ideal, 1).to_ideal()));
    }
  }

  TEST_CASE("argument checks") {
    Ring r = ring_of({"x", "y"});
    CHECK_THROWS_AS(MonomialIdeal::from_ideal(I(r, {"x + y"})), InvalidArgument);
    CHECK_THROWS_AS(MonomialIdeal::from_ideal(Ideal::zero(r)), InvalidArgument);
    CHECK_THROWS_AS(integral_closure_power(MI(r, {"x"}), 0), InvalidArgument);
    ClosureCaps tiny;
    tiny.box_budget = 3;
    CHECK_THROWS_AS(integral_closure_power(MI(r, {"x^3", "y^3"}), 2, tiny), BudgetError);
  }
}
