#include <algorithm>

#include "bsk/errors.hpp"
#include "bsk/monomial.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bsk;
using bsk::testing::monomials_of_degree;

namespace {

std::vector<Monomial> all_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// Textbook definitions, written independently of the library.
int lex_oracle(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int grevlex_oracle(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int sign(std::strong_ordering o) { return o > 0 ? 1 : (o < 0 ? -1 : 0); }

}  // namespace

TEST_SUITE("monomial") {
  TEST_CASE("arithmetic") {
    const Monomial a{2, 1, 0}, b{1, 3, 1};
    CHECK(a * b == Monomial{3, 4, 1});
    CHECK(a.lcm(b) == Monomial{2, 3, 1});
    CHECK(Monomial{1, 1, 0}.divides(a));
    CHECK_FALSE(b.divides(a));
    CHECK(Monomial{1, 0, 0}.quotient_of(a) == Monomial{1, 1, 0});
    CHECK(a.colon(b) == Monomial{1, 0, 0});
    CHECK(a.pow(3) == Monomial{6, 3, 0});
    CHECK(Monomial{1, 0, 0}.coprime(Monomial{0, 2, 1}));
    CHECK(a.degree() == 3);
    CHECK(Monomial(3).is_one());
  }

  TEST_CASE("orders agree with their definitions") {
    const auto ms = all_up_to(3, 3);
    for (const auto& a : ms) {
      for (const auto& b : ms) {
        CHECK(sign(MonomialOrder::lex().compare(a, b)) == lex_oracle(a, b));
        CHECK(sign(MonomialOrder::grevlex().compare(a, b)) == grevlex_oracle(a, b));
      }
    }
  }

  TEST_CASE("orders are multiplicative total orders with 1 minimal") {
    const auto ms = all_up_to(3, 2);
    for (const MonomialOrder order :
         {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(1), MonomialOrder::elimination(2)}) {
      for (const auto& a : ms) {
        CHECK(order.compare(a, Monomial(3)) >= 0);
        for (const auto& b : ms) {
          const int ab = sign(order.compare(a, b));
          CHECK(ab == -sign(order.compare(b, a)));
          CHECK((ab == 0) == (a == b));
          for (const auto& c : ms) {
            CHECK(sign(order.compare(a * c, b * c)) == ab);
            if (ab > 0 && order.compare(b, c) > 0) CHECK(order.compare(a, c) > 0);
          }
        }
      }
    }
  }

  TEST_CASE("grevlex degree-two order in three variables") {
    std::vector<Monomial> ms = monomials_of_degree(3, 2);
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return MonomialOrder::grevlex().greater(a, b); });
    const std::vector<Monomial> expected{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    CHECK(ms == expected);
  }

  TEST_CASE("elimination order eliminates the first block") {
    const auto order = MonomialOrder::elimination(1);
    // anything involving the first variable beats everything free of it
    CHECK(order.greater(Monomial{1, 0, 0}, Monomial{0, 5, 5}));
    CHECK(order.greater(Monomial{0, 3, 0}, Monomial{0, 1, 1}));
  }

  TEST_CASE("length mismatch is a context error") {
    CHECK_THROWS_AS(MonomialOrder::grevlex().compare(Monomial{1, 0}, Monomial{1, 0, 0}), ContextError);
  }
}
