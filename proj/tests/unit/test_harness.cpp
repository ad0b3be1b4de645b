#include <algorithm>

#include "bsk/errors.hpp"
#include "bsk/harness.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bsk;
using namespace bsk::testing;

namespace {

using Strings = std::vector<std::string>;

const Strings& strings_of(const VerdictReport& r, const std::string& key) {
  const ReportValue* v = r.objects.find(key);
  REQUIRE(v != nullptr);
  return std::get<Strings>(*v);
}

bool bool_of(const VerdictReport& r, const std::string& key) {
  const ReportValue* v = r.objects.find(key);
  REQUIRE(v != nullptr);
  return std::get<bool>(*v);
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("classical, m-primary and main statements hold on a small instance") {
    Ring r2 = ring_of({"x", "y"});
    HarnessInstance in(I(r2, {"x^2", "x*y", "y^2"}));
    in.reduction = I(r2, {"x^2", "y^2"});
    CHECK(verify_classical_bs(in).verdict == Verdict::Holds);
    VerdictReport mp = verify_coeff_bs_mprimary(in);
    CHECK(mp.verdict == Verdict::Holds);
    CHECK(mp.checks.size() == 3);
    CHECK(strings_of(mp, "coeff_ideal_gens") == Strings{"x", "y"});

    Ring r3 = ring_of({"x", "y", "z"});
    HarnessInstance in3(I(r3, {"x^2", "x*y", "y^2"}));
    in3.reduction = I(r3, {"x^2", "y^2"});
    in3.pads = std::vector<Polynomial>{P(r3, "z")};
    VerdictReport main = verify_coeff_bs_main(in3);
    CHECK(main.verdict == Verdict::Holds);
    CHECK(strings_of(main, "pads") == Strings{"z"});
    CHECK_THROWS_AS(verify_coeff_bs_mprimary(in3), InvalidArgument);
  }

  TEST_CASE("lemma reports and padding identity") {
    Ring r = ring_of({"x", "y", "z"});
    HarnessInstance in(I(r, {"x^3", "x*y", "y^3"}));
    in.seed = 3;
    auto lemmas = verify_lemmas(in);
    REQUIRE(lemmas.size() == 2);
    CHECK(lemmas[0].kind == "lemma-decreasing");
    CHECK(lemmas[1].kind == "lemma-inclusion");
    for (const auto& l : lemmas) CHECK(l.verdict == Verdict::Holds);
    CHECK(verify_padding(in, I(r, {"z^3"})).verdict == Verdict::Holds);
    CHECK(verify_padding(in, ideal_power(Ideal::maximal(r), 3)).verdict == Verdict::Holds);
  }

  TEST_CASE("a false containment yields a checked witness") {
    Ring r = ring_of({"x", "y"});
    ContainmentCheck c = check_containment("probe", 0, {P(r, "x*y"), P(r, "x^2")}, I(r, {"x*y", "y^2"}));
    CHECK(c.verdict == Verdict::Fails);
    REQUIRE(c.witness);
    CHECK(c.witness->to_string() == "x^2");
    CHECK(check_containment("ok", 0, {P(r, "x*y + x*y^2")}, I(r, {"x*y"})).verdict == Verdict::Holds);
    // a unit multiple of a generator is a local member only
    CHECK(check_containment("unit", std::nullopt, {P(r, "x")}, I(r, {"x + x*y"})).verdict == Verdict::Holds);
  }

  TEST_CASE("settle prefers failures, then indeterminates") {
    VerdictReport rep;
    rep.checks.push_back({"a", 0, Verdict::Holds, std::nullopt, {}});
    settle(rep);
    CHECK(rep.verdict == Verdict::Holds);
    rep.checks.push_back({"b", 1, Verdict::Indeterminate, std::nullopt, "slow"});
    settle(rep);
    CHECK(rep.verdict == Verdict::Indeterminate);
    CHECK(rep.reason == std::string("b: slow"));
    rep.checks.push_back({"c", 2, Verdict::Fails, std::nullopt, "no"});
    settle(rep);
    CHECK(rep.verdict == Verdict::Fails);
    CHECK(rep.reason == std::string("c: no"));
  }

  TEST_CASE("Frobenius powers") {
    Ring r = ring_of({"x", "y"}, Field::prime(5));
    CHECK(frobenius_power(I(r, {"x + y", "x*y"}), 5).to_string() == "(x^5+y^5, x^5*y^5)");
    CHECK(frobenius_power(I(r, {"x"}), 25).to_string() == "(x^25)");
    CHECK(frobenius_power(I(r, {"x"}), 1).to_string() == "(x)");
    CHECK_THROWS_AS(frobenius_power(I(r, {"x"}), 10), InvalidArgument);
    CHECK_THROWS_AS(frobenius_power(I(r, {"x"}), 0), InvalidArgument);
    Ring q = ring_of({"x", "y"});
    CHECK_THROWS_AS(frobenius_power(I(q, {"x"}), 5), InvalidArgument);
  }

  TEST_CASE("f in I implies f^p in I^[p]") {
    Ring r = ring_of({"x", "y", "z"}, Field::prime(101));
    Ideal ideal = I(r, {"x^2", "x*y", "y*z^2"});
    Ideal frob = frobenius_power(ideal, 101);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 8; ++i) {
      Polynomial f(r);
      for (const auto& g : ideal.generators()) f = f + g * random_poly(r, rng, 2, 2);
      CHECK(ideal_member(f.pow(101), frob));
    }
  }

  TEST_CASE("tight closure evidence") {
    Ring r = ring_of({"x", "y"}, Field::prime(101));
    TightClosureEvidence fail = tc_witness_check(P(r, "x*y"), I(r, {"x^2", "y^2"}), P(r, "1"), 101);
    REQUIRE(fail.results.size() == 1);
    CHECK(fail.results[0] == std::pair<std::uint64_t, bool>{101, false});
    CHECK_FALSE(fail.all_pass);
    TightClosureEvidence member = tc_witness_check(P(r, "x^2*y"), I(r, {"x^2", "y^2"}), P(r, "1"), 101 * 101);
    CHECK(member.results.size() == 2);
    CHECK(member.all_pass);
    CHECK(tc_witness_check(Polynomial(r), I(r, {"x"}), P(r, "x"), 101).all_pass);
    CHECK_THROWS_AS(tc_witness_check(P(r, "x"), I(r, {"x"}), Polynomial(r), 101), InvalidArgument);
    Ring q = ring_of({"x", "y"});
    CHECK_THROWS_AS(tc_witness_check(P(q, "x"), I(q, {"x"}), P(q, "1"), 5), InvalidArgument);
  }

  TEST_CASE("regular-ring statement in characteristic p, invariant under permuting variables") {
    Ring r = ring_of({"x", "y", "z"}, Field::prime(101));
    Ideal ideal = I(r, {"x^2", "y^3", "x*y*z"});
    VerdictReport base = verify_hh_regular(ideal, {0, 1});
    CHECK(base.verdict == Verdict::Holds);
    CHECK(base.checks.size() == 2);
    std::vector<std::size_t> perm{0, 1, 2};
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<Polynomial> gens;
      for (const auto& g : ideal.generators()) gens.push_back(g.remap(r, perm));
      CHECK(verify_hh_regular(Ideal(r, gens), {0, 1}).verdict == base.verdict);
    }
    CHECK(verify_hh_regular(ideal, {-1}).checks.empty());
    Ring q = ring_of({"x", "y"});
    CHECK_THROWS_AS(verify_hh_regular(I(q, {"x"}), {0}), InvalidArgument);
  }

  TEST_CASE("localization probe") {
    VerdictReport rep = remark_localization_probe(6);
    CHECK(rep.verdict == Verdict::Holds);
    CHECK_FALSE(bool_of(rep, "certified"));
    CHECK(bool_of(rep, "strictly_descending"));
    CHECK(bool_of(rep, "trace_is_maximal_powers"));
  }
}
