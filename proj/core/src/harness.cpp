#include "bsk/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "bsk/newton.hpp"
#include "bsk/reduction.hpp"

namespace bsk {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

void ReportObjects::set(const std::string& key, ReportValue value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(key, std::move(value));
}

const ReportValue* ReportObjects::find(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::vector<std::string> generator_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(g.to_string());
  return out;
}

std::vector<int> default_w_range() { return {-1, 0, 1}; }

void settle(VerdictReport& report) {
  report.verdict = Verdict::Holds;
  for (const auto& c : report.checks) {
    if (c.verdict == Verdict::Fails) {
      report.verdict = Verdict::Fails;
      if (c.witness) report.witness = c.witness->to_string();
      report.reason = c.label + ": " + c.reason;
      return;
    }
  }
  for (const auto& c : report.checks) {
    if (c.verdict == Verdict::Indeterminate) {
      report.verdict = Verdict::Indeterminate;
      report.reason = c.label + ": " + c.reason;
      return;
    }
  }
}

ContainmentCheck check_containment(std::string label, std::optional<int> w, const std::vector<Polynomial>& lhs,
                                   const Ideal& rhs, const EngineCaps& caps) {
  ContainmentCheck check{std::move(label), w, Verdict::Holds, std::nullopt, {}};
  for (const auto& f : lhs) {
    if (local_member(f, rhs, caps.groebner)) continue;
    Ideal fresh(rhs.ring(), rhs.generators());
    if (local_member_by_colon(f, fresh, caps.groebner)) {
      check.verdict = Verdict::Indeterminate;
      check.reason = "membership routes disagree on " + f.to_string();
    } else {
      check.verdict = Verdict::Fails;
      check.witness = f;
      check.reason = f.to_string() + " is not in " + rhs.to_string();
    }
    return check;
  }
  return check;
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs body, recording wall time and turning budget exhaustion into an
// indeterminate verdict.
VerdictReport guarded(std::string kind, std::string instance, const std::function<void(VerdictReport&)>& body) {
  VerdictReport report;
  report.kind = std::move(kind);
  report.instance = std::move(instance);
  const auto start = Clock::now();
  try {
    body(report);
    settle(report);
  } catch (const BudgetError& e) {
    report.verdict = Verdict::Indeterminate;
    report.witness.reset();
    report.reason = std::string("budget exhausted: ") + e.what();
    report.budget_exhausted = true;
  }
  report.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

std::string describe_instance(const HarnessInstance& in) {
  std::string s = "I = " + in.ideal.to_string();
  if (in.reduction) s += ", J = " + in.reduction->to_string();
  else s += ", seed = " + std::to_string(in.seed);
  return s;
}

std::vector<std::string> polynomial_strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

struct ResolvedReduction {
  Ideal j;
  std::optional<unsigned> r;
  unsigned ell = 0;
  std::string method;
};

ResolvedReduction resolve_reduction(const HarnessInstance& in, ReportObjects& objects, const EngineCaps& caps) {
  if (in.reduction) {
    ResolvedReduction out{*in.reduction, std::nullopt, analytic_spread(in.ideal, caps).spread, "given"};
    out.r = reduction_number(in.ideal, out.j, caps.r_cap, caps);
    objects.set("ell", static_cast<long long>(out.ell));
    objects.set("reduction_gens", generator_strings(out.j));
    objects.set("reduction_method", out.method);
    if (out.r) objects.set("r", static_cast<long long>(*out.r));
    return out;
  }
  ReductionCertificate cert = generic_minimal_reduction(in.ideal, in.seed, caps);
  ResolvedReduction out{cert.reduction, cert.r, cert.spread,
                        cert.method == ReductionMethod::GeneratorSubset ? "generator-subset" : "random-combination"};
  if (!cert.verified) out.r.reset();
  objects.set("ell", static_cast<long long>(out.ell));
  objects.set("reduction_gens", generator_strings(out.j));
  objects.set("reduction_method", out.method);
  objects.set("reduction_attempts", static_cast<long long>(cert.attempts));
  if (out.r) objects.set("r", static_cast<long long>(*out.r));
  return out;
}

ContainmentCheck unverified_reduction(const std::string& label, const ResolvedReduction& red, unsigned r_cap) {
  return ContainmentCheck{label, std::nullopt, Verdict::Indeterminate, std::nullopt,
                          "J = " + red.j.to_string() + " not verified as a reduction within r <= " + std::to_string(r_cap)};
}

// Minimal generators of closure(I^k); k = 0 gives the unit ideal.
std::vector<Polynomial> closure_generators(const Ideal& ideal, unsigned k, const EngineCaps& caps) {
  const Ring& ring = ideal.ring();
  if (k == 0) return {Polynomial::one(ring)};
  MonomialIdeal closure = integral_closure_power(MonomialIdeal::from_ideal(ideal), k, caps.closure);
  std::vector<Polynomial> out;
  for (const auto& m : closure.generators()) out.push_back(Polynomial::monomial(ring, m));
  return out;
}

// J^{w+1}·I^r = I^{w+1+r} locally when J is a reduction with number r, and
// I^r lies in both J^0 and a(I,J); so adding I^{w+1+r} to a right-hand side
// leaves it unchanged in R_m. For non-monomial J this removes components of
// the right-hand side away from the origin, which keeps local membership
// tests on the fast path.
Ideal with_local_floor(const Ideal& rhs, const Ideal& ideal, unsigned power) {
  if (rhs.is_monomial()) return rhs;
  return ideal_sum(rhs, ideal_power(ideal, power));
}

void require_monomial_in_maximal(const Ideal& ideal) {
  if (!ideal.is_monomial() || ideal.is_zero()) throw InvalidArgument("expected a nonzero monomial ideal, got " + ideal.to_string());
  if (!ideal.inside_maximal()) throw InvalidArgument("expected an ideal inside the maximal ideal, got " + ideal.to_string());
}

// closure(I^{base+w}) ⊆ J^{w+1}·a for each w >= -1 in range, falling back to
// the floor I^r when a is uncertified.
void coefficient_containments(VerdictReport& report, const HarnessInstance& in, unsigned base,
                              const ResolvedReduction& red, const CoefficientIdealResult& coeff,
                              const EngineCaps& caps) {
  std::vector<std::string> sizes;
  for (int w : in.w_range) {
    if (w < -1) continue;
    const std::string label = "closure(I^" + std::to_string(static_cast<int>(base) + w) + ") in J^" +
                              std::to_string(w + 1) + "*a";
    if (static_cast<int>(base) + w < 0) {
      report.checks.push_back({label, w, Verdict::Indeterminate, std::nullopt, "negative power"});
      continue;
    }
    std::vector<Polynomial> lhs = closure_generators(in.ideal, static_cast<unsigned>(static_cast<int>(base) + w), caps);
    sizes.push_back("w=" + std::to_string(w) + ":" + std::to_string(lhs.size()));
    Ideal jw = ideal_power(red.j, static_cast<unsigned>(w + 1));
    const unsigned floor_power = static_cast<unsigned>(w + 1) + *red.r;
    if (coeff.certified) {
      report.checks.push_back(check_containment(
          label, w, lhs, with_local_floor(ideal_product(jw, coeff.value), in.ideal, floor_power), caps));
      continue;
    }
    if (!coeff.known_member_floor) {
      report.checks.push_back({label, w, Verdict::Indeterminate, std::nullopt, "coefficient ideal uncertified and no floor"});
      continue;
    }
    ContainmentCheck floor = check_containment(
        label, w, lhs, with_local_floor(ideal_product(jw, *coeff.known_member_floor), in.ideal, floor_power), caps);
    if (floor.verdict != Verdict::Holds) {
      floor.verdict = Verdict::Indeterminate;
      floor.witness.reset();
      floor.reason = "coefficient ideal uncertified; containment in J^(w+1)*I^r not established";
    }
    report.checks.push_back(std::move(floor));
  }
  report.objects.set("closure_sizes", sizes);
}

void record_coefficient(ReportObjects& objects, const CoefficientIdealResult& coeff) {
  objects.set("coeff_ideal_gens", generator_strings(coeff.value));
  objects.set("coeff_certified", coeff.certified);
  if (coeff.fixpoint_index) objects.set("fixpoint_index", static_cast<long long>(*coeff.fixpoint_index));
  objects.set("colon_steps", static_cast<long long>(coeff.trace.steps.size() - 1));
}

std::pair<ContainmentCheck, ContainmentCheck> lemma_checks(const PaddingLadder& ladder, const EngineCaps& caps) {
  ContainmentCheck decreasing{"lemma-decreasing", std::nullopt, Verdict::Holds, std::nullopt, {}};
  if (!ladder.monotone) {
    const unsigned t = ladder.monotonicity_failures.front();
    const auto& lower = ladder.rungs[t - 1].coefficient;
    const auto& upper = ladder.rungs[t].coefficient;
    decreasing = check_containment("lemma-decreasing", std::nullopt, upper.value.generators(), lower.value, caps);
    if (decreasing.verdict == Verdict::Fails && !(lower.certified && upper.certified)) {
      decreasing.verdict = Verdict::Indeterminate;
      decreasing.witness.reset();
      decreasing.reason = "rung " + std::to_string(t) + " or " + std::to_string(t + 1) + " uncertified";
    }
    decreasing.reason = "t = " + std::to_string(t) + ": " + decreasing.reason;
  }
  ContainmentCheck inclusion{"lemma-inclusion", std::nullopt, Verdict::Holds, std::nullopt, {}};
  if (!ladder.base_included) {
    inclusion.verdict = Verdict::Indeterminate;
    inclusion.reason = "a(I,J) uncertified";
  } else if (!*ladder.base_included) {
    const unsigned t = ladder.inclusion_failures.front();
    inclusion = check_containment("lemma-inclusion", std::nullopt, ladder.base.value.generators(),
                                  ladder.rungs[t - 1].coefficient.value, caps);
    inclusion.reason = "t = " + std::to_string(t) + ": " + inclusion.reason;
  }
  return {decreasing, inclusion};
}

void record_ladder(ReportObjects& objects, const PaddingLadder& ladder) {
  objects.set("pads", polynomial_strings(ladder.pads));
  objects.set("ladder_depth", static_cast<long long>(ladder.depth));
  std::vector<std::string> rungs;
  for (const auto& rung : ladder.rungs) {
    rungs.push_back("t=" + std::to_string(rung.t) + ": " + rung.coefficient.value.to_string() +
                    (rung.coefficient.certified ? "" : " (uncertified)"));
  }
  objects.set("ladder", rungs);
  objects.set("ladder_certified", ladder.all_rungs_certified);
  if (ladder.stabilization) objects.set("stabilization", static_cast<long long>(*ladder.stabilization));
  objects.set("limit_candidate", generator_strings(ladder.limit_candidate));
  objects.set("limit_note", std::string(ladder.limit_matches_base
                                            ? "last rung equals a(I,J) locally; consistent with b = a(I,J)"
                                            : "last rung differs from a(I,J) at this depth; no conclusion about b"));
}

std::vector<Polynomial> resolved_pads(const HarnessInstance& in) {
  return in.pads ? *in.pads : default_pads(in.ideal);
}

}  // namespace

VerdictReport verify_classical_bs(const HarnessInstance& in, const EngineCaps& caps) {
  return guarded("classical-BS", describe_instance(in), [&](VerdictReport& report) {
    require_monomial_in_maximal(in.ideal);
    ResolvedReduction red = resolve_reduction(in, report.objects, caps);
    if (!red.r) {
      report.checks.push_back(unverified_reduction("reduction", red, caps.r_cap));
      return;
    }
    std::vector<std::string> sizes;
    for (int w : in.w_range) {
      if (w < 0) continue;
      std::vector<Polynomial> lhs = closure_generators(in.ideal, red.ell + static_cast<unsigned>(w), caps);
      sizes.push_back("w=" + std::to_string(w) + ":" + std::to_string(lhs.size()));
      report.checks.push_back(check_containment(
          "closure(I^" + std::to_string(red.ell + w) + ") in J^" + std::to_string(w + 1), w, lhs,
          with_local_floor(ideal_power(red.j, static_cast<unsigned>(w + 1)), in.ideal, static_cast<unsigned>(w + 1) + *red.r),
          caps));
    }
    report.objects.set("closure_sizes", sizes);
  });
}

VerdictReport verify_coeff_bs_mprimary(const HarnessInstance& in, const EngineCaps& caps) {
  return guarded("coeff-BS-mprimary", describe_instance(in), [&](VerdictReport& report) {
    require_monomial_in_maximal(in.ideal);
    if (quotient_dimension(in.ideal, caps.groebner).dimension != 0) {
      throw InvalidArgument(in.ideal.to_string() + " is not primary to the maximal ideal");
    }
    const unsigned d = static_cast<unsigned>(in.ideal.ring()->dimension());
    report.objects.set("d", static_cast<long long>(d));
    ResolvedReduction red = resolve_reduction(in, report.objects, caps);
    if (!red.r) {
      report.checks.push_back(unverified_reduction("reduction", red, caps.r_cap));
      return;
    }
    CoefficientIdealResult coeff = coefficient_ideal(in.ideal, red.j, caps.colon_iterations, red.r, caps);
    record_coefficient(report.objects, coeff);
    coefficient_containments(report, in, d, red, coeff, caps);
  });
}

VerdictReport verify_coeff_bs_main(const HarnessInstance& in, const EngineCaps& caps) {
  return guarded("coeff-BS-main", describe_instance(in), [&](VerdictReport& report) {
    require_monomial_in_maximal(in.ideal);
    ResolvedReduction red = resolve_reduction(in, report.objects, caps);
    if (!red.r) {
      report.checks.push_back(unverified_reduction("reduction", red, caps.r_cap));
      return;
    }
    PaddingLadder ladder = coefficient_ladder(in.ideal, red.j, resolved_pads(in), caps.ladder_depth, red.r, caps);
    record_coefficient(report.objects, ladder.base);
    coefficient_containments(report, in, red.ell, red, ladder.base, caps);
    auto [decreasing, inclusion] = lemma_checks(ladder, caps);
    report.checks.push_back(std::move(decreasing));
    report.checks.push_back(std::move(inclusion));
    record_ladder(report.objects, ladder);
  });
}

std::vector<VerdictReport> verify_lemmas(const HarnessInstance& in, const EngineCaps& caps) {
  std::optional<PaddingLadder> ladder;
  std::optional<ResolvedReduction> red;
  ReportObjects shared;
  VerdictReport decreasing = guarded("lemma-decreasing", describe_instance(in), [&](VerdictReport& report) {
    if (!in.ideal.inside_maximal()) throw InvalidArgument("expected an ideal inside the maximal ideal");
    red = resolve_reduction(in, shared, caps);
    report.objects = shared;
    if (!red->r) {
      report.checks.push_back(unverified_reduction("reduction", *red, caps.r_cap));
      return;
    }
    ladder = coefficient_ladder(in.ideal, red->j, resolved_pads(in), caps.ladder_depth, red->r, caps);
    record_coefficient(shared, ladder->base);
    record_ladder(shared, *ladder);
    report.objects = shared;
    report.checks.push_back(lemma_checks(*ladder, caps).first);
  });
  VerdictReport inclusion = guarded("lemma-inclusion", describe_instance(in), [&](VerdictReport& report) {
    report.objects = shared;
    if (!red || !red->r) {
      report.checks.push_back({"reduction", std::nullopt, Verdict::Indeterminate, std::nullopt,
                               decreasing.reason.value_or("reduction unavailable")});
      return;
    }
    if (!ladder) {
      report.checks.push_back({"ladder", std::nullopt, Verdict::Indeterminate, std::nullopt,
                               decreasing.reason.value_or("ladder unavailable")});
      return;
    }
    report.checks.push_back(lemma_checks(*ladder, caps).second);
  });
  return {std::move(decreasing), std::move(inclusion)};
}

VerdictReport verify_padding(const HarnessInstance& in, const Ideal& pad, const EngineCaps& caps) {
  return guarded("padding-identity", describe_instance(in) + ", L = " + pad.to_string(), [&](VerdictReport& report) {
    ResolvedReduction red = resolve_reduction(in, report.objects, caps);
    report.objects.set("pad_gens", generator_strings(pad));
    if (!red.r) {
      report.checks.push_back(unverified_reduction("reduction", red, caps.r_cap));
      return;
    }
    const unsigned r = *red.r;
    if (verify_padding_preserves_reduction(in.ideal, red.j, r, pad, caps)) {
      report.checks.push_back({"(J+L)(I+L)^r = (I+L)^(r+1)", std::nullopt, Verdict::Holds, std::nullopt, {}});
      return;
    }
    Ideal il = ideal_sum(in.ideal, pad);
    Ideal lhs = ideal_power(il, r + 1);
    report.checks.push_back(check_containment("(J+L)(I+L)^r = (I+L)^(r+1)", std::nullopt, lhs.generators(),
                                              ideal_product(ideal_sum(red.j, pad), ideal_power(il, r)), caps));
  });
}

VerdictReport verify_hh_regular(const Ideal& ideal, const std::vector<int>& w_range, const EngineCaps& caps) {
  return guarded("hh-char-p", "I = " + ideal.to_string(), [&](VerdictReport& report) {
    if (ideal.ring()->field().is_rational()) throw InvalidArgument("hh-char-p needs a prime characteristic");
    require_monomial_in_maximal(ideal);
    const unsigned n = static_cast<unsigned>(ideal.generators().size());
    report.objects.set("n", static_cast<long long>(n));
    report.objects.set("characteristic", static_cast<long long>(ideal.ring()->field().characteristic()));
    for (int w : w_range) {
      if (w < 0) continue;
      std::vector<Polynomial> lhs = closure_generators(ideal, n + static_cast<unsigned>(w), caps);
      report.checks.push_back(check_containment("closure(I^" + std::to_string(n + w) + ") in I^" + std::to_string(w + 1),
                                                w, lhs, ideal_power(ideal, static_cast<unsigned>(w + 1)), caps));
    }
  });
}

Ideal frobenius_power(const Ideal& ideal, std::uint64_t q) {
  const std::uint64_t p = ideal.ring()->field().characteristic();
  if (p == 0) throw InvalidArgument("Frobenius powers need a prime characteristic");
  if (q == 0) throw InvalidArgument("q must be a power of the characteristic");
  for (std::uint64_t rest = q; rest > 1; rest /= p) {
    if (rest % p != 0) throw InvalidArgument(std::to_string(q) + " is not a power of " + std::to_string(p));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.pow(q));
  return Ideal(ideal.ring(), std::move(gens));
}

TightClosureEvidence tc_witness_check(const Polynomial& z, const Ideal& ideal, const Polynomial& c, std::uint64_t q_max,
                                      const EngineCaps& caps) {
  require_same_ring(z.ring(), ideal.ring());
  require_same_ring(c.ring(), ideal.ring());
  const std::uint64_t p = ideal.ring()->field().characteristic();
  if (p == 0) throw InvalidArgument("tight closure evidence needs a prime characteristic");
  if (c.is_zero()) throw InvalidArgument("the test element c must be nonzero");
  TightClosureEvidence out;
  for (std::uint64_t q = p; q <= q_max; q *= p) {
    const bool pass = ideal_member(c * z.pow(q), frobenius_power(ideal, q), caps.groebner);
    out.results.emplace_back(q, pass);
    out.all_pass = out.all_pass && pass;
    if (q > q_max / p) break;
  }
  return out;
}

VerdictReport remark_localization_probe(unsigned n_steps, const EngineCaps& caps) {
  return guarded("remark-localization", "I = (x,y)^2, J = (x,y)^3, cap = " + std::to_string(n_steps),
                 [&](VerdictReport& report) {
    Ring ring = RingContext::make({"x", "y"}, Field::rationals());
    const Ideal m = Ideal::maximal(ring);
    CoefficientIdealResult coeff = coefficient_ideal(ideal_power(m, 2), ideal_power(m, 3), n_steps, std::nullopt, caps);
    const auto& steps = coeff.trace.steps;
    std::vector<std::string> trace;
    bool strict = true;
    bool powers = true;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      trace.push_back(steps[k].to_string());
      if (!ideal_equal(steps[k], ideal_power(m, k), caps.groebner)) powers = false;
      if (k > 0 && local_contained(steps[k - 1], steps[k], caps.groebner)) strict = false;
    }
    report.objects.set("trace", trace);
    report.objects.set("certified", coeff.certified);
    report.objects.set("strictly_descending", strict);
    report.objects.set("trace_is_maximal_powers", powers);
    report.objects.set("statement", "value descends below m^N for every N <= " + std::to_string(n_steps) +
                                        ", consistent with a = 0");
    report.objects.set("out_of_scope", std::string("localized comparison a(I_P, I_P) = R_P is not computed"));
    report.objects.set("argument_order", std::string("a(larger, smaller) = a((x,y)^2, (x,y)^3)"));
    ContainmentCheck check{"strict descent", std::nullopt, Verdict::Holds, std::nullopt, {}};
    if (coeff.certified || !strict) {
      check.verdict = Verdict::Indeterminate;
      check.reason = "trace stopped descending";
    }
    report.checks.push_back(std::move(check));
  });
}

}  // namespace bsk
