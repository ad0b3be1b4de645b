#include "bsk/coefficient.hpp"

namespace bsk {

CoefficientIdealResult coefficient_ideal(const Ideal& ideal, const Ideal& reduction, unsigned cap,
                                         std::optional<unsigned> reduction_r, const EngineCaps& caps) {
  require_same_ring(ideal.ring(), reduction.ring());
  if (!ideal.inside_maximal()) throw InvalidArgument("coefficient ideal needs I inside the maximal ideal");
  if (!local_contained(reduction, ideal, caps.groebner)) {
    throw InvalidArgument("J = " + reduction.to_string() + " is not contained in I = " + ideal.to_string());
  }
  const GroebnerCaps& gc = caps.groebner;
  CoefficientIdealResult result{Ideal::unit(ideal.ring()), false, std::nullopt, {}, std::nullopt};
  result.trace.cap = cap;
  result.trace.steps.push_back(Ideal::unit(ideal.ring()));
  for (unsigned k = 0; k < cap; ++k) {
    const Ideal& current = result.trace.steps.back();
    Ideal next = canonical(ideal_colon(ideal_product(reduction, current), ideal, gc), gc);
    if (!contained(next, current, gc)) throw InternalError("colon iteration failed to descend at step " + std::to_string(k + 1));
    const bool fixpoint = local_contained(current, next, gc);
    result.trace.steps.push_back(std::move(next));
    if (fixpoint) {
      result.certified = true;
      result.fixpoint_index = k;
      result.trace.terminated = Termination::Fixpoint;
      break;
    }
  }
  result.value = result.trace.steps.back();
  if (reduction_r) {
    Ideal floor = ideal_power(ideal, *reduction_r);
    if (!local_contained(floor, result.value, gc)) {
      throw InternalError("I^" + std::to_string(*reduction_r) + " is not inside the colon iteration value");
    }
    result.known_member_floor = std::move(floor);
  }
  return result;
}

std::vector<Polynomial> default_pads(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  std::vector<Polynomial> pads;
  for (std::size_t v = 0; v < ring->dimension(); ++v) {
    bool has_pure_power = false;
    for (const auto& g : ideal.generators()) {
      if (!g.is_monomial()) continue;
      const Monomial& m = g.terms()[0].mono;
      if (m[v] > 0 && m.degree() == m[v]) has_pure_power = true;
    }
    if (!has_pure_power) pads.push_back(Polynomial::variable(ring, v));
  }
  return pads;
}

PaddedPair padded_pair(const Ideal& ideal, const Ideal& reduction, const std::vector<Polynomial>& pads, unsigned t,
                       const EngineCaps& caps) {
  if (t == 0) throw InvalidArgument("padding exponent must be positive");
  const Ring& ring = ideal.ring();
  Ideal pad_ideal = pads.empty() ? Ideal::zero(ring) : Ideal(ring, pads);
  Ideal base = ideal_sum(ideal, pad_ideal);
  if (!base.inside_maximal() || quotient_dimension(base, caps.groebner).dimension != 0) {
    throw InvalidArgument("I + (pads) = " + base.to_string() + " is not primary to the maximal ideal");
  }
  std::vector<Polynomial> powered;
  for (const auto& p : pads) powered.push_back(p.pow(t));
  Ideal pt = powered.empty() ? Ideal::zero(ring) : Ideal(ring, powered);
  return PaddedPair{ideal_sum(ideal, pt), ideal_sum(reduction, pt)};
}

PaddingLadder coefficient_ladder(const Ideal& ideal, const Ideal& reduction, const std::vector<Polynomial>& pads,
                                 unsigned depth, std::optional<unsigned> reduction_r, const EngineCaps& caps) {
  if (depth == 0) throw InvalidArgument("ladder depth must be positive");
  const GroebnerCaps& gc = caps.groebner;
  PaddingLadder ladder{pads, depth, coefficient_ideal(ideal, reduction, caps.colon_iterations, reduction_r, caps),
                       {}, true, {}, std::nullopt, {}, std::nullopt, Ideal::unit(ideal.ring()), false, true};
  for (unsigned t = 1; t <= depth; ++t) {
    PaddedPair pair = padded_pair(ideal, reduction, pads, t, caps);
    CoefficientIdealResult rung = coefficient_ideal(pair.ideal, pair.reduction, caps.colon_iterations, reduction_r, caps);
    ladder.all_rungs_certified = ladder.all_rungs_certified && rung.certified;
    ladder.rungs.push_back(LadderRung{t, std::move(pair), std::move(rung)});
  }
  for (std::size_t i = 0; i + 1 < ladder.rungs.size(); ++i) {
    if (!local_contained(ladder.rungs[i + 1].coefficient.value, ladder.rungs[i].coefficient.value, gc)) {
      ladder.monotone = false;
      ladder.monotonicity_failures.push_back(ladder.rungs[i].t);
    }
  }
  if (ladder.base.certified) {
    ladder.base_included = true;
    for (const auto& rung : ladder.rungs) {
      if (!local_contained(ladder.base.value, rung.coefficient.value, gc)) {
        ladder.base_included = false;
        ladder.inclusion_failures.push_back(rung.t);
      }
    }
  }
  const Ideal& last = ladder.rungs.back().coefficient.value;
  ladder.limit_candidate = last;
  std::size_t t0 = ladder.rungs.size() - 1;
  while (t0 > 0 && local_ideal_equal(ladder.rungs[t0 - 1].coefficient.value, last, gc)) --t0;
  if (t0 + 1 < ladder.rungs.size()) ladder.stabilization = ladder.rungs[t0].t;
  ladder.limit_matches_base = local_ideal_equal(last, ladder.base.value, gc);
  return ladder;
}

std::vector<TruncationRow> chevalley_truncation_probe(const PaddingLadder& ladder, unsigned max_n,
                                                      const EngineCaps& caps) {
  std::vector<TruncationRow> rows;
  const Ring& ring = ladder.limit_candidate.ring();
  for (unsigned n = 1; n <= max_n; ++n) {
    Ideal target = ideal_sum(ladder.limit_candidate, ideal_power(Ideal::maximal(ring), n));
    TruncationRow row{n, std::nullopt};
    for (const auto& rung : ladder.rungs) {
      if (local_contained(rung.coefficient.value, target, caps.groebner)) {
        row.t = rung.t;
        break;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bsk
