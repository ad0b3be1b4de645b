#pragma once

#include <optional>
#include <vector>

#include "bsk/caps.hpp"
#include "bsk/ideal.hpp"

namespace bsk {

enum class Termination { Fixpoint, CapReached };

// b_0 = (1), b_{k+1} = (J·b_k : I). Every ideal b with I·b = J·b lies in
// every b_k, and a fixpoint b satisfies I·b = J·b, so a fixpoint is the
// coefficient ideal. Steps are stored with canonical generators.
struct ColonIterationTrace {
  std::vector<Ideal> steps;
  Termination terminated = Termination::CapReached;
  unsigned cap = 0;
};

struct CoefficientIdealResult {
  // Fixpoint when certified; otherwise b_cap, an upper bound.
  Ideal value;
  bool certified = false;
  // k with b_{k+1} = b_k locally.
  std::optional<unsigned> fixpoint_index;
  ColonIterationTrace trace;
  // I^r when J is a verified reduction with number r; always inside value.
  std::optional<Ideal> known_member_floor;
};

// Throws InvalidArgument unless J ⊆ I locally and I ⊆ m. An uncertified
// result after `cap` steps is an outcome, not an error. When reduction_r is
// given, checks I^r ⊆ value and throws InternalError otherwise.
CoefficientIdealResult coefficient_ideal(const Ideal& ideal, const Ideal& reduction, unsigned cap,
                                         std::optional<unsigned> reduction_r = std::nullopt,
                                         const EngineCaps& caps = {});

// Variables with no pure power among the monomial generators of I. Adding them
// makes a monomial ideal m-primary.
std::vector<Polynomial> default_pads(const Ideal& ideal);

struct PaddedPair {
  Ideal ideal;
  Ideal reduction;
};

// (I + (p^t : p in pads), J + (p^t : p in pads)). Throws InvalidArgument
// unless I + (pads) is m-primary.
PaddedPair padded_pair(const Ideal& ideal, const Ideal& reduction, const std::vector<Polynomial>& pads,
                       unsigned t, const EngineCaps& caps = {});

struct LadderRung {
  unsigned t;
  PaddedPair pair;
  CoefficientIdealResult coefficient;
};

struct PaddingLadder {
  std::vector<Polynomial> pads;
  unsigned depth = 0;
  // a(I, J) itself
  CoefficientIdealResult base;
  std::vector<LadderRung> rungs;
  // a_{t+1} ⊆ a_t locally for every computed t; failures list t.
  bool monotone = true;
  std::vector<unsigned> monotonicity_failures;
  // a(I,J) ⊆ a_t for all t; unset when a(I,J) is uncertified.
  std::optional<bool> base_included;
  std::vector<unsigned> inclusion_failures;
  // least t0 < depth with a_t0 = ... = a_depth locally
  std::optional<unsigned> stabilization;
  // a_depth, standing in for the intersection of the rungs
  Ideal limit_candidate;
  // a_depth = a(I,J) locally (only meaningful when both are certified)
  bool limit_matches_base = false;
  bool all_rungs_certified = true;
};

PaddingLadder coefficient_ladder(const Ideal& ideal, const Ideal& reduction, const std::vector<Polynomial>& pads,
                                 unsigned depth, std::optional<unsigned> reduction_r = std::nullopt,
                                 const EngineCaps& caps = {});

struct TruncationRow {
  unsigned n;
  // least computed t with a_t ⊆ limit + m^n locally
  std::optional<unsigned> t;
};

std::vector<TruncationRow> chevalley_truncation_probe(const PaddingLadder& ladder, unsigned max_n,
                                                      const EngineCaps& caps = {});

}  // namespace bsk
