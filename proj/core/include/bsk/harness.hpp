#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bsk/caps.hpp"
#include "bsk/coefficient.hpp"
#include "bsk/ideal.hpp"

namespace bsk {

enum class Verdict { Holds, Fails, Indeterminate };

std::string verdict_name(Verdict v);

using ReportValue = std::variant<long long, bool, std::string, std::vector<std::string>>;

// Insertion-ordered key/value list; setting an existing key overwrites it.
class ReportObjects {
 public:
  void set(const std::string& key, ReportValue value);
  const std::vector<std::pair<std::string, ReportValue>>& entries() const noexcept { return entries_; }
  const ReportValue* find(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, ReportValue>> entries_;
};

std::vector<std::string> generator_strings(const Ideal& ideal);

// One containment LHS ⊆ RHS in R_m (or a lemma sub-verdict).
struct ContainmentCheck {
  std::string label;
  std::optional<int> w;
  Verdict verdict = Verdict::Holds;
  std::optional<Polynomial> witness;
  std::string reason;
};

struct VerdictReport {
  std::string kind;
  std::string instance;
  Verdict verdict = Verdict::Holds;
  std::optional<std::string> witness;
  std::optional<std::string> reason;
  std::vector<ContainmentCheck> checks;
  ReportObjects objects;
  bool budget_exhausted = false;
  double timing_ms = 0.0;
};

// Folds check verdicts into the report: any fail wins, then indeterminate.
void settle(VerdictReport& report);

// Every element of lhs lies in rhs locally. A failing element is re-checked
// through local_member_by_colon on a fresh ideal before it is reported.
ContainmentCheck check_containment(std::string label, std::optional<int> w, const std::vector<Polynomial>& lhs,
                                   const Ideal& rhs, const EngineCaps& caps = {});

struct HarnessInstance {
  explicit HarnessInstance(Ideal i) : ideal(std::move(i)) {}

  Ideal ideal;
  // Generic minimal reduction from `seed` when absent.
  std::optional<Ideal> reduction;
  std::uint64_t seed = 0;
  // default_pads(ideal) when absent.
  std::optional<std::vector<Polynomial>> pads;
  std::vector<int> w_range{-1, 0, 1};
};

std::vector<int> default_w_range();

// closure(I^{ℓ+w}) ⊆ J^{w+1}, w >= 0.
VerdictReport verify_classical_bs(const HarnessInstance& instance, const EngineCaps& caps = {});
// closure(I^{d+w}) ⊆ J^{w+1}·a(I,J) for m-primary I, w >= -1.
VerdictReport verify_coeff_bs_mprimary(const HarnessInstance& instance, const EngineCaps& caps = {});
// closure(I^{ℓ+w}) ⊆ J^{w+1}·a(I,J), w >= -1, with the padding-ladder lemmas
// as sub-verdicts. Ladder depth comes from caps.ladder_depth.
VerdictReport verify_coeff_bs_main(const HarnessInstance& instance, const EngineCaps& caps = {});
// Two reports: lemma-decreasing (a_{t+1} ⊆ a_t) and lemma-inclusion (a(I,J) ⊆ a_t).
std::vector<VerdictReport> verify_lemmas(const HarnessInstance& instance, const EngineCaps& caps = {});
// (J+L)(I+L)^r = (I+L)^{r+1} for the reduction number r of J.
VerdictReport verify_padding(const HarnessInstance& instance, const Ideal& pad, const EngineCaps& caps = {});
// closure(I^{n+w}) ⊆ I^{w+1} over F_p, n the number of minimal generators, w >= 0.
VerdictReport verify_hh_regular(const Ideal& ideal, const std::vector<int>& w_range, const EngineCaps& caps = {});

// (g^q : g a generator). Throws InvalidArgument unless the characteristic is
// p > 0 and q is a power of p.
Ideal frobenius_power(const Ideal& ideal, std::uint64_t q);

struct TightClosureEvidence {
  // (q, c·z^q ∈ I^[q]) for q = p, p^2, ... <= q_max
  std::vector<std::pair<std::uint64_t, bool>> results;
  bool all_pass = true;
};

// Evidence only: tight closure has no decision procedure here.
TightClosureEvidence tc_witness_check(const Polynomial& z, const Ideal& ideal, const Polynomial& c,
                                      std::uint64_t q_max, const EngineCaps& caps = {});

// a((x,y)^2, (x,y)^3) by colon iteration with cap n_steps over QQ[x,y].
VerdictReport remark_localization_probe(unsigned n_steps, const EngineCaps& caps = {});

}  // namespace bsk
