#include "bsk/dsl/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "bsk/coefficient.hpp"
#include "bsk/dsl/parser.hpp"
#include "bsk/newton.hpp"
#include "bsk/reduction.hpp"

namespace bsk::dsl {

void RunConfig::validate() const {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string(what) + " must be at least 1");
  };
  need(caps.groebner.max_degree >= 1, "degree cap");
  need(caps.groebner.max_pairs >= 1, "pair cap");
  need(caps.colon_iterations >= 1, "colon iteration cap");
  need(caps.reduction_retries >= 1, "reduction retry cap");
  need(caps.r_cap >= 1, "reduction number cap");
  need(caps.ladder_depth >= 1, "ladder depth");
  need(caps.closure.box_budget >= 1, "enumeration box budget");
  need(jobs >= 1, "job count");
}

std::string outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Indeterminate: return "indeterminate";
    case Outcome::Computed: return "computed";
    case Outcome::Error: return "error";
  }
  return "error";
}

namespace {

using Clock = std::chrono::steady_clock;

TaskReport from_verdict(const VerdictReport& v) {
  TaskReport t;
  t.kind = v.kind;
  t.instance = v.instance;
  t.outcome = v.verdict == Verdict::Holds ? Outcome::Holds
              : v.verdict == Verdict::Fails ? Outcome::Fails
                                            : Outcome::Indeterminate;
  t.witness = v.witness;
  t.reason = v.reason;
  t.objects = v.objects;
  t.budget_exhausted = v.budget_exhausted;
  t.timing_ms = v.timing_ms;
  std::vector<std::string> checks;
  for (const auto& c : v.checks) {
    std::string line = c.label + ": " + verdict_name(c.verdict);
    if (!c.reason.empty()) line += " (" + c.reason + ")";
    checks.push_back(line);
  }
  t.objects.set("checks", checks);
  return t;
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

class TaskRunner {
 public:
  TaskRunner(const ScriptAst& ast, const TaskStmt& stmt, const RunConfig& cfg) : ast_(ast), stmt_(stmt), cfg_(cfg) {}

  std::vector<TaskReport> run() {
    const std::string& n = stmt_.name;
    if (n == "gb") return {gb()};
    if (n == "closure") return {closure()};
    if (n == "spread") return {spread()};
    if (n == "reduce") return {reduce()};
    if (n == "reduction_number") return {reduction_number_task()};
    if (n == "coeff") return {coeff()};
    if (n == "ladder") return {ladder()};
    if (n == "verify_classical") return {from_verdict(verify_classical_bs(instance(), cfg_.caps))};
    if (n == "verify_mprimary") return {from_verdict(verify_coeff_bs_mprimary(instance(), cfg_.caps))};
    if (n == "verify_main") return {from_verdict(verify_coeff_bs_main(instance(), ladder_caps()))};
    if (n == "verify_lemmas") {
      std::vector<TaskReport> out;
      for (const auto& v : verify_lemmas(instance(), ladder_caps())) out.push_back(from_verdict(v));
      return out;
    }
    if (n == "verify_padding") return {from_verdict(verify_padding(instance(), ideal("L"), cfg_.caps))};
    if (n == "verify_hh") return {from_verdict(verify_hh_regular(ideal("I"), w_range({0, 1}), cfg_.caps))};
    if (n == "frobenius") return {frobenius()};
    if (n == "tc_check") return {tc_check()};
    if (n == "probe_remark") return {from_verdict(remark_localization_probe(nonneg("steps", 8), cfg_.caps))};
    if (n == "member") return {member()};
    if (n == "dim") return {dim()};
    throw InvalidArgument("unknown task " + n);
  }

 private:
  const ScriptAst& ast_;
  const TaskStmt& stmt_;
  const RunConfig& cfg_;

  bool has(const std::string& p) const { return stmt_.find(p) != nullptr; }

  std::vector<Polynomial> poly_list(const std::string& p) const {
    const Value* v = stmt_.find(p);
    if (const auto* ref = std::get_if<IdealRef>(v)) return ast_.binding(ref->name)->generators;
    return std::get<std::vector<Polynomial>>(*v);
  }

  Ideal ideal(const std::string& p) const { return Ideal(ast_.ring, poly_list(p)); }

  Polynomial poly(const std::string& p, std::optional<long long> fallback = std::nullopt) const {
    if (!has(p)) return Polynomial::constant(ast_.ring, ast_.ring->field().from_integer(*fallback));
    return std::get<Polynomial>(*stmt_.find(p));
  }

  unsigned nonneg(const std::string& p, unsigned fallback) const {
    if (!has(p)) return fallback;
    const long long v = std::get<long long>(*stmt_.find(p));
    if (v < 0 || v > 1'000'000) throw InvalidArgument("parameter '" + p + "' out of range");
    return static_cast<unsigned>(v);
  }

  unsigned positive(const std::string& p, unsigned fallback) const {
    const unsigned v = nonneg(p, fallback);
    if (v == 0) throw InvalidArgument("parameter '" + p + "' must be positive");
    return v;
  }

  std::uint64_t seed() const {
    if (!has("seed")) return cfg_.seed;
    const long long v = std::get<long long>(*stmt_.find("seed"));
    if (v < 0) throw InvalidArgument("seed must be nonnegative");
    return static_cast<std::uint64_t>(v);
  }

  std::vector<int> w_range(std::vector<int> fallback) const {
    if (!has("w")) return fallback;
    const IntRange r = std::get<IntRange>(*stmt_.find("w"));
    if (r.lo < -1 || r.hi > 8) throw InvalidArgument("w must lie in -1..8");
    std::vector<int> out;
    for (long long w = r.lo; w <= r.hi; ++w) out.push_back(static_cast<int>(w));
    return out;
  }

  EngineCaps ladder_caps() const {
    EngineCaps caps = cfg_.caps;
    caps.ladder_depth = positive("T", caps.ladder_depth);
    return caps;
  }

  HarnessInstance instance() const {
    HarnessInstance in(ideal("I"));
    if (has("J")) in.reduction = ideal("J");
    in.seed = seed();
    if (has("pads")) in.pads = poly_list("pads");
    in.w_range = w_range(default_w_range());
    return in;
  }

  TaskReport base(const std::string& instance) const {
    TaskReport t;
    t.kind = stmt_.name;
    t.instance = instance;
    t.outcome = Outcome::Computed;
    return t;
  }

  // J from the script, or a generic minimal reduction. Unset r means J is
  // not a verified reduction.
  std::pair<Ideal, std::optional<unsigned>> reduction_for(const Ideal& i, TaskReport& t) const {
    if (has("J")) {
      Ideal j = ideal("J");
      auto r = reduction_number(i, j, cfg_.caps.r_cap, cfg_.caps);
      if (r) t.objects.set("r", static_cast<long long>(*r));
      return {j, r};
    }
    ReductionCertificate cert = generic_minimal_reduction(i, seed(), cfg_.caps);
    t.objects.set("reduction_gens", generator_strings(cert.reduction));
    if (cert.verified && cert.r) t.objects.set("r", static_cast<long long>(*cert.r));
    return {cert.reduction, cert.verified ? cert.r : std::nullopt};
  }

  TaskReport gb() const {
    Ideal i = ideal("I");
    TaskReport t = base("I = " + i.to_string());
    Ideal g = canonical(i, cfg_.caps.groebner);
    t.objects.set("basis", generator_strings(g));
    t.objects.set("gb_size", static_cast<long long>(g.generators().size()));
    return t;
  }

  TaskReport closure() const {
    Ideal i = ideal("I");
    const unsigned k = positive("k", 1);
    TaskReport t = base("I = " + i.to_string() + ", k = " + std::to_string(k));
    MonomialIdeal c = integral_closure_power(MonomialIdeal::from_ideal(i), k, cfg_.caps.closure);
    std::vector<std::string> gens;
    for (const auto& m : c.generators()) gens.push_back(Polynomial::monomial(i.ring(), m).to_string());
    t.objects.set("k", static_cast<long long>(k));
    t.objects.set("closure_gens", gens);
    return t;
  }

  TaskReport spread() const {
    Ideal i = ideal("I");
    TaskReport t = base("I = " + i.to_string());
    t.objects.set("ell", static_cast<long long>(analytic_spread(i, cfg_.caps).spread));
    return t;
  }

  TaskReport reduce() const {
    Ideal i = ideal("I");
    TaskReport t = base("I = " + i.to_string() + ", seed = " + std::to_string(seed()));
    ReductionCertificate cert = generic_minimal_reduction(i, seed(), cfg_.caps);
    t.objects.set("ell", static_cast<long long>(cert.spread));
    t.objects.set("reduction_gens", generator_strings(cert.reduction));
    t.objects.set("method", std::string(cert.method == ReductionMethod::GeneratorSubset ? "generator-subset"
                                                                                         : "random-combination"));
    t.objects.set("attempts", static_cast<long long>(cert.attempts));
    t.objects.set("verified", cert.verified);
    if (cert.r) t.objects.set("r", static_cast<long long>(*cert.r));
    if (!cert.verified) {
      t.outcome = Outcome::Indeterminate;
      t.reason = "no candidate verified as a reduction within the retry budget";
    }
    return t;
  }

  TaskReport reduction_number_task() const {
    Ideal i = ideal("I");
    Ideal j = ideal("J");
    TaskReport t = base("I = " + i.to_string() + ", J = " + j.to_string());
    auto r = reduction_number(i, j, cfg_.caps.r_cap, cfg_.caps);
    if (r) {
      t.objects.set("r", static_cast<long long>(*r));
    } else {
      t.outcome = Outcome::Indeterminate;
      t.reason = "no r <= " + std::to_string(cfg_.caps.r_cap) + " with J*I^r = I^(r+1)";
    }
    return t;
  }

  TaskReport coeff() const {
    Ideal i = ideal("I");
    TaskReport t = base("I = " + i.to_string() + (has("J") ? ", J = " + ideal("J").to_string() : ""));
    auto [j, r] = reduction_for(i, t);
    const unsigned cap = positive("cap", cfg_.caps.colon_iterations);
    CoefficientIdealResult c = coefficient_ideal(i, j, cap, r, cfg_.caps);
    t.objects.set("coeff_ideal_gens", generator_strings(c.value));
    t.objects.set("certified", c.certified);
    if (c.fixpoint_index) t.objects.set("fixpoint_index", static_cast<long long>(*c.fixpoint_index));
    std::vector<std::string> trace;
    for (const auto& s : c.trace.steps) trace.push_back(s.to_string());
    t.objects.set("trace", trace);
    if (c.known_member_floor) t.objects.set("floor_gens", generator_strings(*c.known_member_floor));
    if (!c.certified) {
      t.outcome = Outcome::Indeterminate;
      t.reason = "no fixpoint within " + std::to_string(cap) + " colon steps; value is an upper bound";
    }
    return t;
  }

  TaskReport ladder() const {
    Ideal i = ideal("I");
    TaskReport t = base("I = " + i.to_string() + (has("J") ? ", J = " + ideal("J").to_string() : ""));
    auto [j, r] = reduction_for(i, t);
    const std::vector<Polynomial> pads = has("pads") ? poly_list("pads") : default_pads(i);
    const unsigned depth = positive("T", cfg_.caps.ladder_depth);
    PaddingLadder l = coefficient_ladder(i, j, pads, depth, r, cfg_.caps);
    t.objects.set("pads", poly_strings(pads));
    t.objects.set("coeff_ideal_gens", generator_strings(l.base.value));
    t.objects.set("coeff_certified", l.base.certified);
    std::vector<std::string> rungs;
    for (const auto& rung : l.rungs) {
      rungs.push_back("t=" + std::to_string(rung.t) + ": " + rung.coefficient.value.to_string() +
                      (rung.coefficient.certified ? "" : " (uncertified)"));
    }
    t.objects.set("ladder", rungs);
    t.objects.set("monotone", l.monotone);
    if (l.base_included) t.objects.set("base_included", *l.base_included);
    if (l.stabilization) t.objects.set("stabilization", static_cast<long long>(*l.stabilization));
    t.objects.set("limit_candidate", generator_strings(l.limit_candidate));
    t.objects.set("limit_matches_base", l.limit_matches_base);
    if (const unsigned n = nonneg("N", 0); n > 0) {
      std::vector<std::string> rows;
      for (const auto& row : chevalley_truncation_probe(l, n, cfg_.caps)) {
        rows.push_back("n=" + std::to_string(row.n) + ": " + (row.t ? "t=" + std::to_string(*row.t) : "none"));
      }
      t.objects.set("truncation", rows);
    }
    if (!l.base.certified || !l.all_rungs_certified) {
      t.outcome = Outcome::Indeterminate;
      t.reason = "some coefficient ideal in the ladder is uncertified";
    }
    return t;
  }

  TaskReport frobenius() const {
    Ideal i = ideal("I");
    const long long q = std::get<long long>(*stmt_.find("q"));
    if (q < 1) throw InvalidArgument("q must be positive");
    TaskReport t = base("I = " + i.to_string() + ", q = " + std::to_string(q));
    Ideal f = frobenius_power(i, static_cast<std::uint64_t>(q));
    t.objects.set("frobenius_gens", generator_strings(f));
    return t;
  }

  TaskReport tc_check() const {
    Ideal i = ideal("I");
    Polynomial z = poly("z");
    Polynomial c = poly("c", 1);
    const long long q_max = std::get<long long>(*stmt_.find("q_max"));
    if (q_max < 1) throw InvalidArgument("q_max must be positive");
    TaskReport t = base("z = " + z.to_string() + ", I = " + i.to_string() + ", c = " + c.to_string());
    TightClosureEvidence e = tc_witness_check(z, i, c, static_cast<std::uint64_t>(q_max), cfg_.caps);
    std::vector<std::string> rows;
    for (const auto& [q, pass] : e.results) rows.push_back("q=" + std::to_string(q) + ": " + (pass ? "pass" : "fail"));
    t.objects.set("evidence", rows);
    t.objects.set("all_pass", e.all_pass);
    t.objects.set("note", std::string("evidence only; not a tight closure decision"));
    return t;
  }

  TaskReport member() const {
    Ideal i = ideal("I");
    Polynomial f = poly("f");
    TaskReport t = base("f = " + f.to_string() + ", I = " + i.to_string());
    t.objects.set("global", ideal_member(f, i, cfg_.caps.groebner));
    t.objects.set("local", local_member(f, i, cfg_.caps.groebner));
    return t;
  }

  TaskReport dim() const {
    Ideal i = ideal("I");
    TaskReport t = base("I = " + i.to_string());
    DimensionResult d = quotient_dimension(i, cfg_.caps.groebner);
    t.objects.set("dimension", static_cast<long long>(d.dimension));
    std::vector<std::string> vars;
    for (std::size_t v : d.independent_set) vars.push_back(i.ring()->name(v));
    t.objects.set("independent_set", vars);
    return t;
  }
};

std::vector<TaskReport> run_task(const ScriptAst& ast, const TaskStmt& stmt, const RunConfig& cfg) {
  const auto start = Clock::now();
  std::vector<TaskReport> out;
  auto error_report = [&](Outcome outcome, ErrorClass cls, const std::string& what, bool budget) {
    TaskReport t;
    t.kind = stmt.name;
    t.instance = "line " + std::to_string(stmt.pos.line);
    t.outcome = outcome;
    t.reason = what;
    t.error = cls;
    t.budget_exhausted = budget;
    out = {t};
  };
  try {
    out = TaskRunner(ast, stmt, cfg).run();
  } catch (const BudgetError& e) {
    error_report(Outcome::Indeterminate, ErrorClass::None, std::string("budget exhausted: ") + e.what(), true);
  } catch (const InternalError& e) {
    error_report(Outcome::Error, ErrorClass::Internal, e.what(), false);
  } catch (const Error& e) {
    error_report(Outcome::Error, ErrorClass::Usage, e.what(), false);
  } catch (const std::exception& e) {
    error_report(Outcome::Error, ErrorClass::Internal, e.what(), false);
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  for (auto& t : out) t.timing_ms = ms;
  return out;
}

}  // namespace

ScriptResult run_script(const ScriptAst& ast, const RunConfig& cfg) {
  cfg.validate();
  ScriptResult result;
  result.ring = ast.ring ? ast.ring->describe() : "";
  const std::size_t n = ast.tasks.size();
  std::vector<std::vector<TaskReport>> slots(n);
  const unsigned width = static_cast<unsigned>(std::min<std::size_t>(cfg.jobs, n));
  if (width <= 1) {
    for (std::size_t k = 0; k < n; ++k) slots[k] = run_task(ast, ast.tasks[k], cfg);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < width; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < n; k = next++) slots[k] = run_task(ast, ast.tasks[k], cfg);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& s : slots) {
    for (auto& t : s) result.tasks.push_back(std::move(t));
  }
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<CorpusEntry> run_corpus(const std::filesystem::path& dir, const RunConfig& cfg) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) throw InvalidArgument("corpus directory " + dir.string() + " not found");
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".bsk") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    ScriptAst ast;
    try {
      ast = parse_script(read_file(f));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), e.pos(), f.filename().string() + ": " + e.message());
    }
    out.push_back(CorpusEntry{f.filename().string(), run_script(ast, cfg)});
  }
  return out;
}

int exit_code_for(const std::vector<TaskReport>& reports) {
  bool fails = false, usage = false, budget = false, indeterminate = false;
  for (const auto& t : reports) {
    fails = fails || t.outcome == Outcome::Fails || t.error == ErrorClass::Internal;
    usage = usage || t.error == ErrorClass::Usage;
    budget = budget || t.budget_exhausted;
    indeterminate = indeterminate || t.outcome == Outcome::Indeterminate;
  }
  if (fails) return exit_code::kFails;
  if (usage) return exit_code::kUsage;
  if (budget) return exit_code::kBudget;
  if (indeterminate) return exit_code::kIndeterminate;
  return exit_code::kOk;
}

int exit_code_for(const std::vector<CorpusEntry>& corpus) {
  std::vector<TaskReport> all;
  for (const auto& e : corpus) all.insert(all.end(), e.result.tasks.begin(), e.result.tasks.end());
  return exit_code_for(all);
}

}  // namespace bsk::dsl
