#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "bsk/dsl/parser.hpp"
#include "bsk/dsl/report.hpp"
#include "bsk/dsl/runner.hpp"

namespace {

using namespace bsk::dsl;

struct Options {
  bool json = false;
  bool timings = false;
  std::uint64_t seed = 0;
  RunConfig cfg;
  // single-instance subcommands
  std::string ring = "QQ[x,y]";
  std::string ideal;
  std::string reduction;
  std::string pads;
  std::string pad_ideal;
  std::string w;
  std::string kind = "main";
  unsigned k = 1;
  unsigned depth = 0;
  unsigned truncation = 0;
  unsigned steps = 8;
  std::string file;
  std::string corpus_dir = BSK_CORPUS_DIR;
};

int emit(const Options& o, const ScriptResult& r) {
  std::cout << emit_report(r, o.json ? ReportFormat::Json : ReportFormat::Text, o.timings);
  return exit_code_for(r.tasks);
}

RunConfig config(const Options& o) {
  RunConfig cfg = o.cfg;
  cfg.seed = o.seed;
  cfg.timings = o.timings;
  return cfg;
}

int run_text(const Options& o, const std::string& text) {
  ScriptAst ast = parse_script(text);
  return emit(o, run_script(ast, config(o)));
}

// Builds a one-task script from the single-instance flags.
std::string synthesize(const Options& o, const std::string& task, const std::string& extra_args) {
  if (o.ideal.empty()) throw CLI::ValidationError("--ideal", "is required");
  std::string s = "ring " + o.ring + ";\nI = ideal(" + o.ideal + ");\n";
  std::string args = "I";
  if (!o.reduction.empty()) {
    s += "J = ideal(" + o.reduction + ");\n";
    args += ", J=J";
  }
  return s + task + "(" + args + extra_args + ");\n";
}

std::string verify_task(const Options& o) {
  const std::string w = o.w.empty() ? "" : ", w=" + o.w;
  std::string ladder;
  if (!o.pads.empty()) ladder += ", pads=(" + o.pads + ")";
  if (o.depth) ladder += ", T=" + std::to_string(o.depth);
  if (o.kind == "classical") return synthesize(o, "verify_classical", w);
  if (o.kind == "mprimary") return synthesize(o, "verify_mprimary", w);
  if (o.kind == "lemmas") return synthesize(o, "verify_lemmas", ladder);
  if (o.kind == "hh") {
    Options plain = o;
    plain.reduction.clear();
    return synthesize(plain, "verify_hh", w);
  }
  if (o.kind == "padding") {
    if (o.pad_ideal.empty()) throw CLI::ValidationError("--pad-ideal", "is required for --kind padding");
    return synthesize(o, "verify_padding", ", L=(" + o.pad_ideal + ")");
  }
  return synthesize(o, "verify_main", ladder + w);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact ideal computations: closures, reductions, coefficient ideals and containment checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "JSON output")->envname("BSK_JSON");
  app.add_flag("--timings", o.timings, "include per-task wall time")->envname("BSK_TIMINGS");
  app.add_option("--seed", o.seed, "seed for random reductions")->envname("BSK_SEED");
  app.add_option("--cap-degree", o.cfg.caps.groebner.max_degree, "Groebner degree cap")->envname("BSK_CAP_DEGREE");
  app.add_option("--cap-pairs", o.cfg.caps.groebner.max_pairs, "Groebner pair cap")->envname("BSK_CAP_PAIRS");
  app.add_option("--cap-colon", o.cfg.caps.colon_iterations, "colon iteration cap")->envname("BSK_CAP_COLON");
  app.add_option("--cap-retries", o.cfg.caps.reduction_retries, "reduction retries")->envname("BSK_CAP_RETRIES");
  app.add_option("--cap-r", o.cfg.caps.r_cap, "reduction number cap")->envname("BSK_CAP_R");
  app.add_option("--cap-ladder", o.cfg.caps.ladder_depth, "padding ladder depth")->envname("BSK_CAP_LADDER");
  app.add_option("--cap-box", o.cfg.caps.closure.box_budget, "closure enumeration budget")->envname("BSK_CAP_BOX");
  app.add_option("--jobs", o.cfg.jobs, "worker threads")->envname("BSK_JOBS");

  auto instance_flags = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "ring, e.g. QQ[x,y,z] or F101[x,y]");
    sub->add_option("--ideal", o.ideal, "generators, comma separated")->required();
  };
  auto reduction_flag = [&](CLI::App* sub) { sub->add_option("--reduction", o.reduction, "generators of J"); };

  auto* run = app.add_subcommand("run", "run a script file ('-' for stdin)");
  run->add_option("file", o.file, "script path")->required();
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  instance_flags(gb);
  auto* closure = app.add_subcommand("closure", "integral closure of I^k");
  instance_flags(closure);
  closure->add_option("--k", o.k, "power")->check(CLI::PositiveNumber);
  auto* spread = app.add_subcommand("spread", "analytic spread");
  instance_flags(spread);
  auto* reduce = app.add_subcommand("reduce", "generic minimal reduction");
  instance_flags(reduce);
  auto* coeff = app.add_subcommand("coeff", "coefficient ideal");
  instance_flags(coeff);
  reduction_flag(coeff);
  auto* ladder = app.add_subcommand("ladder", "padding ladder");
  instance_flags(ladder);
  reduction_flag(ladder);
  ladder->add_option("--pads", o.pads, "pad polynomials, comma separated");
  ladder->add_option("--depth", o.depth, "ladder depth T");
  ladder->add_option("--truncation", o.truncation, "truncation probe up to n");
  auto* verify = app.add_subcommand("verify", "containment checks");
  instance_flags(verify);
  reduction_flag(verify);
  verify->add_option("--kind", o.kind, "classical | mprimary | main | lemmas | padding | hh")
      ->check(CLI::IsMember({"classical", "mprimary", "main", "lemmas", "padding", "hh"}));
  verify->add_option("--pads", o.pads, "pad polynomials, comma separated");
  verify->add_option("--pad-ideal", o.pad_ideal, "pad ideal L for --kind padding");
  verify->add_option("--w", o.w, "w range, e.g. -1..1");
  verify->add_option("--depth", o.depth, "ladder depth T");
  auto* corpus = app.add_subcommand("corpus", "run the shipped corpus");
  corpus->add_option("--dir", o.corpus_dir, "corpus directory");
  auto* probe = app.add_subcommand("probe-remark", "colon iteration for ((x,y)^2, (x,y)^3)");
  probe->add_option("--steps", o.steps, "iteration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::kUsage;
  }

  try {
    if (run->parsed()) {
      if (o.file == "-") return run_text(o, std::string(std::istreambuf_iterator<char>(std::cin), {}));
      return run_text(o, read_file(o.file));
    }
    if (gb->parsed()) return run_text(o, synthesize(o, "gb", ""));
    if (closure->parsed()) return run_text(o, synthesize(o, "closure", ", k=" + std::to_string(o.k)));
    if (spread->parsed()) return run_text(o, synthesize(o, "spread", ""));
    if (reduce->parsed()) return run_text(o, synthesize(o, "reduce", ""));
    if (coeff->parsed()) return run_text(o, synthesize(o, "coeff", ""));
    if (ladder->parsed()) {
      std::string extra;
      if (!o.pads.empty()) extra += ", pads=(" + o.pads + ")";
      if (o.depth) extra += ", T=" + std::to_string(o.depth);
      if (o.truncation) extra += ", N=" + std::to_string(o.truncation);
      return run_text(o, synthesize(o, "ladder", extra));
    }
    if (verify->parsed()) return run_text(o, verify_task(o));
    if (corpus->parsed()) {
      auto results = run_corpus(o.corpus_dir, config(o));
      std::cout << emit_report(results, o.json ? ReportFormat::Json : ReportFormat::Text, o.timings);
      return exit_code_for(results);
    }
    if (probe->parsed()) return run_text(o, "probe_remark(steps=" + std::to_string(o.steps) + ");\n");
  } catch (const CLI::ValidationError& e) {
    std::cerr << "bsk: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const ParseError& e) {
    std::cerr << "bsk: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const bsk::BudgetError& e) {
    std::cerr << "bsk: " << e.what() << "\n";
    return exit_code::kBudget;
  } catch (const bsk::InternalError& e) {
    std::cerr << "bsk: internal error: " << e.what() << "\n";
    return exit_code::kFails;
  } catch (const bsk::Error& e) {
    std::cerr << "bsk: " << e.what() << "\n";
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}
