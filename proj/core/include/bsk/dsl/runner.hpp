#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bsk/caps.hpp"
#include "bsk/dsl/ast.hpp"
#include "bsk/harness.hpp"

namespace bsk::dsl {

struct RunConfig {
  std::uint64_t seed = 0;
  EngineCaps caps;
  unsigned jobs = 1;
  bool timings = false;

  // Throws ConfigError unless every cap and the job count are >= 1.
  void validate() const;
};

enum class Outcome { Holds, Fails, Indeterminate, Computed, Error };

std::string outcome_name(Outcome outcome);

enum class ErrorClass { None, Usage, Internal };

struct TaskReport {
  std::string kind;
  std::string instance;
  Outcome outcome = Outcome::Computed;
  std::optional<std::string> witness;
  std::optional<std::string> reason;
  ReportObjects objects;
  bool budget_exhausted = false;
  ErrorClass error = ErrorClass::None;
  double timing_ms = 0.0;
};

struct ScriptResult {
  std::string ring;
  std::vector<TaskReport> tasks;
};

// Executes the tasks in script order. With cfg.jobs > 1 tasks run on a
// worker pool; the result order is still script order. Engine errors become
// per-task Error reports.
ScriptResult run_script(const ScriptAst& ast, const RunConfig& cfg);

struct CorpusEntry {
  std::string file;
  ScriptResult result;
};

// Every *.bsk file in dir, sorted by file name. Parse errors propagate.
std::vector<CorpusEntry> run_corpus(const std::filesystem::path& dir, const RunConfig& cfg);

std::string read_file(const std::filesystem::path& path);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFails = 2;
inline constexpr int kIndeterminate = 3;
inline constexpr int kUsage = 4;
inline constexpr int kBudget = 5;
}  // namespace exit_code

// Fails (including internal errors) beat usage errors, which beat budget
// exhaustion, which beats indeterminate.
int exit_code_for(const std::vector<TaskReport>& reports);
int exit_code_for(const std::vector<CorpusEntry>& corpus);

}  // namespace bsk::dsl
