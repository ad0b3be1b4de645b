#pragma once

#include <string>
#include <vector>

#include "bsk/dsl/runner.hpp"

namespace bsk::dsl {

enum class ReportFormat { Text, Json };

// {"version": 1, "ring": ..., "tasks": [...]}; timing_ms only when requested.
std::string emit_report(const ScriptResult& result, ReportFormat format, bool timings = false);
// {"version": 1, "scripts": [{"file": ..., "ring": ..., "tasks": [...]}]}
std::string emit_report(const std::vector<CorpusEntry>& corpus, ReportFormat format, bool timings = false);

}  // namespace bsk::dsl
