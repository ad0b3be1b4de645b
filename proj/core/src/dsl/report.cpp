#include "bsk/dsl/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace bsk::dsl {

namespace {

using Json = nlohmann::ordered_json;

struct ToJson {
  Json operator()(long long v) const { return v; }
  Json operator()(bool v) const { return v; }
  Json operator()(const std::string& v) const { return v; }
  Json operator()(const std::vector<std::string>& v) const { return v; }
};

struct ToText {
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const std::string& v) const { return v; }
  std::string operator()(const std::vector<std::string>& v) const {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
    return s + "]";
  }
};

Json task_json(const TaskReport& t, bool timings) {
  Json j;
  j["kind"] = t.kind;
  j["instance"] = t.instance;
  j["verdict"] = outcome_name(t.outcome);
  if (t.witness) j["witness"] = *t.witness;
  if (t.reason) j["reason"] = *t.reason;
  if (t.budget_exhausted) j["budget_exhausted"] = true;
  Json objects = Json::object();
  for (const auto& [k, v] : t.objects.entries()) objects[k] = std::visit(ToJson{}, v);
  j["objects"] = std::move(objects);
  if (timings) j["timing_ms"] = static_cast<long long>(t.timing_ms + 0.5);
  return j;
}

Json script_json(const ScriptResult& r, bool timings) {
  Json j;
  j["ring"] = r.ring;
  Json tasks = Json::array();
  for (const auto& t : r.tasks) tasks.push_back(task_json(t, timings));
  j["tasks"] = std::move(tasks);
  return j;
}

void text_table(std::ostream& out, const ScriptResult& r, bool timings) {
  out << "ring " << (r.ring.empty() ? "(none)" : r.ring) << "\n";
  if (r.tasks.empty()) {
    out << "  (no tasks)\n";
    return;
  }
  std::size_t kind_w = 4, verdict_w = 7;
  for (const auto& t : r.tasks) {
    kind_w = std::max(kind_w, t.kind.size());
    verdict_w = std::max(verdict_w, outcome_name(t.outcome).size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  out << "  " << pad("#", 4) << pad("task", kind_w + 2) << pad("verdict", verdict_w + 2) << "instance\n";
  for (std::size_t i = 0; i < r.tasks.size(); ++i) {
    const auto& t = r.tasks[i];
    out << "  " << pad(std::to_string(i + 1), 4) << pad(t.kind, kind_w + 2) << pad(outcome_name(t.outcome), verdict_w + 2)
        << t.instance;
    if (timings) out << "  [" << static_cast<long long>(t.timing_ms + 0.5) << " ms]";
    out << "\n";
    const std::string indent(6 + kind_w + 2, ' ');
    if (t.witness) out << indent << "witness: " << *t.witness << "\n";
    if (t.reason) out << indent << "reason: " << *t.reason << "\n";
    for (const auto& [k, v] : t.objects.entries()) out << indent << k << ": " << std::visit(ToText{}, v) << "\n";
  }
}

}  // namespace

std::string emit_report(const ScriptResult& result, ReportFormat format, bool timings) {
  if (format == ReportFormat::Json) {
    Json j;
    j["version"] = 1;
    Json body = script_json(result, timings);
    j["ring"] = body["ring"];
    j["tasks"] = body["tasks"];
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  text_table(out, result, timings);
  return out.str();
}

std::string emit_report(const std::vector<CorpusEntry>& corpus, ReportFormat format, bool timings) {
  if (format == ReportFormat::Json) {
    Json j;
    j["version"] = 1;
    Json scripts = Json::array();
    for (const auto& e : corpus) {
      Json s;
      s["file"] = e.file;
      Json body = script_json(e.result, timings);
      s["ring"] = body["ring"];
      s["tasks"] = body["tasks"];
      scripts.push_back(std::move(s));
    }
    j["scripts"] = std::move(scripts);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& e : corpus) {
    out << "== " << e.file << "\n";
    text_table(out, e.result, timings);
  }
  return out.str();
}

}  // namespace bsk::dsl
