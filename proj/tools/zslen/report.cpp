#include "report.hpp"

#include <sstream>

#include "zslen/errors.hpp"

namespace zslen::cli {

bool Report::all_pass() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

json Report::to_json(bool stable) const {
  json out = {
      {"schema_version", kSchemaVersion},
      {"tool_version", kToolVersion},
      {"command", command},
      {"config", config},
      {"result", result},
      {"counters", counters},
  };
  json v = json::array();
  for (const auto& verdict : verdicts)
    v.push_back({{"name", verdict.name}, {"pass", verdict.pass}, {"witness", verdict.witness}});
  out["verdicts"] = v;
  if (!warnings.empty()) out["warnings"] = warnings;
  if (!error.is_null()) out["error"] = error;
  if (!stable && wall_ms) out["timing"] = {{"wall_ms", *wall_ms}};
  return out;
}

void add_verdict(Report& report, std::string name, bool pass, std::string witness) {
  report.verdicts.push_back({std::move(name), pass, std::move(witness)});
}

json to_json(const LengthSet& l) { return std::vector<std::int64_t>(l.values().begin(), l.values().end()); }

json to_json(const Sequence& s) { return s.to_string(); }

json to_json(const std::vector<std::int64_t>& v) { return json(v); }

json to_json(const AAMPFit& fit) {
  return {
      {"shift", fit.shift},       {"difference", fit.difference}, {"period", fit.period},
      {"length", fit.length},     {"bound", fit.bound},           {"initial", fit.initial},
      {"central", fit.central},   {"end", fit.end},               {"degenerate", fit.degenerate},
  };
}

json elements_to_json(const FiniteAbelianGroup& group, std::span<const ElementId> ids) {
  json out = json::array();
  for (const auto g : ids) out.push_back(group.element_to_string(g));
  return out;
}

namespace {

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string text_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_text(std::ostringstream& out, const json& node, const std::string& prefix) {
  if (node.is_object() && (!node.empty() || prefix.empty())) {
    for (const auto& [key, value] : node.items()) render_text(out, value, prefix.empty() ? key : prefix + "." + key);
    return;
  }
  out << prefix << ": " << text_value(node) << '\n';
}

}  // namespace

std::string render(const Report& report, Format format, bool stable) {
  std::ostringstream out;
  switch (format) {
    case Format::kJson:
      out << report.to_json(stable).dump(2) << '\n';
      break;
    case Format::kCsv: {
      if (!report.error.is_null()) {
        out << "error," << csv_cell(report.error.value("message", "")) << '\n';
        break;
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
        out << '\n';
      };
      line(report.columns);
      for (const auto& row : report.rows) line(row);
      break;
    }
    case Format::kText: {
      out << "command: " << report.command << '\n';
      if (!report.error.is_null()) render_text(out, report.error, "error");
      render_text(out, report.result, "");
      for (const auto& v : report.verdicts)
        out << (v.pass ? "PASS " : "FAIL ") << v.name << (v.witness.empty() ? "" : "  " + v.witness) << '\n';
      for (const auto& w : report.warnings) out << "warning: " << w << '\n';
      if (!stable && report.wall_ms) out << "wall_ms: " << *report.wall_ms << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace zslen::cli
