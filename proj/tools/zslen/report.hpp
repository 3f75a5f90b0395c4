#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zslen/invariants.hpp"
#include "zslen/numerical.hpp"
#include "zslen/structure_fit.hpp"
#include "zslen/transfer.hpp"

namespace zslen::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct Verdict {
  std::string name;
  bool pass = false;
  std::string witness;  // inputs that replay the check, or the offending value
};

enum class Format { kJson, kCsv, kText };

/// Everything printed for one run.
struct Report {
  std::string command;
  json config = json::object();
  json result = json::object();
  std::vector<Verdict> verdicts;
  json counters = json::object();
  std::vector<std::string> warnings;
  std::optional<double> wall_ms;
  json error;  // null unless the run failed
  // Tabular view for CSV; empty for commands without one.
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool all_pass() const;
  json to_json(bool stable) const;
};

void add_verdict(Report& report, std::string name, bool pass, std::string witness = "");

json to_json(const LengthSet& l);
json to_json(const Sequence& s);
json to_json(const std::vector<std::int64_t>& v);
json to_json(const AAMPFit& fit);
json elements_to_json(const FiniteAbelianGroup& group, std::span<const ElementId> ids);

/// Renders the report. CSV prints the tabular view (or the error message).
std::string render(const Report& report, Format format, bool stable);

}  // namespace zslen::cli
