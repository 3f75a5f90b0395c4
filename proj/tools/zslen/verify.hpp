#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "zslen/group.hpp"
#include "zslen/options.hpp"

namespace zslen::cli {

struct VerifyConfig {
  std::optional<FiniteAbelianGroup> group;  // restrict the suite to one group
  std::optional<std::uint64_t> bound;
  bool small = false;
  std::uint64_t seed = 42;
  Options options;
};

/// prop2.3, prop6.1, prop6.2, prop6.5, thm2.6, thm5.3, thm6.3.1, lemma4.2, all
const std::vector<std::string>& verify_names();

/// Runs the named property suite, appending verdicts and a result section.
/// Throws InvalidArgument for an unknown name or an unsupported group.
void run_verify(const std::string& name, const VerifyConfig& config, Report& report);

}  // namespace zslen::cli
