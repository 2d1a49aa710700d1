#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "vkc/group.hpp"
#include "vkc/io.hpp"
#include "vkc/svk.hpp"

namespace vkc {

/// One line of a gluing manifest: `FILE KIND SUB...`, with KIND one of
/// amalgam, hnn, colimit and `*` standing for the whole complex.
struct GluingEntry {
  std::string file;
  std::string kind;
  std::vector<std::string> subs;
};

std::vector<GluingEntry> load_manifest(const std::filesystem::path& path);

/// The named subcomplexes of `cf` (`*` is the whole complex).
std::vector<Subcomplex> resolve_subs(const ComplexFile& cf, const std::vector<std::string>& names);

/// Builds the entry's presentation. Needs a `base` line in the file.
GluedPresentation build_entry(const ComplexFile& cf, const GluingEntry& entry);

struct AcceptanceConfig {
  std::filesystem::path fixture_dir;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no time limit
  std::string detail;
};

/// Runs every criterion in order, calling `report` after each one.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceConfig& config,
    const std::function<void(const CriterionResult&)>& report = {});

/// "PASS  3  cartesian square ...  (0.41 s, limit 60 s)".
std::string format_result(const CriterionResult& r);

}  // namespace vkc
