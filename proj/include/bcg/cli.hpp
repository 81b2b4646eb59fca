#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bcg/derivation.hpp"
#include "bcg/layout.hpp"
#include "bcg/style.hpp"

namespace bcg {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

struct GeneratedLevel {
  BuildingPlan plan;
  StyleAssignment assignment;
  Level level;
};

/// Whole pipeline for one level: derive (deterministically when the grammar
/// allows it, otherwise from `seed`), segment, style, lay out, stamp metadata.
GeneratedLevel generate_level(const Grammar& g, const ModelCatalog& catalog, StyleMode mode,
                              std::uint64_t seed, const DerivationLimits& limits,
                              const GeometryConfig& geometry, const std::string& source);

/// Entry point of the `bcg` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcg
