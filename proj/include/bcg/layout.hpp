#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcg/derivation.hpp"
#include "bcg/style.hpp"

namespace bcg {

inline constexpr const char* kGeneratorVersion = "bcg 1.0.0";

struct GeometryConfig {
  double ground_y = 0.0;
  double unit_scale = 1.0;
  double roof_taper = 0.15;    // width shrink per roof tier, [0, 0.5)
  double overlap_ratio = 0.5;  // minimal supported width fraction, (0, 1]
  double origin_x = 0.0;

  void check() const;
};

/// Rounds to the 0.01-unit output grid (ties away from zero).
double quantize(double v);

struct PlacedBlock {
  ElementKind element = ElementKind::Wall;
  std::string model;
  double x = 0, y = 0;  // bottom-left corner
  double w = 0, h = 0;
  Part part = Part::Main;
  int row = 0;

  double right() const { return x + w; }
  double top() const { return y + h; }

  bool operator==(const PlacedBlock&) const = default;
};

struct LevelMeta {
  std::string source;
  std::uint64_t seed = 0;
  StyleMode mode = StyleMode::PureChinese;
  std::string catalog;
  std::string generator = kGeneratorVersion;
  double ground_y = 0.0;
  double unit_scale = 1.0;

  bool operator==(const LevelMeta&) const = default;
};

struct Level {
  std::vector<PlacedBlock> blocks;  // bottom-to-top, left-to-right
  LevelMeta meta;

  bool operator==(const Level&) const = default;
};

/// Human-readable Level invariant violations; empty when the level is valid.
std::vector<std::string> level_violations(const Level& level);

/// Throws InvariantViolation naming the first violation.
void check_level(const Level& level);

/// Places one block per plan element: base slabs stacked bottom-up at the
/// main row's width, the main row left to right, then roof slabs tapering
/// by `roof_taper` per tier and centred, toproof last.
Level layout(const BuildingPlan& plan, const StyleAssignment& a, const GeometryConfig& g = {});

struct BlockSupport {
  bool supported = false;
  double contact = 0.0;  // width of bottom-edge contact (own width when grounded)
  std::optional<std::pair<double, double>> span;  // horizontal extent of the contact
};

struct SupportReport {
  std::vector<BlockSupport> blocks;  // parallel to Level::blocks
  bool stable = true;
};

/// Static support: a block is supported when grounded or when its contact
/// with the tops of blocks directly beneath covers at least
/// `overlap_ratio` of its width.
SupportReport check_support(const Level& level, const GeometryConfig& g = {});

}  // namespace bcg
