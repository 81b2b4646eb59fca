#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcg/layout.hpp"
#include "bcg/style.hpp"

namespace bcg {

/// Canonical JSON. Key order is fixed (meta: source, seed, mode, catalog,
/// generator, ground_y, unit_scale; block: element, model, x, y, w, h,
/// tier{part,row}); coordinates are printed with exactly two decimals.
std::string emit_json(const Level& level);

/// Parses and validates a level document; throws SchemaError or
/// InvariantViolation.
Level load_json(std::string_view text);

/// Target strings for the game-side XML plus the level preamble.
struct XmlMapping {
  std::map<std::string, std::pair<std::string, std::string>> blocks;  // model id -> (type, material)

  double camera_x = 0.0;
  double camera_y = -1.0;
  double camera_min_width = 20.0;
  double camera_max_width = 25.0;
  std::vector<std::string> birds = {"BirdRed", "BirdRed", "BirdBlue"};
  double slingshot_x = -8.0;
  double slingshot_y = -2.5;

  /// Maps every model of the catalog through its xml_type / xml_material.
  static XmlMapping from_catalog(const ModelCatalog& c);
};

/// `<Level>` with `Camera`, `Birds`, `Slingshot` and `GameObjects`; one
/// `<Block>` per placed block at its centre, scaled by the level's
/// unit_scale. Throws MissingMapping for unmapped models.
std::string emit_xml(const Level& level, const XmlMapping& m);

/// Standalone SVG 1.1 preview: one rect per block in its model's fill
/// colour, glyph text overlay when the model has one, 1 unit of padding.
/// Throws UnknownModel for blocks whose model is not in the catalog.
std::string render_svg(const Level& level, const ModelCatalog& c);

}  // namespace bcg
