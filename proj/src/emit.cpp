#include "bcg/emit.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>

#include "json.hpp"

namespace bcg {

namespace {

std::string fixed(double v) { return fmt::format("{:.2f}", quantize(v)); }

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string emit_json(const Level& level) {
  const auto& m = level.meta;
  std::string out = "{\n  \"meta\": {\n";
  out += fmt::format("    \"source\": {},\n", json_string(m.source));
  out += fmt::format("    \"seed\": {},\n", m.seed);
  out += fmt::format("    \"mode\": \"{}\",\n", to_string(m.mode));
  out += fmt::format("    \"catalog\": {},\n", json_string(m.catalog));
  out += fmt::format("    \"generator\": {},\n", json_string(m.generator));
  out += fmt::format("    \"ground_y\": {},\n", fixed(m.ground_y));
  out += fmt::format("    \"unit_scale\": {}\n", m.unit_scale);
  out += "  },\n  \"blocks\": [";
  for (std::size_t i = 0; i < level.blocks.size(); ++i) {
    const auto& b = level.blocks[i];
    out += i ? ",\n    " : "\n    ";
    out += fmt::format(
        "{{\"element\": \"{}\", \"model\": {}, \"x\": {}, \"y\": {}, \"w\": {}, \"h\": {}, "
        "\"tier\": {{\"part\": \"{}\", \"row\": {}}}}}",
        to_string(b.element), json_string(b.model), fixed(b.x), fixed(b.y), fixed(b.w), fixed(b.h),
        to_string(b.part), b.row);
  }
  out += level.blocks.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

Level load_json(std::string_view text) {
  using nlohmann::json;
  auto schema = [](const std::string& why) { return Error(ErrorCode::SchemaError, why); };
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw schema(fmt::format("level is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array())
    throw schema("level needs a \"blocks\" array");

  auto number = [&](const json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number()) throw schema(fmt::format("\"{}\" must be a number", key));
    return obj[key].get<double>();
  };
  auto string = [&](const json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_string()) throw schema(fmt::format("\"{}\" must be a string", key));
    return obj[key].get<std::string>();
  };

  Level level;
  if (doc.contains("meta")) {
    const auto& m = doc["meta"];
    if (!m.is_object()) throw schema("\"meta\" must be an object");
    level.meta.source = string(m, "source");
    if (!m.contains("seed") || !m["seed"].is_number_unsigned()) throw schema("\"seed\" must be an unsigned integer");
    level.meta.seed = m["seed"].get<std::uint64_t>();
    const auto mode = style_mode_from_string(string(m, "mode"));
    if (!mode) throw schema("unknown \"mode\"");
    level.meta.mode = *mode;
    level.meta.catalog = string(m, "catalog");
    level.meta.generator = string(m, "generator");
    level.meta.ground_y = number(m, "ground_y");
    level.meta.unit_scale = number(m, "unit_scale");
  }
  for (const auto& b : doc["blocks"]) {
    if (!b.is_object()) throw schema("blocks entries must be objects");
    PlacedBlock pb;
    const auto element = element_from_string(string(b, "element"));
    if (!element) throw schema("unknown block \"element\"");
    pb.element = *element;
    pb.model = string(b, "model");
    pb.x = number(b, "x");
    pb.y = number(b, "y");
    pb.w = number(b, "w");
    pb.h = number(b, "h");
    if (!b.contains("tier") || !b["tier"].is_object()) throw schema("block needs a \"tier\" object");
    const auto part = part_from_string(string(b["tier"], "part"));
    if (!part) throw schema("unknown tier \"part\"");
    pb.part = *part;
    if (!b["tier"].contains("row") || !b["tier"]["row"].is_number_integer())
      throw schema("tier \"row\" must be an integer");
    pb.row = b["tier"]["row"].get<int>();
    level.blocks.push_back(std::move(pb));
  }
  check_level(level);
  return level;
}

XmlMapping XmlMapping::from_catalog(const ModelCatalog& c) {
  XmlMapping m;
  for (const auto& model : c.models()) m.blocks[model.id] = {model.xml_type, model.xml_material};
  return m;
}

std::string emit_xml(const Level& level, const XmlMapping& m) {
  const double scale = level.meta.unit_scale;
  std::string out = "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<Level>\n";
  out += fmt::format("  <Camera x=\"{}\" y=\"{}\" minWidth=\"{}\" maxWidth=\"{}\"/>\n", fixed(m.camera_x),
                     fixed(m.camera_y), fixed(m.camera_min_width), fixed(m.camera_max_width));
  out += "  <Birds>\n";
  for (const auto& bird : m.birds) out += fmt::format("    <Bird type=\"{}\"/>\n", xml_escape(bird));
  out += "  </Birds>\n";
  out += fmt::format("  <Slingshot x=\"{}\" y=\"{}\"/>\n", fixed(m.slingshot_x), fixed(m.slingshot_y));
  out += "  <GameObjects>\n";
  for (const auto& b : level.blocks) {
    auto it = m.blocks.find(b.model);
    if (it == m.blocks.end())
      throw Error(ErrorCode::MissingMapping, fmt::format("no XML mapping for model '{}'", b.model));
    out += fmt::format("    <Block type=\"{}\" material=\"{}\" x=\"{}\" y=\"{}\" rotation=\"0\"/>\n",
                       xml_escape(it->second.first), xml_escape(it->second.second),
                       fixed((b.x + b.w / 2.0) * scale), fixed((b.y + b.h / 2.0) * scale));
  }
  out += "  </GameObjects>\n</Level>\n";
  return out;
}

std::string render_svg(const Level& level, const ModelCatalog& c) {
  constexpr double kPad = 1.0;
  constexpr double kPixelsPerUnit = 40.0;
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const auto& b : level.blocks) {
    min_x = std::min(min_x, b.x);
    max_x = std::max(max_x, b.right());
    min_y = std::min(min_y, b.y);
    max_y = std::max(max_y, b.top());
  }
  if (level.blocks.empty()) min_x = max_x = min_y = max_y = 0.0;
  const double width = quantize(max_x - min_x + 2 * kPad);
  const double height = quantize(max_y - min_y + 2 * kPad);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0.00 0.00 {} {}\">\n",
      fixed(width * kPixelsPerUnit), fixed(height * kPixelsPerUnit), fixed(width), fixed(height));
  std::string glyphs;
  for (const auto& b : level.blocks) {
    const ModelRef* model = c.find(b.model);
    if (!model) throw Error(ErrorCode::UnknownModel, fmt::format("model '{}' is not in catalog '{}'", b.model, c.name()));
    // screen y grows downward
    const double sx = b.x - min_x + kPad;
    const double sy = max_y - b.top() + kPad;
    out += fmt::format(
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"#333333\" "
        "stroke-width=\"0.02\"><title>{} {}</title></rect>\n",
        fixed(sx), fixed(sy), fixed(b.w), fixed(b.h), xml_escape(model->fill), to_string(b.element),
        xml_escape(b.model));
    if (!model->glyph.empty())
      glyphs += fmt::format(
          "  <text x=\"{}\" y=\"{}\" font-size=\"0.30\" text-anchor=\"middle\" "
          "dominant-baseline=\"middle\">{}</text>\n",
          fixed(sx + b.w / 2.0), fixed(sy + b.h / 2.0), xml_escape(model->glyph));
  }
  out += glyphs;
  out += "</svg>\n";
  return out;
}

}  // namespace bcg
