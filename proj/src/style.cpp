#include "bcg/style.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "bcg/prng.hpp"
#include "json.hpp"

namespace bcg {

std::string_view to_string(StyleTag s) {
  switch (s) {
    case StyleTag::Chinese: return "chinese";
    case StyleTag::Japanese: return "japanese";
    case StyleTag::Common: return "common";
  }
  return "common";
}

std::optional<StyleTag> style_tag_from_string(std::string_view s) {
  if (s == "chinese") return StyleTag::Chinese;
  if (s == "japanese") return StyleTag::Japanese;
  if (s == "common") return StyleTag::Common;
  return std::nullopt;
}

std::string_view to_string(StyleMode m) {
  switch (m) {
    case StyleMode::PureChinese: return "chinese";
    case StyleMode::PureJapanese: return "japanese";
    case StyleMode::Composite: return "composite";
  }
  return "composite";
}

std::optional<StyleMode> style_mode_from_string(std::string_view s) {
  if (s == "chinese" || s == "PureChinese") return StyleMode::PureChinese;
  if (s == "japanese" || s == "PureJapanese") return StyleMode::PureJapanese;
  if (s == "composite" || s == "Composite") return StyleMode::Composite;
  return std::nullopt;
}

ModelCatalog::ModelCatalog(std::string name, std::vector<ModelRef> models)
    : name_(std::move(name)), models_(std::move(models)) {
  std::set<std::string> ids;
  for (const auto& m : models_) {
    if (!ids.insert(m.id).second)
      throw Error(ErrorCode::DuplicateId, fmt::format("duplicate model id '{}'", m.id));
    if (m.style == StyleTag::Common && !is_common_kind(m.element))
      throw Error(ErrorCode::IllegalCommonStyle,
                  fmt::format("model '{}': {} models must be chinese or japanese", m.id,
                              to_string(m.element)));
    if (!(m.width > 0.0) || !(m.height > 0.0))
      throw Error(ErrorCode::NonPositiveSize, fmt::format("model '{}' has a non-positive size", m.id));
  }
}

const ModelRef* ModelCatalog::find(std::string_view id) const {
  auto it = std::find_if(models_.begin(), models_.end(), [&](const ModelRef& m) { return m.id == id; });
  return it == models_.end() ? nullptr : &*it;
}

std::vector<const ModelRef*> ModelCatalog::admissible(ElementKind element, StyleMode mode) const {
  std::vector<const ModelRef*> out;
  for (const auto& m : models_) {
    if (m.element != element) continue;
    const bool ok = mode == StyleMode::Composite || m.style == StyleTag::Common ||
                    (mode == StyleMode::PureChinese && m.style == StyleTag::Chinese) ||
                    (mode == StyleMode::PureJapanese && m.style == StyleTag::Japanese);
    if (ok) out.push_back(&m);
  }
  return out;
}

std::size_t ModelCatalog::count(ElementKind element, StyleTag style) const {
  return static_cast<std::size_t>(std::count_if(models_.begin(), models_.end(), [&](const ModelRef& m) {
    return m.element == element && m.style == style;
  }));
}

ModelCatalog parse_catalog(std::string_view json_text) {
  using nlohmann::json;
  auto schema = [](const std::string& why) { return Error(ErrorCode::SchemaError, why); };
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw schema(fmt::format("catalog is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string() ||
      !doc.contains("models") || !doc["models"].is_array())
    throw schema("catalog needs a string \"name\" and a \"models\" array");

  auto str_field = [&](const json& m, const char* key, bool required) -> std::string {
    if (!m.contains(key)) {
      if (required) throw schema(fmt::format("model is missing \"{}\"", key));
      return {};
    }
    if (!m[key].is_string()) throw schema(fmt::format("\"{}\" must be a string", key));
    return m[key].get<std::string>();
  };
  auto num_field = [&](const json& m, const char* key) -> double {
    if (!m.contains(key) || !m[key].is_number())
      throw schema(fmt::format("model needs numeric \"{}\"", key));
    return m[key].get<double>();
  };

  std::vector<ModelRef> models;
  for (const auto& m : doc["models"]) {
    if (!m.is_object()) throw schema("models entries must be objects");
    ModelRef r;
    r.id = str_field(m, "id", true);
    const auto element = element_from_string(str_field(m, "element", true));
    if (!element) throw schema(fmt::format("model '{}' has an unknown element", r.id));
    r.element = *element;
    const auto style = style_tag_from_string(str_field(m, "style", true));
    if (!style) throw schema(fmt::format("model '{}' has an unknown style", r.id));
    r.style = *style;
    r.width = num_field(m, "width");
    r.height = num_field(m, "height");
    r.fill = str_field(m, "fill", true);
    r.glyph = str_field(m, "glyph", false);
    r.xml_type = str_field(m, "xml_type", true);
    r.xml_material = str_field(m, "xml_material", true);
    models.push_back(std::move(r));
  }
  return ModelCatalog(doc["name"].get<std::string>(), std::move(models));
}

ModelCatalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot read catalog '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("BCG_CATALOG"); env && *env) return env;
  return std::string(BCG_DATA_DIR) + "/catalog/default.json";
}

StyleAssignment assign_styles(const BuildingPlan& plan, const ModelCatalog& catalog, StyleMode mode,
                              std::uint64_t seed) {
  Xorshift64Star rng(seed);
  StyleAssignment out;
  for (auto kind : plan.kinds()) {
    const auto options = catalog.admissible(kind, mode);
    if (options.empty())
      throw Error(ErrorCode::NoAdmissibleModel,
                  fmt::format("no {} model available in {} mode", to_string(kind), to_string(mode)));
    if (mode != StyleMode::Composite) {
      out.emplace(kind, *options[rng.below(options.size())]);
      continue;
    }
    std::vector<StyleTag> styles;
    for (auto s : {StyleTag::Chinese, StyleTag::Japanese, StyleTag::Common})
      if (std::any_of(options.begin(), options.end(), [&](const ModelRef* m) { return m->style == s; }))
        styles.push_back(s);
    const StyleTag style = styles[rng.below(styles.size())];
    std::vector<const ModelRef*> within;
    for (const auto* m : options)
      if (m->style == style) within.push_back(m);
    out.emplace(kind, *within[rng.below(within.size())]);
  }
  return out;
}

std::string_view to_string(AssignmentIssue i) {
  switch (i) {
    case AssignmentIssue::MissingElement: return "MissingElement";
    case AssignmentIssue::ExtraElement: return "ExtraElement";
    case AssignmentIssue::KindMismatch: return "KindMismatch";
    case AssignmentIssue::PurityViolation: return "PurityViolation";
  }
  return "?";
}

std::vector<AssignmentDiagnostic> validate_assignment(const std::vector<ElementKind>& kinds,
                                                      const StyleAssignment& a, StyleMode mode) {
  std::vector<AssignmentDiagnostic> out;
  for (auto k : kinds)
    if (!a.contains(k))
      out.push_back({AssignmentIssue::MissingElement, k,
                     fmt::format("no model assigned for {}", to_string(k))});
  for (const auto& [k, m] : a) {
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end())
      out.push_back({AssignmentIssue::ExtraElement, k,
                     fmt::format("{} is assigned but absent from the plan", to_string(k))});
    if (m.element != k)
      out.push_back({AssignmentIssue::KindMismatch, k,
                     fmt::format("model '{}' is a {}, assigned to {}", m.id, to_string(m.element),
                                 to_string(k))});
    const bool pure_violation =
        (mode == StyleMode::PureChinese && m.style == StyleTag::Japanese) ||
        (mode == StyleMode::PureJapanese && m.style == StyleTag::Chinese);
    if (pure_violation)
      out.push_back({AssignmentIssue::PurityViolation, k,
                     fmt::format("{} model '{}' is {} in {} mode", to_string(k), m.id,
                                 to_string(m.style), to_string(mode))});
  }
  return out;
}

std::vector<AssignmentDiagnostic> validate_assignment(const BuildingPlan& plan,
                                                      const StyleAssignment& a, StyleMode mode) {
  return validate_assignment(plan.kinds(), a, mode);
}

}  // namespace bcg
