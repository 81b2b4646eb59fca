#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcg/derivation.hpp"
#include "bcg/element.hpp"

namespace bcg {

enum class StyleTag { Chinese, Japanese, Common };
enum class StyleMode { PureChinese, PureJapanese, Composite };

std::string_view to_string(StyleTag s);
std::optional<StyleTag> style_tag_from_string(std::string_view s);
std::string_view to_string(StyleMode m);
/// Accepts "chinese" / "japanese" / "composite" (also the enum spellings).
std::optional<StyleMode> style_mode_from_string(std::string_view s);

struct ModelRef {
  std::string id;
  ElementKind element = ElementKind::Wall;
  StyleTag style = StyleTag::Common;
  double width = 1.0;
  double height = 1.0;
  std::string fill;
  std::string glyph;  // empty when absent
  std::string xml_type;
  std::string xml_material;

  bool operator==(const ModelRef&) const = default;
};

class ModelCatalog {
 public:
  ModelCatalog() = default;
  /// Checks every ModelRef invariant; throws DuplicateId,
  /// IllegalCommonStyle or NonPositiveSize.
  ModelCatalog(std::string name, std::vector<ModelRef> models);

  const std::string& name() const { return name_; }
  const std::vector<ModelRef>& models() const { return models_; }

  const ModelRef* find(std::string_view id) const;

  /// Models usable for `element` under `mode`, in catalog order. Pure modes
  /// admit the matching style plus Common; composite admits every style.
  std::vector<const ModelRef*> admissible(ElementKind element, StyleMode mode) const;

  std::size_t count(ElementKind element, StyleTag style) const;

 private:
  std::string name_;
  std::vector<ModelRef> models_;
};

/// Parses a catalog document:
///   {"name": "...", "models": [{"id","element","style","width","height",
///     "fill","glyph"?,"xml_type","xml_material"}]}
ModelCatalog parse_catalog(std::string_view json_text);
ModelCatalog load_catalog(const std::string& path);

/// Path of the catalog shipped with the project.
std::string default_catalog_path();

/// One model per element kind present in the plan.
using StyleAssignment = std::map<ElementKind, ModelRef>;

/// Draws one model per element kind in canonical kind order with the
/// project PRNG. Composite mode draws the style first (among styles with
/// an admissible model, order Chinese, Japanese, Common), then the model.
StyleAssignment assign_styles(const BuildingPlan& plan, const ModelCatalog& catalog, StyleMode mode,
                              std::uint64_t seed);

enum class AssignmentIssue { MissingElement, ExtraElement, KindMismatch, PurityViolation };

struct AssignmentDiagnostic {
  AssignmentIssue issue;
  ElementKind element;
  std::string message;

  bool operator==(const AssignmentDiagnostic& o) const {
    return issue == o.issue && element == o.element;
  }
};

std::string_view to_string(AssignmentIssue i);

std::vector<AssignmentDiagnostic> validate_assignment(const std::vector<ElementKind>& kinds,
                                                      const StyleAssignment& a, StyleMode mode);
std::vector<AssignmentDiagnostic> validate_assignment(const BuildingPlan& plan,
                                                      const StyleAssignment& a, StyleMode mode);

}  // namespace bcg
