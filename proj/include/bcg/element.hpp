#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace bcg {

/// The seven building elements. Declaration order is the canonical
/// element-kind order used for style draws and enumeration.
enum class ElementKind { Wall, Floor, Beam, Window, Door, Roof, Toproof };

inline constexpr std::array<ElementKind, 7> kAllElements = {
    ElementKind::Wall, ElementKind::Floor, ElementKind::Beam,   ElementKind::Window,
    ElementKind::Door, ElementKind::Roof,  ElementKind::Toproof};

/// Vertical band of a building, bottom to top.
enum class Part { Base, Main, Roofs };

using ElementSequence = std::vector<ElementKind>;

std::string_view to_string(ElementKind e);
std::optional<ElementKind> element_from_string(std::string_view name);

std::string_view to_string(Part p);
std::optional<Part> part_from_string(std::string_view name);

/// Wall, floor and beam are shared between styles.
constexpr bool is_common_kind(ElementKind e) {
  return e == ElementKind::Wall || e == ElementKind::Floor || e == ElementKind::Beam;
}

constexpr Part part_of(ElementKind e) {
  switch (e) {
    case ElementKind::Wall:
    case ElementKind::Floor:
      return Part::Base;
    case ElementKind::Beam:
    case ElementKind::Window:
    case ElementKind::Door:
      return Part::Main;
    case ElementKind::Roof:
    case ElementKind::Toproof:
      return Part::Roofs;
  }
  return Part::Main;
}

std::string join(const ElementSequence& seq, std::string_view sep = " ");

}  // namespace bcg
