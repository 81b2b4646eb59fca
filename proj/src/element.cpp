#include "bcg/element.hpp"

#include <string>

namespace bcg {

namespace {
constexpr std::array<std::string_view, 7> kNames = {"wall", "floor", "beam",   "window",
                                                    "door", "roof",  "toproof"};
}

std::string_view to_string(ElementKind e) { return kNames[static_cast<std::size_t>(e)]; }

std::optional<ElementKind> element_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kAllElements[i];
  return std::nullopt;
}

std::string_view to_string(Part p) {
  switch (p) {
    case Part::Base:
      return "base";
    case Part::Main:
      return "main";
    case Part::Roofs:
      return "roofs";
  }
  return "main";
}

std::optional<Part> part_from_string(std::string_view name) {
  if (name == "base") return Part::Base;
  if (name == "main") return Part::Main;
  if (name == "roofs") return Part::Roofs;
  return std::nullopt;
}

std::string join(const ElementSequence& seq, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += sep;
    out += to_string(seq[i]);
  }
  return out;
}

}  // namespace bcg
