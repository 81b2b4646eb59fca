#include "bcg/enumeration.hpp"

#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcg/derivation.hpp"
#include "json.hpp"

namespace bcg {

namespace fs = std::filesystem;

RuleSet load_ruleset(const std::string& dir) {
  using nlohmann::json;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::IoError, fmt::format("'{}' is not a directory", dir));
  const fs::path manifest = fs::path(dir) / "ruleset.json";
  if (!fs::exists(manifest))
    throw Error(ErrorCode::SchemaError, fmt::format("'{}' has no ruleset.json manifest", dir));
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot read '{}'", manifest.string()));
  std::stringstream ss;
  ss << in.rdbuf();

  auto schema = [&](const std::string& why) {
    return Error(ErrorCode::SchemaError, fmt::format("{}: {}", manifest.string(), why));
  };
  json doc;
  try {
    doc = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw schema(e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string())
    throw schema("missing string \"name\"");
  if (!doc.contains("mode") || !doc["mode"].is_string()) throw schema("missing string \"mode\"");
  if (!doc.contains("rules") || !doc["rules"].is_array()) throw schema("missing \"rules\" array");

  RuleSet rs;
  rs.name = doc["name"].get<std::string>();
  const auto mode = style_mode_from_string(doc["mode"].get<std::string>());
  if (!mode) throw schema(fmt::format("unknown mode '{}'", doc["mode"].get<std::string>()));
  rs.mode = *mode;
  if (doc.contains("reference_total")) {
    if (!doc["reference_total"].is_number_unsigned()) throw schema("\"reference_total\" must be a non-negative integer");
    rs.reference_total = doc["reference_total"].get<std::uint64_t>();
  }
  for (const auto& r : doc["rules"]) {
    if (!r.is_object() || !r.contains("id") || !r["id"].is_string() || !r.contains("file") ||
        !r["file"].is_string())
      throw schema("each rule needs string \"id\" and \"file\"");
    Rule rule;
    rule.id = r["id"].get<std::string>();
    rule.file = r["file"].get<std::string>();
    rule.grammar = load_grammar_file((fs::path(dir) / rule.file).string());
    const auto diags = validate_grammar(rule.grammar);
    if (has_errors(diags))
      throw Error(ErrorCode::NonProductive,
                  fmt::format("rule '{}' ({}): {}", rule.id, rule.file, diags.front().message));
    if (!rule.grammar.is_deterministic())
      throw Error(ErrorCode::NotDeterministic,
                  fmt::format("rule '{}' ({}) has a production with several alternatives", rule.id, rule.file));
    rs.rules.push_back(std::move(rule));
  }
  if (rs.rules.empty()) throw schema("rule set has no rules");
  return rs;
}

std::set<ElementKind> elements_used(const Grammar& g) {
  const auto seq = derive_deterministic(g);
  return {seq.begin(), seq.end()};
}

namespace {

std::vector<const ModelRef*> options_or_throw(const ModelCatalog& c, ElementKind k, StyleMode mode,
                                              const std::string& rule_id) {
  auto options = c.admissible(k, mode);
  if (options.empty())
    throw Error(ErrorCode::NoAdmissibleModel,
                fmt::format("rule '{}': no {} model available in {} mode", rule_id, to_string(k),
                            to_string(mode)));
  return options;
}

}  // namespace

LevelSpaceCount count_closed_form(const RuleSet& rs, const ModelCatalog& c) {
  LevelSpaceCount out;
  for (const auto& rule : rs.rules) {
    RuleCount rc{rule.id, elements_used(rule.grammar), 1};
    for (auto k : rc.elements) rc.count *= options_or_throw(c, k, rs.mode, rule.id).size();
    out.total += rc.count;
    out.per_rule.push_back(std::move(rc));
  }
  return out;
}

LevelEnumerator::LevelEnumerator(const RuleSet& rs, const ModelCatalog& c, std::uint64_t cap) : cap_(cap) {
  for (const auto& rule : rs.rules) {
    RuleSpace space;
    space.id = rule.id;
    for (auto k : elements_used(rule.grammar)) {
      space.kinds.push_back(k);
      space.options.push_back(options_or_throw(c, k, rs.mode, rule.id));
    }
    spaces_.push_back(std::move(space));
  }
}

// Moves to the next odometer position; false when every rule is exhausted.
bool LevelEnumerator::advance() {
  if (!started_) {
    started_ = true;
    rule_ = 0;
    if (spaces_.empty()) return false;
    digits_.assign(spaces_[0].kinds.size(), 0);
    return true;
  }
  const auto& space = spaces_[rule_];
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < space.options[i].size()) return true;
    digits_[i] = 0;
  }
  if (++rule_ >= spaces_.size()) return false;
  digits_.assign(spaces_[rule_].kinds.size(), 0);
  return true;
}

std::optional<EnumeratedLevel> LevelEnumerator::next() {
  if (started_ && rule_ >= spaces_.size()) return std::nullopt;
  if (yielded_ >= cap_) {
    // peek: is anything left?
    const auto saved_rule = rule_;
    const auto saved_digits = digits_;
    const bool saved_started = started_;
    const bool more = advance();
    rule_ = saved_rule;
    digits_ = saved_digits;
    started_ = saved_started;
    if (more) throw Error(ErrorCode::CapExceeded, fmt::format("level space exceeds cap {}", cap_));
    rule_ = spaces_.size();
    return std::nullopt;
  }
  if (!advance()) return std::nullopt;
  const auto& space = spaces_[rule_];
  EnumeratedLevel level{space.id, {}};
  for (std::size_t i = 0; i < space.kinds.size(); ++i)
    level.assignment.emplace(space.kinds[i], *space.options[i][digits_[i]]);
  ++yielded_;
  return level;
}

std::vector<EnumeratedLevel> enumerate_levels(const RuleSet& rs, const ModelCatalog& c, std::uint64_t cap) {
  std::vector<EnumeratedLevel> out;
  LevelEnumerator e(rs, c, cap);
  while (auto level = e.next()) out.push_back(std::move(*level));
  return out;
}

}  // namespace bcg
