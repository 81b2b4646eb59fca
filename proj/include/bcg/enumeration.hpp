#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bcg/grammar.hpp"
#include "bcg/style.hpp"

namespace bcg {

/// One fixed building structure: a grammar with a single alternative per
/// production.
struct Rule {
  std::string id;
  Grammar grammar;
  std::string file;  // source file name, informational
};

struct RuleSet {
  std::string name;
  StyleMode mode = StyleMode::PureChinese;
  std::vector<Rule> rules;
  /// Published total for this bundle, if the manifest records one.
  std::optional<std::uint64_t> reference_total;
};

/// Loads `<dir>/ruleset.json`:
///   {"name", "mode", "rules": [{"id", "file"}], "reference_total"?}
/// Each rule file must be a valid deterministic grammar.
RuleSet load_ruleset(const std::string& dir);

std::set<ElementKind> elements_used(const Grammar& g);

struct RuleCount {
  std::string rule_id;
  std::set<ElementKind> elements;
  std::uint64_t count = 0;
};

struct LevelSpaceCount {
  std::vector<RuleCount> per_rule;  // rule order
  std::uint64_t total = 0;
};

/// Per rule: product over used element kinds of the admissible model count
/// under the rule set's mode. Total is the sum over rules.
LevelSpaceCount count_closed_form(const RuleSet& rs, const ModelCatalog& c);

struct EnumeratedLevel {
  std::string rule_id;
  StyleAssignment assignment;
};

/// Direct cartesian walk over (rule, assignment) pairs: rule order, then
/// element-kind order (first kind most significant), then catalog order.
/// After `cap` items, asking for another throws CapExceeded if the space
/// is not exhausted.
class LevelEnumerator {
 public:
  LevelEnumerator(const RuleSet& rs, const ModelCatalog& c, std::uint64_t cap);

  std::optional<EnumeratedLevel> next();
  std::uint64_t yielded() const { return yielded_; }

 private:
  struct RuleSpace {
    std::string id;
    std::vector<ElementKind> kinds;
    std::vector<std::vector<const ModelRef*>> options;
  };

  bool advance();

  std::vector<RuleSpace> spaces_;
  std::uint64_t cap_;
  std::uint64_t yielded_ = 0;
  std::size_t rule_ = 0;
  std::vector<std::size_t> digits_;
  bool started_ = false;
};

/// Collects the whole stream; propagates CapExceeded.
std::vector<EnumeratedLevel> enumerate_levels(const RuleSet& rs, const ModelCatalog& c, std::uint64_t cap);

}  // namespace bcg
