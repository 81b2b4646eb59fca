#pragma once

#include <cstddef>
#include <cstdint>
#include <set>

#include "bcg/grammar.hpp"

namespace bcg {

/// Termination policy for random sampling of recursive productions.
struct DerivationLimits {
  std::size_t max_expansions = 256;
  std::size_t max_sequence_length = 64;
  /// Weight multiplier applied per nesting level to alternatives that
  /// mention their own left-hand side.
  double recursion_dampening = 0.5;

  /// Throws InvalidArgument when a field is out of range.
  void check() const;
};

/// A derived building split into its three vertical parts.
struct BuildingPlan {
  ElementSequence base;
  ElementSequence main;
  ElementSequence roofs;
  ParseTree source_tree;

  ElementSequence elements() const;
  /// Distinct element kinds present, in canonical order.
  std::vector<ElementKind> kinds() const;
};

/// Unique leftmost derivation of a grammar whose productions each have a
/// single alternative.
ParseTree derive_deterministic_tree(const Grammar& g);
ElementSequence derive_deterministic(const Grammar& g);

/// Seeded sampling. Alternatives are weighted uniformly except recursive
/// ones, whose weight is `recursion_dampening^depth`, depth being the
/// number of enclosing expansions of the same non-terminal. Once another
/// sampled step could exceed `max_expansions` or push the minimal
/// completed length past `max_sequence_length`, the rest of the derivation
/// follows cheapest alternatives only.
ParseTree derive_random_tree(const Grammar& g, std::uint64_t seed, const DerivationLimits& limits = {});
ElementSequence derive_random(const Grammar& g, std::uint64_t seed, const DerivationLimits& limits = {});

struct DeriveAllOptions {
  std::size_t frontier_cap = 1'000'000;
};

inline constexpr std::size_t kDeriveAllMaxLength = 20;

/// Every derivable sequence of length <= max_len, by breadth-first
/// leftmost expansion of sentential forms with minimal-yield pruning.
std::set<ElementSequence> derive_all(const Grammar& g, std::size_t max_len,
                                     const DeriveAllOptions& options = {});

/// Splits a `<building>` tree into base / main / roofs by its three
/// children. Throws MalformedTree when the shape does not match.
BuildingPlan to_building_plan(const ParseTree& tree);

}  // namespace bcg
