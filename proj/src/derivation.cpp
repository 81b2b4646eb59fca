#include "bcg/derivation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <unordered_set>

#include "bcg/prng.hpp"

namespace bcg {

void DerivationLimits::check() const {
  if (max_expansions < 1) throw Error(ErrorCode::InvalidArgument, "max_expansions must be >= 1");
  if (max_sequence_length < 1)
    throw Error(ErrorCode::InvalidArgument, "max_sequence_length must be >= 1");
  if (!(recursion_dampening > 0.0 && recursion_dampening <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "recursion_dampening must lie in (0, 1]");
}

ElementSequence BuildingPlan::elements() const {
  ElementSequence out = base;
  out.insert(out.end(), main.begin(), main.end());
  out.insert(out.end(), roofs.begin(), roofs.end());
  return out;
}

std::vector<ElementKind> BuildingPlan::kinds() const {
  std::vector<ElementKind> out;
  const auto all = elements();
  for (auto k : kAllElements)
    if (std::find(all.begin(), all.end(), k) != all.end()) out.push_back(k);
  return out;
}

namespace {

std::size_t start_index_or_throw(const Grammar& g, const YieldTable& yields) {
  const auto start = g.index_of(g.start());
  if (start == Grammar::npos || yields.min_yield[start] == YieldTable::kInfinite)
    throw Error(ErrorCode::NonProductive,
                fmt::format("start symbol <{}> derives no finite sequence", g.start()));
  for (const auto& p : g.productions())
    for (const auto& alt : p.alternatives)
      for (const auto& s : alt)
        if (!s.is_terminal() && !g.find(s.name))
          throw Error(ErrorCode::NonProductive, fmt::format("<{}> has no production", s.name));
  return start;
}

bool mentions(const Alternative& alt, const std::string& lhs) {
  return std::any_of(alt.begin(), alt.end(),
                     [&](const Symbol& s) { return !s.is_terminal() && s.name == lhs; });
}

class Sampler {
 public:
  Sampler(const Grammar& g, std::uint64_t seed, const DerivationLimits& limits)
      : g_(g), yields_(compute_yields(g)), rng_(seed), limits_(limits),
        depth_(g.productions().size(), 0) {}

  ParseTree run() {
    const auto start = start_index_or_throw(g_, yields_);
    pending_ = yields_.min_yield[start];
    return expand(start);
  }

 private:
  std::size_t choose(std::size_t nt) {
    const auto& prod = g_.productions()[nt];
    if (!cheapest_mode_ && expansions_ >= limits_.max_expansions) cheapest_mode_ = true;
    if (!cheapest_mode_) {
      std::vector<double> weights(prod.alternatives.size(), 1.0);
      double total = 0.0;
      for (std::size_t a = 0; a < weights.size(); ++a) {
        if (mentions(prod.alternatives[a], prod.lhs))
          for (std::size_t d = 0; d < depth_[nt]; ++d) weights[a] *= limits_.recursion_dampening;
        // non-productive alternatives can never complete
        if (yields_.yield_of(g_, prod.alternatives[a]) == YieldTable::kInfinite) weights[a] = 0.0;
        total += weights[a];
      }
      const double u = rng_.uniform() * total;
      std::size_t pick = weights.size() - 1;
      double acc = 0.0;
      for (std::size_t a = 0; a < weights.size(); ++a) {
        acc += weights[a];
        if (weights[a] > 0.0 && u < acc) {
          pick = a;
          break;
        }
      }
      while (weights[pick] == 0.0) --pick;
      const std::size_t projected = emitted_ + pending_ - yields_.min_yield[nt] +
                                    yields_.yield_of(g_, prod.alternatives[pick]);
      if (projected <= limits_.max_sequence_length) return pick;
      cheapest_mode_ = true;
    }
    return yields_.cheapest[nt];
  }

  ParseTree expand(std::size_t nt) {
    const auto& prod = g_.productions()[nt];
    const std::size_t a = choose(nt);
    const auto& alt = prod.alternatives[a];
    ++expansions_;
    pending_ = pending_ - yields_.min_yield[nt] + yields_.yield_of(g_, alt);

    ParseTree t{Symbol::nonterminal(prod.lhs), static_cast<int>(a), {}};
    t.children.reserve(alt.size());
    ++depth_[nt];
    for (const auto& s : alt) {
      if (s.is_terminal()) {
        ++emitted_;
        --pending_;
        t.children.push_back(ParseTree{s, -1, {}});
      } else {
        t.children.push_back(expand(g_.index_of(s.name)));
      }
    }
    --depth_[nt];
    return t;
  }

  const Grammar& g_;
  YieldTable yields_;
  Xorshift64Star rng_;
  DerivationLimits limits_;
  std::vector<std::size_t> depth_;
  std::size_t expansions_ = 0;
  std::size_t emitted_ = 0;
  std::size_t pending_ = 0;  // minimal yield of symbols not yet expanded
  bool cheapest_mode_ = false;
};

ParseTree expand_deterministic(const Grammar& g, std::size_t nt) {
  const auto& prod = g.productions()[nt];
  ParseTree t{Symbol::nonterminal(prod.lhs), 0, {}};
  for (const auto& s : prod.alternatives.front())
    t.children.push_back(s.is_terminal() ? ParseTree{s, -1, {}}
                                         : expand_deterministic(g, g.index_of(s.name)));
  return t;
}

}  // namespace

ParseTree derive_deterministic_tree(const Grammar& g) {
  for (const auto& p : g.productions())
    if (p.alternatives.size() != 1)
      throw Error(ErrorCode::NotDeterministic,
                  fmt::format("<{}> has {} alternatives", p.lhs, p.alternatives.size()), p.loc);
  const auto start = start_index_or_throw(g, compute_yields(g));
  return expand_deterministic(g, start);
}

ElementSequence derive_deterministic(const Grammar& g) { return frontier(derive_deterministic_tree(g)); }

ParseTree derive_random_tree(const Grammar& g, std::uint64_t seed, const DerivationLimits& limits) {
  limits.check();
  return Sampler(g, seed, limits).run();
}

ElementSequence derive_random(const Grammar& g, std::uint64_t seed, const DerivationLimits& limits) {
  return frontier(derive_random_tree(g, seed, limits));
}

std::set<ElementSequence> derive_all(const Grammar& g, std::size_t max_len,
                                     const DeriveAllOptions& options) {
  if (max_len > kDeriveAllMaxLength)
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("derive_all max_len {} exceeds {}", max_len, kDeriveAllMaxLength));
  std::set<ElementSequence> out;
  if (max_len == 0) return out;

  const auto yields = compute_yields(g);
  const auto start = g.index_of(g.start());
  if (start == Grammar::npos || yields.min_yield[start] == YieldTable::kInfinite) return out;

  // Symbols are encoded as small integers: 0..6 terminals, 7+i production i.
  constexpr std::uint16_t kNtBase = 7;
  using Form = std::vector<std::uint16_t>;
  struct FormHash {
    std::size_t operator()(const Form& f) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto v : f) h = (h ^ v) * 1099511628211ULL;
      return h;
    }
  };

  std::vector<std::vector<std::pair<Form, std::size_t>>> encoded(g.productions().size());
  for (std::size_t i = 0; i < g.productions().size(); ++i)
    for (const auto& alt : g.productions()[i].alternatives) {
      const auto y = yields.yield_of(g, alt);
      if (y == YieldTable::kInfinite) continue;
      Form f;
      for (const auto& s : alt)
        f.push_back(s.is_terminal() ? static_cast<std::uint16_t>(s.element())
                                    : static_cast<std::uint16_t>(kNtBase + g.index_of(s.name)));
      encoded[i].emplace_back(std::move(f), y);
    }

  auto bound = [&](const Form& f) {
    std::size_t total = 0;
    for (auto v : f) total += v < kNtBase ? 1 : yields.min_yield[v - kNtBase];
    return total;
  };

  std::unordered_set<Form, FormHash> seen;
  std::vector<Form> frontier{Form{static_cast<std::uint16_t>(kNtBase + start)}};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Form> next;
    for (const auto& form : frontier) {
      auto it = std::find_if(form.begin(), form.end(), [](auto v) { return v >= kNtBase; });
      if (it == form.end()) {
        ElementSequence seq;
        for (auto v : form) seq.push_back(kAllElements[v]);
        out.insert(std::move(seq));
        continue;
      }
      const std::size_t pos = static_cast<std::size_t>(it - form.begin());
      for (const auto& [alt, y] : encoded[*it - kNtBase]) {
        Form f;
        f.reserve(form.size() + alt.size() - 1);
        f.insert(f.end(), form.begin(), form.begin() + static_cast<std::ptrdiff_t>(pos));
        f.insert(f.end(), alt.begin(), alt.end());
        f.insert(f.end(), form.begin() + static_cast<std::ptrdiff_t>(pos) + 1, form.end());
        if (bound(f) > max_len) continue;
        if (!seen.insert(f).second) continue;
        next.push_back(std::move(f));
        if (seen.size() > options.frontier_cap)
          throw Error(ErrorCode::LimitExceeded,
                      fmt::format("more than {} sentential forms", options.frontier_cap));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

BuildingPlan to_building_plan(const ParseTree& tree) {
  auto malformed = [](const std::string& why) { return Error(ErrorCode::MalformedTree, why); };
  if (tree.symbol.is_terminal() || tree.symbol.name != "building")
    throw malformed(fmt::format("root is {}, expected <building>", to_string(tree.symbol)));
  static const std::array<std::string_view, 3> kParts = {"base", "main", "roofs"};
  if (tree.children.size() != 3)
    throw malformed("<building> must have exactly three children");
  for (std::size_t i = 0; i < 3; ++i)
    if (tree.children[i].symbol.is_terminal() || tree.children[i].symbol.name != kParts[i])
      throw malformed(fmt::format("child {} is {}, expected <{}>", i,
                                  to_string(tree.children[i].symbol), kParts[i]));

  BuildingPlan plan{frontier(tree.children[0]), frontier(tree.children[1]),
                    frontier(tree.children[2]), tree};

  auto check_part = [&](const ElementSequence& seq, Part part) {
    if (seq.empty()) throw malformed(fmt::format("empty {} part", to_string(part)));
    for (auto e : seq)
      if (part_of(e) != part)
        throw malformed(fmt::format("{} cannot appear in the {} part", to_string(e), to_string(part)));
  };
  check_part(plan.base, Part::Base);
  check_part(plan.main, Part::Main);
  check_part(plan.roofs, Part::Roofs);
  if (plan.main.front() != ElementKind::Beam || plan.main.back() != ElementKind::Beam)
    throw malformed("main part must start and end with beam");
  for (std::size_t i = 0; i + 1 < plan.roofs.size(); ++i)
    if (plan.roofs[i] == ElementKind::Toproof) throw malformed("toproof must be the last roof element");
  return plan;
}

}  // namespace bcg
