// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "bcg/cli.hpp"
#include "bcg/emit.hpp"
#include "bcg/enumeration.hpp"
#include "oracles.hpp"

using namespace bcg;
using namespace bcg::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = unbounded
  std::function<void(Outcome&)> body;
};

std::size_t occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

std::pair<int, std::string> cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str() + err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("bcg_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void canonical_fidelity(Outcome& o) {
  const Grammar g = canonical_grammar();
  o.require(g.productions().size() == 6, "expected 6 productions");
  const std::vector<std::size_t> counts = {1, 3, 1, 4, 3, 2};
  for (std::size_t i = 0; i < std::min<std::size_t>(6, g.productions().size()); ++i)
    o.require(g.productions()[i].alternatives.size() == counts[i],
              fmt::format("production {} has {} alternatives", i, g.productions()[i].alternatives.size()));
  o.require(parse_grammar(format_grammar(g)) == g, "format/reparse differs");
}

void demo_reproduction(Outcome& o) {
  const Grammar demo = demo_grammar();
  const ElementSequence expected = demo_sequence();
  const auto derived = derive_deterministic(demo);
  o.require(derived == expected, "derived sequence differs: " + join(derived));
  o.require(recognize(canonical_grammar(), derived).has_value(), "canonical grammar rejects the demo sequence");

  const auto catalog = load_catalog(default_catalog_path());
  const auto gen = generate_level(demo, catalog, StyleMode::PureChinese, 7, {}, {}, "demo_pagoda.bcg");
  o.require(gen.plan.base.size() == 2 && gen.plan.main.size() == 11 && gen.plan.roofs.size() == 3,
            "part sizes differ from 2 / 11 / 3");
  o.require(occurrences(render_svg(gen.level, catalog), "<rect ") == 16, "SVG does not contain 16 blocks");
  o.require(check_support(gen.level).stable, "demo level is not statically supported");
}

void duality(Outcome& o) {
  const Grammar g = canonical_grammar();
  std::size_t failures = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    if (!recognize(g, derive_random(g, seed))) ++failures;
  o.require(failures == 0, fmt::format("{} derivations rejected", failures));
}

void completeness(Outcome& o) {
  const Grammar g = canonical_grammar();
  const auto derived = derive_all(g, 8);
  const auto oracle = language_by_fixed_point(g, 8);
  o.require(!derived.empty(), "empty language");
  o.require(derived == oracle, fmt::format("derive_all has {} sequences, oracle {}", derived.size(), oracle.size()));
  for (const auto& s : oracle) o.require(recognize(g, s).has_value(), "recognizer rejects " + join(s));
}

void count_equivalence(Outcome& o) {
  const auto catalog = load_catalog(default_catalog_path());
  std::vector<RuleSet> sets;
  for (const auto* name : {"chinese", "japanese", "composite"})
    sets.push_back(load_ruleset(data_path(std::string("rulesets/") + name)));
  std::mt19937_64 rng(20160207);
  for (int i = 0; i < 50; ++i) sets.push_back(random_ruleset(rng, static_cast<StyleMode>(i % 3)));

  for (const auto& rs : sets) {
    const auto total = count_closed_form(rs, catalog).total;
    LevelEnumerator e(rs, catalog, total);
    std::set<std::pair<std::string, std::vector<std::string>>> seen;
    std::uint64_t n = 0;
    while (auto level = e.next()) {
      ++n;
      std::vector<std::string> ids;
      for (const auto& [kind, model] : level->assignment) ids.push_back(model.id);
      seen.insert({level->rule_id, ids});
      const auto& rule = *std::find_if(rs.rules.begin(), rs.rules.end(),
                                       [&](const Rule& r) { return r.id == level->rule_id; });
      const auto used = elements_used(rule.grammar);
      o.require(validate_assignment(std::vector<ElementKind>(used.begin(), used.end()), level->assignment, rs.mode)
                    .empty(),
                "invalid enumerated assignment in " + rs.name);
    }
    o.require(n == total, fmt::format("{}: stream {} vs closed form {}", rs.name, n, total));
    o.require(seen.size() == n, rs.name + ": duplicate assignments");
  }
}

void reference_count_reporting(Outcome& o) {
  const std::pair<const char*, const char*> expected[] = {
      {"chinese", "reference total: 567"}, {"japanese", "reference total: 540"}, {"composite", "reference total: 10125"}};
  const auto catalog = load_catalog(default_catalog_path());
  for (const auto& [set, reference] : expected) {
    const auto [status, text] = cli({"count", data_path(std::string("rulesets/") + set)});
    o.require(status == kExitOk, fmt::format("count {} exited {}", set, status));
    o.require(text.find(reference) != std::string::npos, fmt::format("{}: '{}' not printed", set, reference));
    const auto computed = count_closed_form(load_ruleset(data_path(std::string("rulesets/") + set)), catalog).total;
    o.require(text.find(fmt::format("computed total: {}", computed)) != std::string::npos,
              fmt::format("{}: computed total not printed", set));
    o.require(text.find("status: DIVERGES") != std::string::npos || text.find("status: MATCHES") != std::string::npos,
              fmt::format("{}: no divergence marker", set));
  }
}

void catalog_conformance(Outcome& o) {
  const auto c = load_catalog(default_catalog_path());
  for (auto style : {StyleTag::Chinese, StyleTag::Japanese}) {
    o.require(c.count(ElementKind::Window, style) == 3, "window count");
    o.require(c.count(ElementKind::Door, style) == 3, "door count");
    o.require(c.count(ElementKind::Roof, style) == 3, "roof count");
    o.require(c.count(ElementKind::Toproof, style) == 2, "toproof count");
  }
  o.require(c.count(ElementKind::Wall, StyleTag::Common) == 3, "wall count");
  o.require(c.count(ElementKind::Floor, StyleTag::Common) == 2, "floor count");
  o.require(c.count(ElementKind::Beam, StyleTag::Common) == 1, "beam count");
  for (auto k : {ElementKind::Wall, ElementKind::Floor, ElementKind::Beam})
    o.require(c.count(k, StyleTag::Chinese) + c.count(k, StyleTag::Japanese) == 0, "styled common element");
  o.require(c.models().size() == 28, fmt::format("catalog has {} models", c.models().size()));
}

void style_consistency(Outcome& o) {
  const auto c = load_catalog(default_catalog_path());
  const Grammar g = canonical_grammar();
  std::mt19937_64 rng(3);
  std::size_t violations = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const ParseTree tree =
        i % 2 ? derive_random_tree(g, rng()) : derive_deterministic_tree(parse_grammar(random_rule_text(rng)));
    const auto plan = to_building_plan(tree);
    const auto mode = static_cast<StyleMode>(rng() % 3);
    const auto a = assign_styles(plan, c, mode, rng());
    if (!validate_assignment(plan, a, mode).empty()) ++violations;
    // every block of a kind carries the same model
    std::map<ElementKind, std::set<std::string>> models;
    for (const auto& b : layout(plan, a).blocks) models[b.element].insert(b.model);
    for (const auto& [kind, ids] : models)
      if (ids.size() != 1) ++violations;
  }
  o.require(violations == 0, fmt::format("{} violations", violations));
}

void stability(Outcome& o) {
  const auto c = load_catalog(default_catalog_path());
  std::size_t unstable = 0, levels = 0;
  for (const auto* name : {"chinese", "japanese", "composite"}) {
    const auto rs = load_ruleset(data_path(std::string("rulesets/") + name));
    for (const auto& rule : rs.rules)
      for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto gen = generate_level(rule.grammar, c, rs.mode, seed, {}, {}, rule.file);
        ++levels;
        if (!check_support(gen.level).stable) ++unstable;
      }
  }
  o.require(unstable == 0, fmt::format("{} of {} levels unstable", unstable, levels));
}

void determinism(Outcome& o) {
  const auto dir = scratch("determinism");
  for (const auto* run : {"a", "b"})
    for (const auto* grammar : {"grammars/demo_pagoda.bcg", "grammars/canonical.bcg"}) {
      const auto stem = dir / run / fs::path(grammar).stem();
      const auto [status, text] = cli({"generate", data_path(grammar), "--style", "composite", "--seed", "7", "--out",
                                       stem.string(), "--format", "json", "--format", "xml", "--format", "svg"});
      o.require(status == kExitOk, "generate failed: " + text);
    }
  for (const auto& f : fs::directory_iterator(dir / "a"))
    o.require(read_file(f.path().string()) == read_file((dir / "b" / f.path().filename()).string()),
              "generate output differs: " + f.path().filename().string());

  const auto serial = cli({"batch", data_path("rulesets/composite"), "--n", "40", "--seed", "100", "--out",
                           (dir / "serial").string(), "--jobs", "1"});
  const auto parallel = cli({"batch", data_path("rulesets/composite"), "--n", "40", "--seed", "100", "--out",
                             (dir / "parallel").string(), "--jobs", "4"});
  o.require(serial.first == kExitOk && parallel.first == kExitOk, "batch failed");
  std::size_t files = 0;
  for (const auto& f : fs::directory_iterator(dir / "serial")) {
    ++files;
    o.require(read_file(f.path().string()) == read_file((dir / "parallel" / f.path().filename()).string()),
              "batch output differs: " + f.path().filename().string());
  }
  o.require(files == 41, fmt::format("batch wrote {} files", files));
  fs::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "canonical grammar fidelity", 1.0, canonical_fidelity},
      {2, "demo hall reproduction", 1.0, demo_reproduction},
      {3, "generator/recognizer duality (1000 seeds)", 30.0, duality},
      {4, "small-scale completeness (length <= 8)", 60.0, completeness},
      {5, "closed-form count = enumeration", 60.0, count_equivalence},
      {6, "published totals reported by count", 0.0, reference_count_reporting},
      {7, "bundled catalog model counts", 0.0, catalog_conformance},
      {8, "style consistency (2000 triples)", 0.0, style_consistency},
      {9, "static stability (bundled rules x 1000 seeds)", 60.0, stability},
      {10, "byte-identical CLI output, serial = parallel batch", 0.0, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.ok = false;
      o.detail = fmt::format("took {:.2f} s, limit {:.0f} s", secs, c.time_limit_s);
    }
    failed += o.ok ? 0 : 1;
    std::cout << fmt::format("[{}] AC{:<2} {} ({:.3f} s){}\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                             o.ok ? "" : " -- " + o.detail);
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
