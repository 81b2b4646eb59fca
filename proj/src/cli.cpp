#include "bcg/cli.hpp"

#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "bcg/emit.hpp"
#include "bcg/enumeration.hpp"
#include "json.hpp"

namespace bcg {

namespace fs = std::filesystem;

GeneratedLevel generate_level(const Grammar& g, const ModelCatalog& catalog, StyleMode mode,
                              std::uint64_t seed, const DerivationLimits& limits,
                              const GeometryConfig& geometry, const std::string& source) {
  const ParseTree tree =
      g.is_deterministic() ? derive_deterministic_tree(g) : derive_random_tree(g, seed, limits);
  GeneratedLevel out;
  out.plan = to_building_plan(tree);
  out.assignment = assign_styles(out.plan, catalog, mode, seed);
  out.level = layout(out.plan, out.assignment, geometry);
  out.level.meta.source = source;
  out.level.meta.seed = seed;
  out.level.meta.mode = mode;
  out.level.meta.catalog = catalog.name();
  return out;
}

namespace {

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::IoError, fmt::format("cannot write '{}'", path.string()));
  f << bytes;
  if (!f) throw Error(ErrorCode::IoError, fmt::format("write to '{}' failed", path.string()));
}

std::string location_prefix(const std::string& file, const SourceLocation& loc) {
  if (loc.line == 0) return file + ": ";
  return fmt::format("{}:{}:{}: ", file, loc.line, loc.column);
}

struct Options {
  std::string catalog_path;
  std::string style = "chinese";
  std::uint64_t seed = 0;
  std::string out;
  std::vector<std::string> formats;
  std::string input;
  std::size_t n = 10;
  unsigned jobs = 1;
  DerivationLimits limits;
  GeometryConfig geometry;
};

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  Grammar g;
  try {
    g = load_grammar_file(o.input);
  } catch (const Error& e) {
    if (e.is_io()) throw;
    err << location_prefix(o.input, e.location()) << "error: " << to_string(e.code()) << ": "
        << e.what() << "\n";
    return kExitDomain;
  }
  const auto diags = validate_grammar(g);
  for (const auto& d : diags)
    err << location_prefix(o.input, d.loc) << (d.severity == Severity::Error ? "error: " : "warning: ")
        << to_string(d.kind) << ": " << d.message << "\n";
  if (has_errors(diags)) return kExitDomain;
  out << o.input << ": ok (" << g.productions().size() << " productions)\n";
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const auto mode = style_mode_from_string(o.style);
  if (!mode) throw Error(ErrorCode::InvalidArgument, fmt::format("unknown style '{}'", o.style));
  const Grammar g = load_grammar_file(o.input);
  const ModelCatalog catalog = load_catalog(o.catalog_path);
  const auto gen = generate_level(g, catalog, *mode, o.seed, o.limits, o.geometry,
                                  fs::path(o.input).filename().string());

  fs::path stem(o.out);
  const auto ext = stem.extension().string();
  if (ext == ".json" || ext == ".xml" || ext == ".svg") stem.replace_extension();
  if (stem.has_parent_path()) fs::create_directories(stem.parent_path());

  std::vector<std::string> formats = o.formats.empty() ? std::vector<std::string>{"json"} : o.formats;
  for (const auto& f : formats) {
    std::string bytes;
    if (f == "json")
      bytes = emit_json(gen.level);
    else if (f == "xml")
      bytes = emit_xml(gen.level, XmlMapping::from_catalog(catalog));
    else
      bytes = render_svg(gen.level, catalog);
    fs::path path = stem;
    path += "." + f;
    write_file(path, bytes);
    out << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const RuleSet rs = load_ruleset(o.input);
  const ModelCatalog catalog = load_catalog(o.catalog_path);
  const auto counts = count_closed_form(rs, catalog);

  out << fmt::format("ruleset: {} (mode {}, catalog {})\n", rs.name, to_string(rs.mode), catalog.name());
  out << fmt::format("{:<12} {:<44} {:>10}\n", "rule", "elements", "count");
  for (const auto& rc : counts.per_rule) {
    std::string elems;
    for (auto e : rc.elements) {
      if (!elems.empty()) elems += ",";
      elems += to_string(e);
    }
    out << fmt::format("{:<12} {:<44} {:>10}\n", rc.rule_id, elems, rc.count);
  }
  out << fmt::format("computed total: {}\n", counts.total);
  if (rs.reference_total) {
    out << fmt::format("reference total: {}\n", *rs.reference_total);
    out << (*rs.reference_total == counts.total ? "status: MATCHES\n" : "status: DIVERGES\n");
  } else {
    out << "reference total: n/a\n";
  }
  return kExitOk;
}

int cmd_batch(const Options& o, std::ostream& out) {
  const RuleSet rs = load_ruleset(o.input);
  const ModelCatalog catalog = load_catalog(o.catalog_path);
  const fs::path dir(o.out);
  fs::create_directories(dir);

  struct Entry {
    std::string file;
    std::string rule;
    std::uint64_t seed = 0;
    bool stable = false;
    std::string bytes;
  };
  std::vector<Entry> entries(o.n);
  std::vector<std::exception_ptr> failures(o.n);

  auto work = [&](std::size_t i) {
    try {
      const Rule& rule = rs.rules[i % rs.rules.size()];
      Entry& e = entries[i];
      e.seed = o.seed + i;
      e.rule = rule.id;
      e.file = fmt::format("level_{:04d}.json", i);
      const auto gen = generate_level(rule.grammar, catalog, rs.mode, e.seed, o.limits, o.geometry, rule.file);
      e.stable = check_support(gen.level, o.geometry).stable;
      e.bytes = emit_json(gen.level);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(std::max<std::size_t>(o.n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < o.n; ++i) work(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < o.n; i += jobs) work(i);
      });
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  nlohmann::ordered_json manifest;
  manifest["ruleset"] = rs.name;
  manifest["mode"] = std::string(to_string(rs.mode));
  manifest["catalog"] = catalog.name();
  manifest["levels"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    write_file(dir / e.file, e.bytes);
    nlohmann::ordered_json item;
    item["file"] = e.file;
    item["rule"] = e.rule;
    item["seed"] = e.seed;
    item["stable"] = e.stable;
    manifest["levels"].push_back(std::move(item));
  }
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  out << fmt::format("wrote {} levels to {}\n", o.n, dir.string());
  return kExitOk;
}

void add_catalog_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--catalog", o.catalog_path, "Model catalog JSON (env BCG_CATALOG, else bundled)");
}

void add_generation_options(CLI::App* cmd, Options& o) {
  add_catalog_option(cmd, o);
  cmd->add_option("--seed", o.seed, "PRNG seed");
  cmd->add_option("--max-expansions", o.limits.max_expansions)->check(CLI::PositiveNumber);
  cmd->add_option("--max-length", o.limits.max_sequence_length)->check(CLI::PositiveNumber);
  cmd->add_option("--dampening", o.limits.recursion_dampening, "Recursive alternative weight multiplier")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--taper", o.geometry.roof_taper, "Roof width shrink per tier")->check(CLI::Range(0.0, 0.4999));
  cmd->add_option("--overlap", o.geometry.overlap_ratio, "Minimal supported width fraction")
      ->check(CLI::Range(0.01, 1.0));
  cmd->add_option("--ground-y", o.geometry.ground_y);
  cmd->add_option("--origin-x", o.geometry.origin_x);
  cmd->add_option("--unit-scale", o.geometry.unit_scale)->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Building construction grammar level generator", "bcg"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Parse and check a grammar file");
  validate->add_option("grammar", o.input, "Grammar file (.bcg)")->required();

  auto* generate = app.add_subcommand("generate", "Generate one level from a grammar");
  generate->add_option("grammar", o.input, "Grammar file (.bcg)")->required();
  generate->add_option("--style", o.style, "chinese | japanese | composite")
      ->check(CLI::IsMember({"chinese", "japanese", "composite"}));
  generate->add_option("--out", o.out, "Output path (extension replaced per format)")->required();
  generate->add_option("--format", o.formats, "json | xml | svg (repeatable)")
      ->check(CLI::IsMember({"json", "xml", "svg"}));
  add_generation_options(generate, o);

  auto* count = app.add_subcommand("count", "Count the level space of a rule set");
  count->add_option("ruleset", o.input, "Rule set directory")->required();
  add_catalog_option(count, o);

  auto* batch = app.add_subcommand("batch", "Generate levels round-robin over a rule set");
  batch->add_option("ruleset", o.input, "Rule set directory")->required();
  batch->add_option("--n", o.n, "Number of levels");
  batch->add_option("--out", o.out, "Output directory")->required();
  batch->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_generation_options(batch, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bcg: " << e.what() << "\n";
    err << "run 'bcg --help' for usage\n";
    return kExitUsage;
  }
  if (o.catalog_path.empty()) o.catalog_path = default_catalog_path();

  try {
    if (validate->parsed()) return cmd_validate(o, out, err);
    if (generate->parsed()) return cmd_generate(o, out);
    if (count->parsed()) return cmd_count(o, out);
    return cmd_batch(o, out);
  } catch (const Error& e) {
    err << "bcg: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.is_io() ? kExitUsage : kExitDomain;
  } catch (const fs::filesystem_error& e) {
    err << "bcg: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace bcg
