#include "bcg/grammar.hpp"

#include <random>

#include "bcg/derivation.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bcg;
using namespace bcg::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected bcg::Error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("tokenize the base production") {
  const auto tokens = tokenize("<base> ::= wall floor | wall | floor");
  const std::vector<Token> expected = {
      {TokenKind::AngleName, "base", {}}, {TokenKind::Define, "::=", {}}, {TokenKind::BareName, "wall", {}},
      {TokenKind::BareName, "floor", {}}, {TokenKind::Pipe, "|", {}},     {TokenKind::BareName, "wall", {}},
      {TokenKind::Pipe, "|", {}},         {TokenKind::BareName, "floor", {}}};
  CHECK(tokens == expected);
  CHECK(tokens[2].loc.line == 1);
  CHECK(tokens[2].loc.column == 12);
}

TEST_CASE("tokenize edge cases") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("# only a comment\n\n").empty());

  try {
    tokenize("wall ::? floor");
    FAIL("expected IllegalCharacter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllegalCharacter);
    CHECK(e.location().line == 1);
    CHECK(e.location().column == 8);
  }
  CHECK(code_of([] { tokenize("<base ::= wall"); }) == ErrorCode::UnterminatedAngleName);
  CHECK(code_of([] { tokenize("<base"); }) == ErrorCode::UnterminatedAngleName);
  CHECK(code_of([] { tokenize("<a> ::= wall;"); }) == ErrorCode::IllegalCharacter);

  const auto multi = tokenize("<a> ::= wall\n  # note\n  | floor");
  REQUIRE(multi.size() == 5);
  CHECK(multi[4].loc.line == 3);
}

TEST_CASE("parse the canonical grammar") {
  const Grammar g = canonical_grammar();
  REQUIRE(g.productions().size() == 6);
  const std::vector<std::string> names = {"building", "base", "main", "mainlist", "roofs", "rooflist"};
  const std::vector<std::size_t> counts = {1, 3, 1, 4, 3, 2};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(g.productions()[i].lhs == names[i]);
    CHECK(g.productions()[i].alternatives.size() == counts[i]);
  }
  CHECK(g.start() == "building");
  CHECK_FALSE(g.is_deterministic());

  // a line break after a trailing '|' continues the list
  const auto& mainlist = *g.find("mainlist");
  CHECK(mainlist.alternatives[2] ==
        Alternative{Symbol::nonterminal("mainlist"), Symbol::nonterminal("mainlist")});
  CHECK(mainlist.alternatives[3] == Alternative{Symbol::nonterminal("mainlist"), Symbol::terminal(ElementKind::Beam),
                                                Symbol::nonterminal("mainlist")});
}

TEST_CASE("parse the demo rule") {
  const Grammar g = demo_grammar();
  REQUIRE(g.productions().size() == 4);
  for (const auto& p : g.productions()) CHECK(p.alternatives.size() == 1);
  CHECK(g.find("main")->alternatives[0].size() == 11);
  CHECK(g.is_deterministic());
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_grammar("<a> ::= wall\n<a> ::= floor"); }) == ErrorCode::DuplicateLhs);
  CHECK(code_of([] { parse_grammar("<a> ::= wall | chimney"); }) == ErrorCode::UnknownTerminal);
  CHECK(code_of([] { parse_grammar("<a> ::= wall | | floor"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_grammar("<a> ::= wall |"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_grammar("<a> ::= | wall"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_grammar("<a> ::=\n<b> ::= wall"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_grammar("wall ::= floor"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_grammar("<a> wall"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_grammar("<a> ::= wall ::= floor"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { load_grammar_file("/nonexistent/x.bcg"); }) == ErrorCode::IoError);
}

TEST_CASE("start symbol falls back to the first lhs") {
  const Grammar g = parse_grammar("<top> ::= <x>\n<x> ::= wall");
  CHECK(g.start() == "top");
  CHECK(parse_grammar("").productions().empty());
}

TEST_CASE("validate_grammar") {
  CHECK(validate_grammar(canonical_grammar()).empty());
  CHECK(validate_grammar(demo_grammar()).empty());

  const auto loop = validate_grammar(parse_grammar("<loop> ::= <loop> beam"));
  REQUIRE(loop.size() == 1);
  CHECK(loop[0].kind == DiagnosticKind::NonProductive);
  CHECK(loop[0].subject == "loop");
  CHECK(loop[0].severity == Severity::Error);

  const auto extra =
      validate_grammar(parse_grammar(read_file(data_path("grammars/canonical.bcg")) + "<extra> ::= wall\n"));
  REQUIRE(extra.size() == 1);
  CHECK(extra[0].kind == DiagnosticKind::Unreachable);
  CHECK(extra[0].subject == "extra");
  CHECK(extra[0].severity == Severity::Warning);
  CHECK_FALSE(has_errors(extra));

  const auto dangling = validate_grammar(parse_grammar("<building> ::= <base> wall"));
  bool saw_dangling = false;
  for (const auto& d : dangling) saw_dangling |= d.kind == DiagnosticKind::DanglingNonTerminal && d.subject == "base";
  CHECK(saw_dangling);
  CHECK(has_errors(dangling));
}

TEST_CASE("format_grammar") {
  const Grammar g = canonical_grammar();
  const std::string text = format_grammar(g);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(text.substr(0, text.find('\n')) == "<building> ::= <base> <main> <roofs>");
  CHECK(text.find("<base> ::= wall floor | wall | floor\n") != std::string::npos);
  CHECK(parse_grammar(text) == g);
  CHECK(format_grammar(parse_grammar(text)) == text);

  const std::string single = format_grammar(parse_grammar("<a> ::= wall"));
  CHECK(single == "<a> ::= wall\n");
}

TEST_CASE("format round-trip over random rules") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Grammar g = parse_grammar(random_rule_text(rng));
    CHECK(parse_grammar(format_grammar(g)) == g);
  }
}

TEST_CASE("minimal yields") {
  const Grammar g = canonical_grammar();
  const auto y = compute_yields(g);
  CHECK(y.min_yield[g.index_of("building")] == 5);
  CHECK(y.min_yield[g.index_of("base")] == 1);
  CHECK(y.min_yield[g.index_of("main")] == 3);
  CHECK(y.min_yield[g.index_of("mainlist")] == 1);
  CHECK(y.min_yield[g.index_of("roofs")] == 1);
  CHECK(y.min_yield[g.index_of("rooflist")] == 1);
  CHECK(y.cheapest[g.index_of("base")] == 1);

  const Grammar cyc = parse_grammar("<a> ::= <b> | wall\n<b> ::= <a>");
  const auto yc = compute_yields(cyc);
  CHECK(yc.min_yield[0] == 1);
  CHECK(yc.cheapest[0] == 1);
  CHECK(yc.min_yield[1] == 1);
}

TEST_CASE("recognize examples") {
  const Grammar g = canonical_grammar();
  const auto demo = demo_sequence();
  auto tree = recognize(g, demo);
  REQUIRE(tree);
  CHECK(frontier(*tree) == demo);
  CHECK(is_well_formed(g, *tree));

  CHECK_FALSE(recognize(g, seq_from_words("roof wall floor")));
  CHECK_FALSE(recognize(g, ElementSequence{}));

  const auto small = seq_from_words("wall beam door beam toproof");
  auto t2 = recognize(g, small);
  REQUIRE(t2);
  CHECK(frontier(*t2) == small);
  CHECK(is_well_formed(g, *t2));

  CHECK_FALSE(recognize(g, seq_from_words("wall beam beam toproof")));
  CHECK_FALSE(recognize(g, seq_from_words("wall beam beam beam toproof")));
  CHECK_FALSE(recognize(g, seq_from_words("wall beam door beam toproof roof")));
}

TEST_CASE("recognize handles unit cycles") {
  const Grammar g = parse_grammar("<s> ::= <a> beam\n<a> ::= <b> | wall\n<b> ::= <a> | floor");
  auto t = recognize(g, seq_from_words("floor beam"));
  REQUIRE(t);
  CHECK(is_well_formed(g, *t));
  CHECK(recognize(g, seq_from_words("wall beam")));
  CHECK_FALSE(recognize(g, seq_from_words("beam beam")));
}

TEST_CASE("recognize agrees with brute force over all strings up to length 6") {
  const Grammar g = canonical_grammar();
  const auto language = language_by_fixed_point(g, 6);
  std::size_t accepted = 0;
  for (const auto& s : all_strings(6)) {
    const auto tree = recognize(g, s);
    CHECK(tree.has_value() == language.contains(s));
    if (tree) {
      ++accepted;
      CHECK(frontier(*tree) == s);
    }
  }
  CHECK(accepted == language.size());
  CHECK(accepted > 0);
}
