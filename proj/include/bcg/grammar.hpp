#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcg/element.hpp"
#include "bcg/error.hpp"

namespace bcg {

// ---------------------------------------------------------------------------
// Lexical layer
// ---------------------------------------------------------------------------

enum class TokenKind { AngleName, Define, Pipe, BareName };

struct Token {
  TokenKind kind;
  std::string text;  // name without brackets for AngleName, lexeme otherwise
  SourceLocation loc;

  bool operator==(const Token& o) const { return kind == o.kind && text == o.text; }
};

/// Splits grammar source into tokens. Line breaks carry no meaning (a
/// production ends where the next `<name> ::=` begins) and `#` starts a
/// comment running to end of line.
std::vector<Token> tokenize(std::string_view text);

// ---------------------------------------------------------------------------
// Grammar model
// ---------------------------------------------------------------------------

enum class SymbolKind { NonTerminal, Terminal };

struct Symbol {
  SymbolKind kind;
  std::string name;

  static Symbol nonterminal(std::string name) { return {SymbolKind::NonTerminal, std::move(name)}; }
  static Symbol terminal(ElementKind e) { return {SymbolKind::Terminal, std::string(to_string(e))}; }

  bool is_terminal() const { return kind == SymbolKind::Terminal; }
  /// Only meaningful for terminals.
  ElementKind element() const { return *element_from_string(name); }

  bool operator==(const Symbol&) const = default;
  auto operator<=>(const Symbol&) const = default;
};

std::string to_string(const Symbol& s);

using Alternative = std::vector<Symbol>;

struct Production {
  std::string lhs;
  std::vector<Alternative> alternatives;
  SourceLocation loc;  // position of the lhs; not part of structural equality

  bool operator==(const Production& o) const {
    return lhs == o.lhs && alternatives == o.alternatives;
  }
};

class Grammar {
 public:
  Grammar() = default;
  /// Throws DuplicateLhs if two productions share a left-hand side.
  Grammar(std::vector<Production> productions, std::string start);

  const std::vector<Production>& productions() const { return productions_; }
  const std::string& start() const { return start_; }

  /// nullptr when `lhs` has no production.
  const Production* find(std::string_view lhs) const;
  /// Index into productions(), or npos.
  std::size_t index_of(std::string_view lhs) const;

  /// True when every production has exactly one alternative.
  bool is_deterministic() const;

  bool operator==(const Grammar& o) const {
    return start_ == o.start_ && productions_ == o.productions_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Production> productions_;
  std::string start_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Parses BNF rule text. Start symbol is `<building>` when present,
/// otherwise the first left-hand side.
Grammar parse_grammar(std::string_view text);

/// Reads and parses a `.bcg` file. I/O failures raise ErrorCode::IoError.
Grammar load_grammar_file(const std::string& path);

enum class Severity { Error, Warning };

enum class DiagnosticKind {
  MissingStart,
  DanglingNonTerminal,
  Unreachable,
  NonProductive,
};

struct Diagnostic {
  Severity severity;
  DiagnosticKind kind;
  std::string subject;  // non-terminal the diagnostic is about
  SourceLocation loc;
  std::string message;
};

std::string_view to_string(DiagnosticKind k);

/// Structural checks: dangling references, reachability from the start
/// symbol (warnings) and productivity (fixed point).
std::vector<Diagnostic> validate_grammar(const Grammar& g);

bool has_errors(const std::vector<Diagnostic>& diags);

/// One production per line, single spaces, ` ::= ` and ` | ` separators.
std::string format_grammar(const Grammar& g);

// ---------------------------------------------------------------------------
// Minimal yields
// ---------------------------------------------------------------------------

/// Per-production minimal terminal yield and the cheapest alternative,
/// computed with a Knuth-style ordered fixed point so that following
/// `cheapest` alternatives always terminates.
struct YieldTable {
  static constexpr std::size_t kInfinite = static_cast<std::size_t>(-1);
  std::vector<std::size_t> min_yield;  // indexed like Grammar::productions()
  std::vector<std::size_t> cheapest;   // alternative index; undefined when infinite

  std::size_t yield_of(const Grammar& g, const Symbol& s) const;
  std::size_t yield_of(const Grammar& g, const Alternative& alt) const;
};

YieldTable compute_yields(const Grammar& g);

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

struct ParseTree {
  Symbol symbol;
  int alternative = -1;  // chosen alternative; -1 for terminal leaves
  std::vector<ParseTree> children;

  bool operator==(const ParseTree&) const = default;
};

ElementSequence frontier(const ParseTree& tree);

/// Checks that every internal node expands by its recorded alternative.
bool is_well_formed(const Grammar& g, const ParseTree& tree);

/// Chart-based membership test. Returns one witness tree when `seq` is
/// derivable from the start symbol.
std::optional<ParseTree> recognize(const Grammar& g, std::span<const ElementKind> seq);

}  // namespace bcg
