#include "bcg/grammar.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace bcg {

namespace {

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_name_char(char c) { return is_name_start(c) || (c >= '0' && c <= '9') || c == '-'; }

std::string describe(TokenKind k) {
  switch (k) {
    case TokenKind::AngleName: return "<name>";
    case TokenKind::Define: return "'::='";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::BareName: return "terminal";
  }
  return "?";
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1, col = 1, i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    const SourceLocation here{line, col};
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '|') {
      tokens.push_back({TokenKind::Pipe, "|", here});
      advance(1);
    } else if (c == ':') {
      if (text.substr(i, 3) != "::=") {
        // point at the first character that breaks the `::=` lexeme
        std::size_t k = 1;
        while (k < 3 && i + k < text.size() && text[i + k] == "::="[k]) ++k;
        if (i + k >= text.size())
          throw Error(ErrorCode::IllegalCharacter, "incomplete '::='", here);
        advance(k);
        throw Error(ErrorCode::IllegalCharacter,
                    fmt::format("illegal character '{}'", text[i]), {line, col});
      }
      tokens.push_back({TokenKind::Define, "::=", here});
      advance(3);
    } else if (c == '<') {
      std::size_t j = i + 1;
      while (j < text.size() && is_name_char(text[j])) ++j;
      if (j == i + 1 && j < text.size() && text[j] == '>')
        throw Error(ErrorCode::IllegalCharacter, "empty non-terminal name '<>'", here);
      if (j >= text.size() || text[j] != '>')
        throw Error(ErrorCode::UnterminatedAngleName, "unterminated '<' name", here);
      if (!is_name_start(text[i + 1]))
        throw Error(ErrorCode::IllegalCharacter,
                    fmt::format("illegal character '{}'", text[i + 1]), {line, col + 1});
      tokens.push_back({TokenKind::AngleName, std::string(text.substr(i + 1, j - i - 1)), here});
      advance(j - i + 1);
    } else if (is_name_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_name_char(text[j])) ++j;
      tokens.push_back({TokenKind::BareName, std::string(text.substr(i, j - i)), here});
      advance(j - i);
    } else {
      throw Error(ErrorCode::IllegalCharacter, fmt::format("illegal character '{}'", c), here);
    }
  }
  return tokens;
}

std::string to_string(const Symbol& s) {
  return s.is_terminal() ? s.name : "<" + s.name + ">";
}

Grammar::Grammar(std::vector<Production> productions, std::string start)
    : productions_(std::move(productions)), start_(std::move(start)) {
  for (std::size_t i = 0; i < productions_.size(); ++i) {
    auto [it, inserted] = index_.emplace(productions_[i].lhs, i);
    if (!inserted)
      throw Error(ErrorCode::DuplicateLhs,
                  fmt::format("duplicate production for <{}>", productions_[i].lhs),
                  productions_[i].loc);
  }
}

const Production* Grammar::find(std::string_view lhs) const {
  auto i = index_of(lhs);
  return i == npos ? nullptr : &productions_[i];
}

std::size_t Grammar::index_of(std::string_view lhs) const {
  auto it = index_.find(lhs);
  return it == index_.end() ? npos : it->second;
}

bool Grammar::is_deterministic() const {
  return std::all_of(productions_.begin(), productions_.end(),
                     [](const Production& p) { return p.alternatives.size() == 1; });
}

Grammar parse_grammar(std::string_view text) {
  const auto tokens = tokenize(text);
  std::vector<Production> productions;
  std::size_t pos = 0;

  auto starts_production = [&](std::size_t p) {
    return p + 1 < tokens.size() && tokens[p].kind == TokenKind::AngleName &&
           tokens[p + 1].kind == TokenKind::Define;
  };
  auto syntax_error = [&](std::size_t p, const std::string& expected) -> Error {
    if (p >= tokens.size())
      return Error(ErrorCode::SyntaxError, fmt::format("unexpected end of input, expected {}", expected));
    return Error(ErrorCode::SyntaxError,
                 fmt::format("unexpected {} '{}', expected {}", describe(tokens[p].kind),
                             tokens[p].text, expected),
                 tokens[p].loc);
  };

  while (pos < tokens.size()) {
    if (!starts_production(pos)) {
      if (tokens[pos].kind != TokenKind::AngleName) throw syntax_error(pos, "<name>");
      throw syntax_error(pos + 1, "'::='");
    }
    Production prod;
    prod.lhs = tokens[pos].text;
    prod.loc = tokens[pos].loc;
    pos += 2;

    Alternative current;
    for (;;) {
      if (pos >= tokens.size() || starts_production(pos)) {
        if (current.empty()) throw syntax_error(pos, "symbol");
        prod.alternatives.push_back(std::move(current));
        break;
      }
      const Token& t = tokens[pos];
      if (t.kind == TokenKind::Pipe) {
        if (current.empty()) throw syntax_error(pos, "symbol");
        prod.alternatives.push_back(std::move(current));
        current.clear();
      } else if (t.kind == TokenKind::AngleName) {
        current.push_back(Symbol::nonterminal(t.text));
      } else if (t.kind == TokenKind::BareName) {
        auto e = element_from_string(t.text);
        if (!e)
          throw Error(ErrorCode::UnknownTerminal, fmt::format("unknown terminal '{}'", t.text), t.loc);
        current.push_back(Symbol::terminal(*e));
      } else {
        throw syntax_error(pos, "symbol or '|'");
      }
      ++pos;
    }
    productions.push_back(std::move(prod));
  }

  std::string start;
  if (!productions.empty()) {
    start = productions.front().lhs;
    for (const auto& p : productions)
      if (p.lhs == "building") start = "building";
  }
  return Grammar(std::move(productions), std::move(start));
}

Grammar load_grammar_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot read '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grammar(ss.str());
}

std::string_view to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::MissingStart: return "MissingStart";
    case DiagnosticKind::DanglingNonTerminal: return "DanglingNonTerminal";
    case DiagnosticKind::Unreachable: return "Unreachable";
    case DiagnosticKind::NonProductive: return "NonProductive";
  }
  return "?";
}

std::vector<Diagnostic> validate_grammar(const Grammar& g) {
  std::vector<Diagnostic> diags;
  const auto& prods = g.productions();

  if (!g.find(g.start()))
    diags.push_back({Severity::Error, DiagnosticKind::MissingStart, g.start(), {},
                     fmt::format("start symbol <{}> has no production", g.start())});

  std::set<std::string> reported;
  for (const auto& p : prods)
    for (const auto& alt : p.alternatives)
      for (const auto& s : alt)
        if (!s.is_terminal() && !g.find(s.name) && reported.insert(s.name).second)
          diags.push_back({Severity::Error, DiagnosticKind::DanglingNonTerminal, s.name, p.loc,
                           fmt::format("<{}> is used in <{}> but never defined", s.name, p.lhs)});

  // Reachability from the start symbol.
  std::vector<bool> reached(prods.size(), false);
  std::vector<std::size_t> work;
  if (auto i = g.index_of(g.start()); i != Grammar::npos) {
    reached[i] = true;
    work.push_back(i);
  }
  while (!work.empty()) {
    auto i = work.back();
    work.pop_back();
    for (const auto& alt : prods[i].alternatives)
      for (const auto& s : alt) {
        if (s.is_terminal()) continue;
        auto j = g.index_of(s.name);
        if (j != Grammar::npos && !reached[j]) {
          reached[j] = true;
          work.push_back(j);
        }
      }
  }
  for (std::size_t i = 0; i < prods.size(); ++i)
    if (!reached[i])
      diags.push_back({Severity::Warning, DiagnosticKind::Unreachable, prods[i].lhs, prods[i].loc,
                       fmt::format("<{}> is unreachable from <{}>", prods[i].lhs, g.start())});

  const auto yields = compute_yields(g);
  for (std::size_t i = 0; i < prods.size(); ++i)
    if (yields.min_yield[i] == YieldTable::kInfinite)
      diags.push_back({Severity::Error, DiagnosticKind::NonProductive, prods[i].lhs, prods[i].loc,
                       fmt::format("<{}> cannot derive any finite terminal string", prods[i].lhs)});
  return diags;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string format_grammar(const Grammar& g) {
  std::string out;
  for (const auto& p : g.productions()) {
    out += "<" + p.lhs + "> ::=";
    for (std::size_t a = 0; a < p.alternatives.size(); ++a) {
      if (a) out += " |";
      for (const auto& s : p.alternatives[a]) out += " " + to_string(s);
    }
    out += "\n";
  }
  return out;
}

std::size_t YieldTable::yield_of(const Grammar& g, const Symbol& s) const {
  if (s.is_terminal()) return 1;
  auto i = g.index_of(s.name);
  return i == Grammar::npos ? kInfinite : min_yield[i];
}

std::size_t YieldTable::yield_of(const Grammar& g, const Alternative& alt) const {
  std::size_t total = 0;
  for (const auto& s : alt) {
    auto y = yield_of(g, s);
    if (y == kInfinite) return kInfinite;
    total += y;
  }
  return total;
}

YieldTable compute_yields(const Grammar& g) {
  const auto& prods = g.productions();
  YieldTable t;
  t.min_yield.assign(prods.size(), YieldTable::kInfinite);
  t.cheapest.assign(prods.size(), 0);
  std::vector<bool> final(prods.size(), false);

  // Finalise one production per round: the one whose best alternative over
  // already-final symbols is globally smallest. Cheapest alternatives then
  // only reference productions finalised earlier, so they form a DAG.
  for (std::size_t round = 0; round < prods.size(); ++round) {
    std::size_t best_prod = Grammar::npos, best_alt = 0, best_yield = YieldTable::kInfinite;
    for (std::size_t i = 0; i < prods.size(); ++i) {
      if (final[i]) continue;
      for (std::size_t a = 0; a < prods[i].alternatives.size(); ++a) {
        std::size_t total = 0;
        bool ok = true;
        for (const auto& s : prods[i].alternatives[a]) {
          if (s.is_terminal()) {
            ++total;
            continue;
          }
          auto j = g.index_of(s.name);
          if (j == Grammar::npos || !final[j]) {
            ok = false;
            break;
          }
          total += t.min_yield[j];
        }
        if (ok && total < best_yield) {
          best_prod = i;
          best_alt = a;
          best_yield = total;
        }
      }
    }
    if (best_prod == Grammar::npos) break;
    final[best_prod] = true;
    t.min_yield[best_prod] = best_yield;
    t.cheapest[best_prod] = best_alt;
  }
  return t;
}

}  // namespace bcg
