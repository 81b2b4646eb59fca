#include <cstdint>

#include "bcg/grammar.hpp"

namespace bcg {

ElementSequence frontier(const ParseTree& tree) {
  ElementSequence out;
  auto walk = [&](auto&& self, const ParseTree& t) -> void {
    if (t.symbol.is_terminal()) {
      out.push_back(t.symbol.element());
      return;
    }
    for (const auto& c : t.children) self(self, c);
  };
  walk(walk, tree);
  return out;
}

bool is_well_formed(const Grammar& g, const ParseTree& tree) {
  if (tree.symbol.is_terminal()) return tree.children.empty() && tree.alternative == -1;
  const Production* p = g.find(tree.symbol.name);
  if (!p || tree.alternative < 0 ||
      static_cast<std::size_t>(tree.alternative) >= p->alternatives.size())
    return false;
  const auto& alt = p->alternatives[static_cast<std::size_t>(tree.alternative)];
  if (alt.size() != tree.children.size()) return false;
  for (std::size_t i = 0; i < alt.size(); ++i) {
    if (alt[i] != tree.children[i].symbol) return false;
    if (!is_well_formed(g, tree.children[i])) return false;
  }
  return true;
}

namespace {

// Bottom-up chart over spans, shortest first. Every alternative symbol
// consumes at least one token, so an alternative of length >= 2 only
// consults strictly shorter spans; unit alternatives consult the same span
// and are closed by iterating to a fixed point per span.
class Chart {
 public:
  Chart(const Grammar& g, std::span<const ElementKind> seq)
      : g_(g), seq_(seq), n_(seq.size()), nts_(g.productions().size()),
        cells_((n_ + 1) * (n_ + 1) * nts_) {}

  std::optional<ParseTree> run() {
    const auto start = g_.index_of(g_.start());
    if (n_ == 0 || start == Grammar::npos) return std::nullopt;
    for (std::size_t len = 1; len <= n_; ++len)
      for (std::size_t i = 0; i + len <= n_; ++i) fill_span(i, i + len);
    if (!cell(0, n_, start).found) return std::nullopt;
    return build(start, 0, n_);
  }

 private:
  struct Witness {
    bool found = false;
    std::uint32_t alternative = 0;
    std::vector<std::size_t> cuts;  // boundaries between consecutive symbols
  };

  Witness& cell(std::size_t i, std::size_t j, std::size_t nt) {
    return cells_[(i * (n_ + 1) + j) * nts_ + nt];
  }

  bool symbol_derives(const Symbol& s, std::size_t i, std::size_t j) {
    if (s.is_terminal()) return j == i + 1 && seq_[i] == s.element();
    auto nt = g_.index_of(s.name);
    return nt != Grammar::npos && cell(i, j, nt).found;
  }

  // Finds cut points so that alt[k] derives [cuts[k-1], cuts[k]).
  bool match(const Alternative& alt, std::size_t i, std::size_t j, std::vector<std::size_t>& cuts) {
    const std::size_t k = alt.size();
    if (k > j - i) return false;
    if (k == 1) return symbol_derives(alt[0], i, j);
    // reach[s][p]: first s symbols derive [i, p); back[s][p] remembers the cut.
    const std::size_t width = j - i + 1;
    std::vector<std::uint8_t> reach((k + 1) * width, 0);
    std::vector<std::size_t> back((k + 1) * width, 0);
    reach[0] = 1;
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t p = i + s; p < j; ++p) {
        if (!reach[s * width + (p - i)]) continue;
        const std::size_t last = (s + 1 == k) ? j : j - (k - s - 1);
        for (std::size_t q = (s + 1 == k) ? j : p + 1; q <= last; ++q) {
          if (reach[(s + 1) * width + (q - i)]) continue;
          if (symbol_derives(alt[s], p, q)) {
            reach[(s + 1) * width + (q - i)] = 1;
            back[(s + 1) * width + (q - i)] = p;
          }
        }
      }
    if (!reach[k * width + (j - i)]) return false;
    cuts.assign(k + 1, 0);
    cuts[k] = j;
    for (std::size_t s = k; s > 0; --s) cuts[s - 1] = back[s * width + (cuts[s] - i)];
    return true;
  }

  void fill_span(std::size_t i, std::size_t j) {
    const auto& prods = g_.productions();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t nt = 0; nt < nts_; ++nt) {
        Witness& w = cell(i, j, nt);
        if (w.found) continue;
        const auto& alts = prods[nt].alternatives;
        for (std::size_t a = 0; a < alts.size(); ++a) {
          std::vector<std::size_t> cuts;
          if (match(alts[a], i, j, cuts)) {
            w.found = true;
            w.alternative = static_cast<std::uint32_t>(a);
            w.cuts = std::move(cuts);
            changed = true;
            break;
          }
        }
      }
    }
  }

  ParseTree build(std::size_t nt, std::size_t i, std::size_t j) {
    const Witness& w = cell(i, j, nt);
    const auto& prod = g_.productions()[nt];
    const auto& alt = prod.alternatives[w.alternative];
    ParseTree t{Symbol::nonterminal(prod.lhs), static_cast<int>(w.alternative), {}};
    t.children.reserve(alt.size());
    for (std::size_t s = 0; s < alt.size(); ++s) {
      const std::size_t from = alt.size() == 1 ? i : w.cuts[s];
      const std::size_t to = alt.size() == 1 ? j : w.cuts[s + 1];
      if (alt[s].is_terminal())
        t.children.push_back(ParseTree{alt[s], -1, {}});
      else
        t.children.push_back(build(g_.index_of(alt[s].name), from, to));
    }
    return t;
  }

  const Grammar& g_;
  std::span<const ElementKind> seq_;
  std::size_t n_;
  std::size_t nts_;
  std::vector<Witness> cells_;
};

}  // namespace

std::optional<ParseTree> recognize(const Grammar& g, std::span<const ElementKind> seq) {
  return Chart(g, seq).run();
}

}  // namespace bcg
