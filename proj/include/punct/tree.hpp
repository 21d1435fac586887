#ifndef PUNCT_TREE_HPP
#define PUNCT_TREE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "punct/marks.hpp"

namespace punct {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Input bytes do not match the schema.
struct ParseError : Error {
  using Error::Error;
};
// Structure violates a constraint (strict expansion mode, bad tree).
struct ValidationError : Error {
  std::string node_path;
  ValidationError(const std::string& msg, std::string path)
      : Error(msg + " at " + path), node_path(std::move(path)) {}
};

// Enclosure of a phrase.  Comma/Dash are paired points at both ends,
// ColonExpansion/DashExpansion a single leading point, the rest brackets.
enum class Enclosure {
  Comma,
  Dash,
  Paren,
  Square,
  DoubleQuote,
  SingleQuote,
  ColonExpansion,
  DashExpansion,
};

inline bool is_bracket_enclosure(Enclosure e) {
  switch (e) {
    case Enclosure::Paren:
    case Enclosure::Square:
    case Enclosure::DoubleQuote:
    case Enclosure::SingleQuote:
      return true;
    default:
      return false;
  }
}

// One enclosure on a phrase.  `kind` is what gets presented; `requested`
// is what the input asked for, which the expansion rules key on even
// after alternation has rewritten `kind`.
struct BtwEntry {
  Enclosure kind;
  Enclosure requested;
  MarkOrigin origin = MarkOrigin::Explicit;
};

inline BtwEntry btw(Enclosure e, MarkOrigin o = MarkOrigin::Explicit) {
  return BtwEntry{e, e, o};
}

// Trailing mark carried by a phrase: an embedded sentence period, a tone
// indicator, or a fragment-final point.
struct TerminalSpec {
  std::variant<PointKind, ToneKind> mark;
  bool is_tone() const { return std::holds_alternative<ToneKind>(mark); }
};

struct PhraseAttrs {
  // Innermost first: btw {dash, paren} puts the dashes inside the parens.
  std::vector<BtwEntry> btw;
  std::optional<VisualAttrs> visual;
  std::optional<TerminalSpec> terminal;
  bool terminal_none = false;  // explicit fragment: no sentence terminal

  // Set by syntactic rules, not by input: a leading separator point
  // (series commas, promoted semicolons) and the unbalanced trailing
  // comma of a sentence-initial adjunct.
  std::optional<std::pair<PointKind, MarkOrigin>> sep;
  bool trailing_comma = false;
};

enum class Pos { Before, After };

struct SyntNode;

struct Relation {
  std::string rel;
  Pos pos = Pos::After;
  int order = 0;
  // Explicit separator request on this edge; overrides the series default.
  std::optional<PointKind> sep;
  bool sep_none = false;
  std::vector<SyntNode> child;  // exactly one; vector breaks the type cycle
};

// Ordered dependency tree node.  Children carry their own subtrees; the
// node's lexeme sits between its Before and After children.
struct SyntNode {
  Lexeme lexeme;
  PhraseAttrs attrs;
  std::vector<Relation> rels;
  int tag = -1;  // caller-set id, reported back by linearize

  const SyntNode& child(size_t i) const { return rels[i].child.front(); }
  SyntNode& child(size_t i) { return rels[i].child.front(); }
};

inline Relation make_rel(std::string name, Pos pos, int order, SyntNode child) {
  Relation r;
  r.rel = std::move(name);
  r.pos = pos;
  r.order = order;
  r.child.push_back(std::move(child));
  return r;
}

enum class QuoteStyle { American, Precise };
enum class ExpansionMode { Rewrite, Strict };
enum class OutputFormat { Plain, Tagged, Directive };

struct Config {
  QuoteStyle quote_style = QuoteStyle::American;
  bool harmony = true;
  bool tone_italic_absorption = true;
  ExpansionMode expansion_mode = ExpansionMode::Rewrite;
  bool promotion_refinements = false;
  OutputFormat output_format = OutputFormat::Plain;
  bool ascii_dash = false;
  // No attested usage fixes the promoted-semicolon vs expansion-colon tie;
  // default lets the colon win by rank.
  bool prefer_promoted_semicolon = false;
};

// Nesting already in force around a sentence when discourse-level
// brackets enclose it; alternation counts from these depths.
struct AmbientDepth {
  int paren = 0;
  int quote = 0;
  int italic = 0;
};

enum class ListStyle { Vertical, RunIn };

struct SentenceBlock {
  SyntNode root;
  std::optional<BracketKind> discourse_brackets;
  bool para = false;
};

struct ListBlock {
  ListStyle style = ListStyle::Vertical;
  bool single_sentence = true;
  std::optional<std::string> conjunction;
  bool bullet = false;
  SyntNode intro;
  std::vector<SyntNode> items;
  bool para = false;
};

struct Block;

// One or more complete sentences under a shared discourse bracket.
struct GroupBlock {
  std::optional<BracketKind> brackets;
  std::vector<Block> blocks;
  bool para = false;
};

struct Block {
  std::variant<SentenceBlock, ListBlock, GroupBlock> v;
  bool para() const {
    return std::visit([](const auto& b) { return b.para; }, v);
  }
};

struct Document {
  std::vector<Block> blocks;
};

}  // namespace punct

#endif
