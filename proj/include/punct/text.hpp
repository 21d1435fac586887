#ifndef PUNCT_TEXT_HPP
#define PUNCT_TEXT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "punct/graph.hpp"
#include "punct/morph.hpp"
#include "punct/syntax.hpp"
#include "punct/tree.hpp"

// Document-level orchestration.  Sentences run the full pipeline; the
// text realizer applies discourse-level brackets around the finished
// strings, so sentence-internal bracket absorption never reaches them,
// and folds single-sentence lists back into the sentence machinery.

namespace punct {

struct SentenceResult {
  PointedSeq seq;
  VisualOverlay overlay;
  std::map<int, std::pair<int, int>> tag_spans;
};

// Stage typing fixes the order: hierarchy rules, then adjacency rules,
// then graphical rules.
inline SentenceResult realize_stages(const SyntNode& tree, const Config& cfg,
                                     AmbientDepth amb = {}) {
  SyntNode t = promote_commas(tree, cfg);
  t = alternate_enclosures(std::move(t), amb);
  t = select_expansion(std::move(t), cfg);
  t = apply_default_punctuation(std::move(t));
  LinearizeResult lin = linearize(t, amb);
  SentenceResult out;
  out.tag_spans = std::move(lin.tag_spans);
  out.seq = insert_points(lin.seq, cfg);
  out.seq = transpose_quotes(std::move(out.seq), cfg);
  out.seq = absorb_graphic(std::move(out.seq), lin.overlay, cfg);
  out.overlay = harmonize(out.seq, lin.overlay, cfg);
  return out;
}

inline std::string realize_sentence(const SyntNode& tree, const Config& cfg,
                                    AmbientDepth amb = {}) {
  SentenceResult r = realize_stages(tree, cfg, amb);
  return render(r.seq, r.overlay, cfg.output_format, cfg);
}

namespace detail {

inline bool quote_glyph(char c) { return c == '"' || c == '\''; }

// Discourse brackets wrap the already-terminated sentence string, so the
// final point survives inside them.  Adjacent quote glyphs get a space.
inline std::string wrap_discourse(const std::string& s, BracketKind kind,
                                  const AmbientDepth& amb) {
  BracketKind k = kind;
  if (is_quote(kind))
    k = (amb.quote % 2 == 0) ? BracketKind::DoubleQuote
                             : BracketKind::SingleQuote;
  std::string open, close;
  switch (k) {
    case BracketKind::Paren: open = "("; close = ")"; break;
    case BracketKind::Square: open = "["; close = "]"; break;
    case BracketKind::DoubleQuote: open = close = "\""; break;
    case BracketKind::SingleQuote: open = close = "'"; break;
  }
  std::string out = open;
  if (!s.empty() && quote_glyph(s.front()) && quote_glyph(open.back()))
    out += " ";
  out += s;
  if (!s.empty() && quote_glyph(s.back()) && quote_glyph(close.front()))
    out += " ";
  out += close;
  return out;
}

inline AmbientDepth descend(AmbientDepth amb, BracketKind kind) {
  if (is_quote(kind))
    ++amb.quote;
  else
    ++amb.paren;
  return amb;
}

inline std::string block_join(const Config& cfg) {
  return cfg.output_format == OutputFormat::Plain ? "  " : " ";
}

}  // namespace detail

inline std::string realize_list(const ListBlock& block, const Config& cfg,
                                AmbientDepth amb = {});

namespace detail {

inline std::string realize_block(const Block& b, const Config& cfg,
                                 AmbientDepth amb);

inline std::string realize_blocks(const std::vector<Block>& blocks,
                                  const Config& cfg, AmbientDepth amb) {
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out += blocks[i].para() ? "\n" : block_join(cfg);
    out += realize_block(blocks[i], cfg, amb);
  }
  return out;
}

inline std::string realize_block(const Block& b, const Config& cfg,
                                 AmbientDepth amb) {
  if (const auto* s = std::get_if<SentenceBlock>(&b.v)) {
    AmbientDepth inner =
        s->discourse_brackets ? descend(amb, *s->discourse_brackets) : amb;
    std::string text = realize_sentence(s->root, cfg, inner);
    if (s->discourse_brackets)
      text = wrap_discourse(text, *s->discourse_brackets, amb);
    return text;
  }
  if (const auto* g = std::get_if<GroupBlock>(&b.v)) {
    AmbientDepth inner = g->brackets ? descend(amb, *g->brackets) : amb;
    std::string text = realize_blocks(g->blocks, cfg, inner);
    if (g->brackets) text = wrap_discourse(text, *g->brackets, amb);
    return text;
  }
  return realize_list(std::get<ListBlock>(b.v), cfg, amb);
}

}  // namespace detail

// Blocks are independent; outputs join in block order.
inline std::string realize_document(const Document& doc, const Config& cfg) {
  return detail::realize_blocks(doc.blocks, cfg, {});
}

// A vertical list forming a single sentence is punctuated as if run-in:
// the items become a coordinated series under the intro clause, comma
// promotion applies as usual, and the final item takes the terminal.
inline std::string realize_list(const ListBlock& block, const Config& cfg,
                                AmbientDepth amb) {
  if (block.items.empty())
    throw ValidationError("list block has no items", "items");
  std::string enumerator_sep = "\n";

  auto enumerator = [&](size_t i) {
    if (block.bullet) return std::string("\xE2\x80\xA2 ");
    return std::to_string(i + 1) + ". ";
  };

  if (!block.single_sentence) {
    // Independent sentences: no promotion across items.
    std::string out = realize_sentence(block.intro, cfg, amb);
    for (size_t i = 0; i < block.items.size(); ++i) {
      std::string item = realize_sentence(block.items[i], cfg, amb);
      if (block.style == ListStyle::Vertical)
        out += enumerator_sep + enumerator(i) + item;
      else
        out += detail::block_join(cfg) + item;
    }
    return out;
  }

  SyntNode tree = block.intro;
  tree.attrs.terminal_none = false;
  int order_base = 100000;
  for (size_t i = 0; i < block.items.size(); ++i) {
    SyntNode item = block.items[i];
    item.tag = static_cast<int>(i);
    if (block.conjunction && i + 1 == block.items.size()) {
      SyntNode conj;
      conj.lexeme.surface = *block.conjunction;
      item.rels.insert(item.rels.begin(),
                       make_rel("conj-word", Pos::Before, -100000, conj));
    }
    Relation r = make_rel("coord", Pos::After,
                          order_base + static_cast<int>(i), std::move(item));
    // The first item continues the intro clause; separators sit between
    // items only.
    r.sep_none = (i == 0);
    tree.rels.push_back(std::move(r));
  }

  SentenceResult r = realize_stages(tree, cfg, amb);

  if (block.style == ListStyle::RunIn)
    return render(r.seq, r.overlay, cfg.output_format, cfg);

  // Vertical: split the one realized sentence at item starts.  The
  // separator settled at each boundary stays with the preceding line.
  std::vector<size_t> cut;
  for (size_t i = 0; i < block.items.size(); ++i) {
    auto span = r.tag_spans.at(static_cast<int>(i));
    size_t idx = r.seq.items.size();
    for (size_t j = 0; j < r.seq.items.size(); ++j) {
      const Token& t = r.seq.items[j];
      if (t.is_word() && t.word_ordinal >= span.first) {
        idx = j;
        break;
      }
    }
    while (idx > 0 && detail::is_open_bracket(r.seq.items[idx - 1])) --idx;
    cut.push_back(idx);
  }

  auto render_slice = [&](size_t from, size_t to, bool with_terminal) {
    PointedSeq part;
    part.items.assign(r.seq.items.begin() + static_cast<long>(from),
                      r.seq.items.begin() + static_cast<long>(to));
    if (with_terminal) part.terminal = r.seq.terminal;
    return render(part, r.overlay, cfg.output_format, cfg);
  };

  std::string out = render_slice(0, cut[0], false);
  for (size_t i = 0; i < cut.size(); ++i) {
    size_t end = (i + 1 < cut.size()) ? cut[i + 1] : r.seq.items.size();
    out += enumerator_sep + enumerator(i) +
           render_slice(cut[i], end, i + 1 == cut.size());
  }
  return out;
}

}  // namespace punct

#endif
