#ifndef PUNCT_SYNTAX_HPP
#define PUNCT_SYNTAX_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "punct/linear.hpp"
#include "punct/tree.hpp"

// Hierarchy-sensitive rules.  Everything here runs on the tree, before
// any adjacency reasoning: comma promotion, enclosure alternation,
// expansion selection, default punctuation, and linearization with
// boundary-feature propagation.

namespace punct {

namespace detail {

inline bool rel_is(const Relation& r, const char* n) { return r.rel == n; }

inline bool pending_default_comma(const Relation& r) {
  const SyntNode& c = r.child.front();
  if (rel_is(r, "descr-attr") && c.attrs.btw.empty() && !r.sep && !r.sep_none)
    return true;
  if (rel_is(r, "circ") && r.pos == Pos::Before && c.attrs.btw.empty())
    return true;
  return false;
}

// Would this coord edge carry a comma separator once defaults apply?
inline bool pending_comma_sep(const Relation& r) {
  const SyntNode& c = r.child.front();
  if (c.attrs.sep) return c.attrs.sep->first == PointKind::Comma;
  if (r.sep_none) return false;
  if (r.sep) return *r.sep == PointKind::Comma;
  return rel_is(r, "coord");
}

inline bool comma_or_dash(Enclosure e) {
  return e == Enclosure::Comma || e == Enclosure::Dash ||
         e == Enclosure::DashExpansion;
}

// 'Internal punctuation' = a comma or dash feature anywhere inside the
// item: explicit or pending-default btw commas/dashes and separators.
// The item's own outermost delimitation is not internal, and when called
// on a series head the other items of that series are skipped.
inline bool has_internal_punct(const SyntNode& n, const Config& cfg,
                               bool top = true, bool skip_coord_rels = false) {
  if (!top) {
    for (const auto& e : n.attrs.btw)
      if (comma_or_dash(e.kind)) return true;
    if (n.attrs.sep && (n.attrs.sep->first == PointKind::Comma ||
                        n.attrs.sep->first == PointKind::Dash))
      return true;
    if (n.attrs.trailing_comma) return true;
  }
  for (const auto& r : n.rels) {
    if (top && skip_coord_rels && rel_is(r, "coord")) continue;
    if (pending_default_comma(r)) return true;
    if (!cfg.promotion_refinements || !rel_is(r, "coord")) {
      if (r.sep && (*r.sep == PointKind::Comma || *r.sep == PointKind::Dash))
        return true;
      if (rel_is(r, "coord") && pending_comma_sep(r)) return true;
    }
    if (has_internal_punct(r.child.front(), cfg, false)) return true;
  }
  return false;
}

}  // namespace detail

// Series separators are upgraded to semicolons when any item of the
// series carries internal punctuation.  Inner series settle first.
inline SyntNode promote_commas(SyntNode tree, const Config& cfg = {}) {
  for (auto& r : tree.rels) r.child.front() = promote_commas(std::move(r.child.front()), cfg);

  std::vector<Relation*> coord;
  for (auto& r : tree.rels)
    if (detail::rel_is(r, "coord")) coord.push_back(&r);
  if (coord.empty()) return tree;

  std::vector<bool> internal;
  internal.push_back(detail::has_internal_punct(tree, cfg, true, true));
  for (auto* r : coord)
    internal.push_back(detail::has_internal_punct(r->child.front(), cfg, true));

  bool any = std::find(internal.begin(), internal.end(), true) != internal.end();
  if (cfg.promotion_refinements && any) {
    // Promotion is suppressed when only the last item qualifies.
    bool non_last = false;
    for (size_t i = 0; i + 1 < internal.size(); ++i) non_last |= internal[i];
    if (!non_last) any = false;
  }
  if (!any) return tree;

  for (auto* r : coord) {
    if (detail::pending_comma_sep(*r))
      r->child.front().attrs.sep = {PointKind::Semicolon, MarkOrigin::Promoted};
  }
  return tree;
}

// Bracket, quote and italics alternation under embedding (ambient depths
// cover discourse-level enclosures around the sentence).
inline SyntNode alternate_enclosures(SyntNode tree, AmbientDepth amb = {}) {
  int paren_depth = amb.paren;
  int quote_depth = amb.quote;

  // Entries are stored innermost first; depth grows outside-in.
  for (auto it = tree.attrs.btw.rbegin(); it != tree.attrs.btw.rend(); ++it) {
    switch (it->requested) {
      case Enclosure::Paren:
        it->kind = (paren_depth % 2 == 1) ? Enclosure::Square : Enclosure::Paren;
        ++paren_depth;
        break;
      case Enclosure::Square:
        ++paren_depth;
        break;
      case Enclosure::DoubleQuote:
      case Enclosure::SingleQuote:
        it->kind = (quote_depth % 2 == 0) ? Enclosure::DoubleQuote
                                          : Enclosure::SingleQuote;
        ++quote_depth;
        break;
      default:
        break;
    }
  }
  // Lexically attached quotes sit around the node's own word only.
  for (auto& am : tree.lexeme.lexical_marks) {
    if (am.mark.is_bracket() && is_quote(am.mark.bracket().kind)) {
      BracketKind k = (quote_depth % 2 == 0) ? BracketKind::DoubleQuote
                                             : BracketKind::SingleQuote;
      am.mark.variant = Bracket{k, am.mark.bracket().side};
    }
  }

  AmbientDepth inner{paren_depth, quote_depth, amb.italic};
  for (auto& r : tree.rels)
    r.child.front() = alternate_enclosures(std::move(r.child.front()), inner);
  return tree;
}

namespace detail {

struct ExpansionCtx {
  bool inside_colon = false;
  std::optional<Enclosure> nearest_bracket;  // requested kind
};

inline void select_expansion_walk(SyntNode& n, ExpansionCtx ctx, bool mid_phrase,
                                  const Config& cfg, const std::string& path) {
  // Outermost entries first: context for inner entries and children.
  for (auto it = n.attrs.btw.rbegin(); it != n.attrs.btw.rend(); ++it) {
    BtwEntry& e = *it;
    if (e.requested == Enclosure::ColonExpansion) {
      if (ctx.inside_colon) {
        if (cfg.expansion_mode == ExpansionMode::Strict)
          throw ValidationError("colon-expansion nested inside colon-expansion",
                                path);
        e.kind = e.requested = Enclosure::DashExpansion;
      } else {
        ctx.inside_colon = true;
      }
    } else if (e.requested == Enclosure::Paren) {
      if (ctx.nearest_bracket == Enclosure::Paren && mid_phrase) {
        if (cfg.expansion_mode == ExpansionMode::Strict)
          throw ValidationError(
              "parenthesized adjunct nested directly inside parentheses", path);
        e.kind = e.requested = Enclosure::Dash;
      } else {
        ctx.nearest_bracket = Enclosure::Paren;
      }
    } else if (is_bracket_enclosure(e.requested)) {
      ctx.nearest_bracket = e.requested;
    }
  }

  std::vector<const Relation*> after;
  for (const auto& r : n.rels)
    if (r.pos == Pos::After) after.push_back(&r);
  std::sort(after.begin(), after.end(),
            [](const Relation* a, const Relation* b) { return a->order < b->order; });
  const Relation* last_after = after.empty() ? nullptr : after.back();

  for (size_t i = 0; i < n.rels.size(); ++i) {
    Relation& r = n.rels[i];
    bool child_mid = (r.pos == Pos::Before) || (&r != last_after);
    select_expansion_walk(r.child.front(), ctx, child_mid, cfg,
                          path + ".rels[" + std::to_string(i) + "]");
  }
}

}  // namespace detail

// Colon-expansions resist embedding: a nested one is re-introduced by a
// dash.  A parenthesized mid-phrase adjunct directly inside parentheses
// is re-delimited with dashes.  Strict mode reports instead of rewriting.
inline SyntNode select_expansion(SyntNode tree, const Config& cfg = {}) {
  detail::select_expansion_walk(tree, {}, false, cfg, "root");
  return tree;
}

// Rule-driven defaults: descriptive-attributive children get balanced
// commas, sentence-initial circumstantials an unbalanced trailing comma,
// series members a leading comma separator.
inline SyntNode apply_default_punctuation(SyntNode tree) {
  for (auto& r : tree.rels) {
    SyntNode& c = r.child.front();
    if (detail::rel_is(r, "descr-attr") && c.attrs.btw.empty() && !r.sep &&
        !r.sep_none)
      c.attrs.btw.push_back(btw(Enclosure::Comma, MarkOrigin::Default));
    if (detail::rel_is(r, "circ") && r.pos == Pos::Before && c.attrs.btw.empty())
      c.attrs.trailing_comma = true;
    if (!c.attrs.sep) {
      if (r.sep)
        c.attrs.sep = {*r.sep, MarkOrigin::Explicit};
      else if (detail::rel_is(r, "coord") && !r.sep_none)
        c.attrs.sep = {PointKind::Comma, MarkOrigin::Default};
    }
    r.child.front() = apply_default_punctuation(std::move(c));
  }
  return tree;
}

struct LinearizeResult {
  LinearSeq seq;
  VisualOverlay overlay;
  std::map<int, std::pair<int, int>> tag_spans;  // node tag -> word range
};

namespace detail {

struct LinearizeState {
  LinearSeq seq;
  VisualOverlay overlay;
  std::map<int, std::pair<int, int>> tag_spans;
  int next_pair = 0;
  int italic_depth = 0;
};

inline Mark open_of(Enclosure e) {
  switch (e) {
    case Enclosure::Paren: return bracket_mark(BracketKind::Paren, Side::Open);
    case Enclosure::Square: return bracket_mark(BracketKind::Square, Side::Open);
    case Enclosure::DoubleQuote:
      return bracket_mark(BracketKind::DoubleQuote, Side::Open);
    case Enclosure::SingleQuote:
      return bracket_mark(BracketKind::SingleQuote, Side::Open);
    default: throw std::logic_error("not a bracket enclosure");
  }
}

inline void emit_node(const SyntNode& n, LinearizeState& st, bool is_root) {
  std::vector<const Relation*> before, after;
  for (const auto& r : n.rels)
    (r.pos == Pos::Before ? before : after).push_back(&r);
  auto by_order = [](const Relation* a, const Relation* b) {
    return a->order < b->order;
  };
  std::sort(before.begin(), before.end(), by_order);
  std::sort(after.begin(), after.end(), by_order);

  // Phrase-level italics alternate against the enclosing italic scope.
  std::optional<VisualAttrs> vis = n.attrs.visual;
  bool opens_italic = false;
  if (vis && vis->font == Font::Italic) {
    opens_italic = true;
    if (st.italic_depth % 2 == 1) vis->font = Font::Roman;
    ++st.italic_depth;
  }

  int first = static_cast<int>(st.seq.tokens.size());

  for (const auto* r : before) emit_node(r->child.front(), st, false);

  if (n.lexeme.abbrev_period &&
      (n.lexeme.surface.empty() || n.lexeme.surface.back() != '.'))
    throw ValidationError("abbreviation-period word must end in '.'",
                          n.lexeme.surface);
  int self = static_cast<int>(st.seq.tokens.size());
  st.seq.tokens.push_back(LinearToken{n.lexeme, {}, {}});
  // Lexical quote marks become stream brackets around this word alone.
  std::optional<int> lex_pair;
  for (const auto& am : n.lexeme.lexical_marks) {
    BoundaryMark bm;
    bm.mark = am.mark;
    bm.origin_first = bm.origin_last = self;
    if (am.mark.is_bracket()) {
      if (!lex_pair) lex_pair = st.next_pair++;
      bm.pair_id = *lex_pair;
    }
    if (am.side == Side::Open)
      st.seq.tokens[self].left.push_back(bm);
    else
      st.seq.tokens[self].right.push_back(bm);
  }
  if (!is_default(n.lexeme.visual)) {
    VisualAttrs v = n.lexeme.visual;
    if (v.font == Font::Italic && st.italic_depth % 2 == 1) v.font = Font::Roman;
    st.overlay.spans.push_back({self, self, v});
  }

  for (const auto* r : after) emit_node(r->child.front(), st, false);

  int last = static_cast<int>(st.seq.tokens.size()) - 1;
  auto& lt = st.seq.tokens[first].left;
  auto& rt = st.seq.tokens[last].right;

  if (n.attrs.terminal && !is_root) {
    BoundaryMark bm;
    if (n.attrs.terminal->is_tone())
      bm.mark = tone_mark(std::get<ToneKind>(n.attrs.terminal->mark));
    else
      bm.mark = point_mark(std::get<PointKind>(n.attrs.terminal->mark));
    bm.origin_first = first;
    bm.origin_last = last;
    rt.push_back(bm);
  }

  for (const auto& e : n.attrs.btw) {  // innermost first
    if (e.kind == Enclosure::Comma || e.kind == Enclosure::Dash) {
      PointKind p = e.kind == Enclosure::Comma ? PointKind::Comma : PointKind::Dash;
      BoundaryMark bm;
      bm.mark = point_mark(p, e.origin);
      bm.origin_first = first;
      bm.origin_last = last;
      lt.insert(lt.begin(), bm);
      rt.push_back(bm);
    } else if (e.kind == Enclosure::ColonExpansion ||
               e.kind == Enclosure::DashExpansion) {
      PointKind p = e.kind == Enclosure::ColonExpansion ? PointKind::Colon
                                                        : PointKind::Dash;
      BoundaryMark bm;
      bm.mark = point_mark(p, e.origin);
      bm.origin_first = first;
      bm.origin_last = last;
      lt.insert(lt.begin(), bm);
    } else {
      int pair = st.next_pair++;
      BoundaryMark open, close;
      open.mark = open_of(e.kind);
      close.mark = open.mark;
      std::get<Bracket>(close.mark.variant).side = Side::Close;
      open.pair_id = close.pair_id = pair;
      open.origin_first = close.origin_first = first;
      open.origin_last = close.origin_last = last;
      lt.insert(lt.begin(), open);
      rt.push_back(close);
    }
  }

  if (n.attrs.sep) {
    BoundaryMark bm;
    bm.mark = point_mark(n.attrs.sep->first, n.attrs.sep->second);
    bm.origin_first = first;
    bm.origin_last = last;
    lt.insert(lt.begin(), bm);
  }
  if (n.attrs.trailing_comma) {
    BoundaryMark bm;
    bm.mark = point_mark(PointKind::Comma, MarkOrigin::Default);
    bm.origin_first = first;
    bm.origin_last = last;
    rt.push_back(bm);
  }

  if (vis && (first <= last)) st.overlay.spans.push_back({first, last, *vis});
  if (opens_italic) --st.italic_depth;
  if (n.tag >= 0) st.tag_spans[n.tag] = {first, last};
}

}  // namespace detail

// In-order traversal emitting the lexeme sequence; phrase attrs compile
// to boundary features, brackets included (their scope must be fixed
// here), visuals to overlay spans, and the sentence terminal to the last
// token's outermost right feature.
inline LinearizeResult linearize(const SyntNode& tree, AmbientDepth amb = {}) {
  detail::LinearizeState st;
  st.italic_depth = amb.italic;
  detail::emit_node(tree, st, true);

  // The walk pushes child spans before their parents; reverse so that
  // outer spans come first and the last containing span is the innermost.
  std::reverse(st.overlay.spans.begin(), st.overlay.spans.end());
  st.overlay.word_count = static_cast<int>(st.seq.tokens.size());

  // Runs of single-word spans with the same attrs act as one span: a
  // styled multi-word lexeme is one logical scope, which tone-indicator
  // harmony and absorption rely on.
  {
    std::vector<VisualSpan> singles, rest;
    for (const auto& s : st.overlay.spans)
      (s.first == s.last ? singles : rest).push_back(s);
    std::stable_sort(singles.begin(), singles.end(),
                     [](const VisualSpan& a, const VisualSpan& b) {
                       return a.first < b.first;
                     });
    std::vector<VisualSpan> merged;
    for (const auto& s : singles) {
      if (!merged.empty() && merged.back().attrs == s.attrs &&
          merged.back().last + 1 == s.first)
        merged.back().last = s.last;
      else
        merged.push_back(s);
    }
    rest.insert(rest.end(), merged.begin(), merged.end());
    st.overlay.spans = std::move(rest);
  }

  // Sentence terminal: a point, or a tone indicator carrying implicit
  // period semantics.  An identical tone already closing the last word
  // merges rather than doubling the mark.
  auto& rt = st.seq.tokens.back().right;
  int last = static_cast<int>(st.seq.tokens.size()) - 1;
  if (!tree.attrs.terminal_none) {
    TerminalSpec t = tree.attrs.terminal.value_or(
        TerminalSpec{PointKind::Period});
    if (t.is_tone()) {
      ToneKind k = std::get<ToneKind>(t.mark);
      bool dup = !rt.empty() && rt.back().mark.is_tone() &&
                 rt.back().mark.tone() == k;
      if (!dup) {
        BoundaryMark bm;
        bm.mark = tone_mark(k);
        bm.origin_first = 0;
        bm.origin_last = last;
        rt.push_back(bm);
      }
      BoundaryMark pd;
      pd.mark = point_mark(PointKind::Period);
      pd.terminal = true;
      pd.origin_first = 0;
      pd.origin_last = last;
      rt.push_back(pd);
    } else {
      BoundaryMark bm;
      bm.mark = point_mark(std::get<PointKind>(t.mark));
      bm.terminal = true;
      bm.origin_first = 0;
      bm.origin_last = last;
      rt.push_back(bm);
    }
  }

  LinearizeResult out;
  out.seq = std::move(st.seq);
  out.overlay = std::move(st.overlay);
  out.tag_spans = std::move(st.tag_spans);
  return out;
}

}  // namespace punct

#endif
