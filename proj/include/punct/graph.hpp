#ifndef PUNCT_GRAPH_HPP
#define PUNCT_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "punct/linear.hpp"
#include "punct/morph.hpp"
#include "punct/overlay.hpp"
#include "punct/tree.hpp"

// Graphical-form rules: quote transposition, graphic absorption, font and
// face harmony, and rendering to an output format.  The three rules are
// confluent; the fixed order here is one of the admissible ones.

namespace punct {

namespace detail {

inline bool is_close_quote(const Token& t) {
  return t.is_bracket() && t.mark.bracket().side == Side::Close &&
         is_quote(t.mark.bracket().kind);
}

inline bool transposable(const Token& t) {
  return t.is_point() && (t.mark.point() == PointKind::Comma ||
                          t.mark.point() == PointKind::Period);
}

}  // namespace detail

// American practice: commas and periods move inside closing quotes, to
// the innermost of a run of closes.  Semicolons, colons, dashes and tone
// indicators stay put.  Precise style leaves everything alone.
inline PointedSeq transpose_quotes(PointedSeq seq, const Config& cfg) {
  if (cfg.quote_style == QuoteStyle::Precise) return seq;

  // Fold the terminal in so it can move like any other mark.
  bool had_terminal = seq.terminal.has_value();
  if (had_terminal) seq.items.push_back(*seq.terminal);

  for (size_t i = 1; i < seq.items.size(); ++i) {
    if (!detail::transposable(seq.items[i])) continue;
    if (!detail::is_close_quote(seq.items[i - 1])) continue;
    size_t run_start = i - 1;
    while (run_start > 0 && detail::is_close_quote(seq.items[run_start - 1]))
      --run_start;
    Token moved = seq.items[i];
    seq.items.erase(seq.items.begin() + static_cast<long>(i));
    seq.items.insert(seq.items.begin() + static_cast<long>(run_start), moved);
  }

  if (had_terminal) {
    if (seq.items.back().is_point())
      seq.terminal = seq.items.back();
    else
      seq.terminal.reset();
    if (seq.terminal)
      seq.items.pop_back();
  }
  return seq;
}

// Sentence-ending periods are absorbed by abbreviation periods and tone
// indicators.  Brackets block the absorption; font and face changes are
// transparent to adjacency unless the tone-after-italics toggle is off.
inline PointedSeq absorb_graphic(PointedSeq seq, const VisualOverlay& overlay,
                                 const Config& cfg) {
  auto absorbed = [&](const Token& period, const Token* prev) {
    if (!prev) return false;
    if (prev->is_word() && prev->word.abbrev_period) return true;
    if (prev->is_tone()) {
      if (cfg.tone_italic_absorption) return true;
      // The span boundary behaves like an intervening directive.
      const VisualSpan* s = nullptr;
      if (prev->origin_first >= 0) s = overlay.innermost(prev->origin_first);
      bool span_separated = s && !is_default(s->attrs) &&
                            prev->origin_first >= s->first &&
                            prev->origin_last <= s->last &&
                            period.origin_first < s->first;
      return !span_separated;
    }
    return false;
  };

  PointedSeq out;
  for (const auto& t : seq.items) {
    const Token* prev = out.items.empty() ? nullptr : &out.items.back();
    if (t.is_point() && t.mark.point() == PointKind::Period &&
        absorbed(t, prev))
      continue;
    out.items.push_back(t);
  }
  if (seq.terminal) {
    const Token* prev = out.items.empty() ? nullptr : &out.items.back();
    bool drop = seq.terminal->is_point() &&
                seq.terminal->mark.point() == PointKind::Period &&
                absorbed(*seq.terminal, prev);
    if (!drop) out.terminal = seq.terminal;
  }
  return out;
}

namespace detail {

inline const Token* nearest_word_left(const std::vector<Token>& items, int i) {
  for (int j = i - 1; j >= 0; --j)
    if (items[j].is_word()) return &items[j];
  return nullptr;
}

inline const Token* nearest_word_right(const std::vector<Token>& items, int i) {
  for (int j = i + 1; j < static_cast<int>(items.size()); ++j)
    if (items[j].is_word()) return &items[j];
  return nullptr;
}

inline VisualAttrs word_attrs(const VisualOverlay& ov, const Token* w) {
  if (!w) return {};
  return ov.resolve(w->word_ordinal);
}

// Exception for tone indicators: italics do not spread beyond their
// logical scope, so the tone takes the span's attrs only when its
// originating phrase lies inside the span.
inline VisualAttrs tone_attrs(const VisualOverlay& ov, const Token& tone,
                              const Token* left_word) {
  if (!left_word) return {};
  const VisualSpan* s = ov.innermost(left_word->word_ordinal);
  if (!s || is_default(s->attrs)) return word_attrs(ov, left_word);
  if (tone.origin_first >= s->first && tone.origin_last <= s->last)
    return s->attrs;
  return {};
}

}  // namespace detail

// Marks acquire the font and face of the text they attach to: points and
// tones look left, open brackets right, close brackets left.  Matched
// bracket pairs harmonize only when both ends agree; tones only within
// their logical scope.
inline VisualOverlay harmonize(const PointedSeq& seq,
                               const VisualOverlay& overlay,
                               const Config& cfg) {
  VisualOverlay out = overlay;
  out.mark_attrs.clear();

  std::vector<Token> all = seq.items;
  if (seq.terminal) all.push_back(*seq.terminal);

  if (!cfg.harmony) {
    for (const auto& t : all)
      if (t.is_mark()) out.mark_attrs[t.uid] = VisualAttrs{};
    return out;
  }

  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    const Token& t = all[i];
    if (!t.is_mark()) continue;
    if (t.is_point()) {
      out.mark_attrs[t.uid] =
          detail::word_attrs(out, detail::nearest_word_left(all, i));
    } else if (t.is_tone()) {
      out.mark_attrs[t.uid] =
          detail::tone_attrs(out, t, detail::nearest_word_left(all, i));
    }
  }

  // Bracket pairs: both ends or neither.
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    const Token& t = all[i];
    if (!t.is_bracket() || t.mark.bracket().side != Side::Open) continue;
    VisualAttrs open_side =
        detail::word_attrs(out, detail::nearest_word_right(all, i));
    VisualAttrs close_side{};
    int close_uid = -1;
    for (int j = i + 1; j < static_cast<int>(all.size()); ++j) {
      if (all[j].is_bracket() && all[j].pair_id == t.pair_id &&
          all[j].mark.bracket().side == Side::Close) {
        close_side = detail::word_attrs(out, detail::nearest_word_left(all, j));
        close_uid = all[j].uid;
        break;
      }
    }
    VisualAttrs both = (open_side == close_side) ? open_side : VisualAttrs{};
    out.mark_attrs[t.uid] = both;
    if (close_uid >= 0) out.mark_attrs[close_uid] = both;
  }
  return out;
}

namespace detail {

inline std::string glyph(const Mark& m, const Config& cfg) {
  if (m.is_point()) {
    switch (m.point()) {
      case PointKind::Comma: return ",";
      case PointKind::Dash: return cfg.ascii_dash ? "--" : "\xE2\x80\x94";
      case PointKind::Semicolon: return ";";
      case PointKind::Colon: return ":";
      case PointKind::Period: return ".";
    }
  }
  if (m.is_tone())
    return m.tone() == ToneKind::QuestionMark ? "?" : "!";
  Bracket b = m.bracket();
  switch (b.kind) {
    case BracketKind::Paren: return b.side == Side::Open ? "(" : ")";
    case BracketKind::Square: return b.side == Side::Open ? "[" : "]";
    case BracketKind::DoubleQuote: return "\"";
    case BracketKind::SingleQuote: return "'";
  }
  return "";
}

inline bool is_open_bracket(const Token& t) {
  return t.is_bracket() && t.mark.bracket().side == Side::Open;
}
inline bool is_close_bracket(const Token& t) {
  return t.is_bracket() && t.mark.bracket().side == Side::Close;
}
inline bool is_quote_tok(const Token& t) {
  return t.is_bracket() && is_quote(t.mark.bracket().kind);
}
inline bool is_dash_tok(const Token& t) {
  return t.is_point() && t.mark.point() == PointKind::Dash;
}

// Spacing between two adjacent stream items.
inline std::string separator(const Token& prev, const Token& next) {
  if (is_quote_tok(prev) && is_quote_tok(next) &&
      prev.mark.bracket().side == next.mark.bracket().side)
    return " ";
  if (next.is_point() || next.is_tone()) return "";
  if (is_close_bracket(next)) return "";
  if (is_open_bracket(prev)) return "";
  if (is_dash_tok(prev)) return "";
  if (prev.is_point() && prev.mark.point() == PointKind::Colon) return "  ";
  if (prev.is_point() && prev.mark.point() == PointKind::Period) return "  ";
  if (prev.is_tone()) return "  ";
  return " ";
}

inline std::string text_of(const Token& t, const Config& cfg) {
  return t.is_word() ? t.word.surface : glyph(t.mark, cfg);
}

inline VisualAttrs attrs_of(const Token& t, const VisualOverlay& ov) {
  if (t.is_word()) return ov.resolve(t.word_ordinal);
  auto it = ov.mark_attrs.find(t.uid);
  return it == ov.mark_attrs.end() ? VisualAttrs{} : it->second;
}

inline std::string open_str(VisualAttrs a, bool directive) {
  std::string s;
  if (a.font == Font::Italic) s += directive ? ":BEG-ITAL" : "<i>";
  if (a.face == Face::Bold) {
    if (directive && !s.empty()) s += " ";
    s += directive ? ":BEG-BOLD" : "<b>";
  }
  return s;
}

inline std::string close_str(VisualAttrs a, bool directive) {
  std::string s;
  if (a.face == Face::Bold) s += directive ? ":END-BOLD" : "</b>";
  if (a.font == Font::Italic) {
    if (directive && !s.empty()) s += " ";
    s += directive ? ":END-ITAL" : "</i>";
  }
  return s;
}

}  // namespace detail

// Deterministic rendering.  Plain drops the overlay; tagged wraps maximal
// same-attrs runs in <i>/<b>; directive emits :BEG-ITAL style tokens with
// single spaces around them.
inline std::string render(const PointedSeq& seq, const VisualOverlay& overlay,
                          OutputFormat fmt, const Config& cfg = {}) {
  std::vector<Token> all = seq.items;
  if (seq.terminal) all.push_back(*seq.terminal);
  if (all.empty()) return "";

  bool directive = fmt == OutputFormat::Directive;
  std::string out;
  VisualAttrs cur{};
  for (size_t i = 0; i < all.size(); ++i) {
    std::string sep = i == 0 ? "" : detail::separator(all[i - 1], all[i]);
    std::string text = detail::text_of(all[i], cfg);
    if (fmt == OutputFormat::Plain) {
      out += sep + text;
      continue;
    }
    VisualAttrs a = detail::attrs_of(all[i], overlay);
    if (a == cur) {
      out += sep + text;
      continue;
    }
    std::string close = detail::close_str(cur, directive);
    std::string open = detail::open_str(a, directive);
    if (directive) {
      // Directives are tokens of their own, set off by single spaces.
      if (!close.empty()) out += (i == 0 ? "" : " ") + close;
      if (!close.empty() || !open.empty()) {
        if (sep.empty() && i > 0) sep = " ";
      }
      out += sep;
      if (!open.empty()) out += open + " ";
      out += text;
    } else {
      out += close + sep + open + text;
    }
    cur = a;
  }
  if (fmt != OutputFormat::Plain) {
    std::string close = detail::close_str(cur, directive);
    if (!close.empty()) out += directive ? " " + close : close;
  }
  return out;
}

}  // namespace punct

#endif
