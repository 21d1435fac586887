#ifndef PUNCT_MARKS_HPP
#define PUNCT_MARKS_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Core mark taxonomy: points ranked by strength, paired brackets, tone
// indicators, and the lexeme/visual attributes shared by every stage.

namespace punct {

enum class PointKind { Comma, Dash, Semicolon, Colon, Period };

// Strength rank; total order Comma < Dash < Semicolon < Colon < Period.
inline int strength(PointKind p) {
  switch (p) {
    case PointKind::Comma: return 1;
    case PointKind::Dash: return 2;
    case PointKind::Semicolon: return 3;
    case PointKind::Colon: return 4;
    case PointKind::Period: return 5;
  }
  throw std::logic_error("unknown point kind");
}

inline const char* name(PointKind p) {
  switch (p) {
    case PointKind::Comma: return "comma";
    case PointKind::Dash: return "dash";
    case PointKind::Semicolon: return "semicolon";
    case PointKind::Colon: return "colon";
    case PointKind::Period: return "period";
  }
  return "?";
}

enum class BracketKind { Paren, Square, DoubleQuote, SingleQuote };
enum class Side { Open, Close };

struct Bracket {
  BracketKind kind;
  Side side;
  bool operator==(const Bracket&) const = default;
};

inline bool is_quote(BracketKind k) {
  return k == BracketKind::DoubleQuote || k == BracketKind::SingleQuote;
}

enum class ToneKind { QuestionMark, ExclamationPoint };

enum class MarkOrigin { Explicit, Default, Promoted, Lexical };

// A presentation mark: point, bracket half, or tone indicator.
struct Mark {
  std::variant<PointKind, Bracket, ToneKind> variant;
  MarkOrigin origin = MarkOrigin::Explicit;

  bool is_point() const { return std::holds_alternative<PointKind>(variant); }
  bool is_bracket() const { return std::holds_alternative<Bracket>(variant); }
  bool is_tone() const { return std::holds_alternative<ToneKind>(variant); }
  PointKind point() const { return std::get<PointKind>(variant); }
  Bracket bracket() const { return std::get<Bracket>(variant); }
  ToneKind tone() const { return std::get<ToneKind>(variant); }
};

inline Mark point_mark(PointKind k, MarkOrigin o = MarkOrigin::Explicit) {
  return Mark{k, o};
}
inline Mark bracket_mark(BracketKind k, Side s,
                         MarkOrigin o = MarkOrigin::Explicit) {
  return Mark{Bracket{k, s}, o};
}
inline Mark tone_mark(ToneKind k, MarkOrigin o = MarkOrigin::Explicit) {
  return Mark{k, o};
}

enum class Font { Roman, Italic };
enum class Face { Regular, Bold };

struct VisualAttrs {
  Font font = Font::Roman;
  Face face = Face::Regular;
  bool operator==(const VisualAttrs&) const = default;
};

inline bool is_default(const VisualAttrs& v) { return v == VisualAttrs{}; }

// A mark attached lexically to one word, with the side it sits on.
struct AttachedMark {
  Mark mark;
  Side side;
};

// A word together with its lexical attributes.  Abbreviation periods are
// part of the surface form, never Point marks, so point absorption cannot
// see them.
struct Lexeme {
  std::string surface;
  bool abbrev_period = false;
  VisualAttrs visual;
  std::vector<AttachedMark> lexical_marks;
};

}  // namespace punct

#endif
