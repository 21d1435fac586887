#ifndef PUNCT_LINEAR_HPP
#define PUNCT_LINEAR_HPP

#include <optional>
#include <vector>

#include "punct/marks.hpp"
#include "punct/overlay.hpp"

namespace punct {

// One mark sitting on a token boundary.  Left lists read left-to-right
// (outermost enclosure first), right lists likewise (innermost first), so
// list order encodes scope relative to bracket marks at the same site.
struct BoundaryMark {
  Mark mark;
  bool terminal = false;    // sentence-final feature
  int pair_id = -1;         // matching open/close share an id
  int origin_first = -1;    // word span of the phrase that produced the
  int origin_last = -1;     // mark (tones and brackets)
};

struct LinearToken {
  Lexeme lex;
  std::vector<BoundaryMark> left;
  std::vector<BoundaryMark> right;
};

enum class SentenceRole { Independent, Embedded };

// Linearized sentence with unmerged boundary features: a boundary list
// may still hold several points vying for one site.
struct LinearSeq {
  std::vector<LinearToken> tokens;
  SentenceRole role = SentenceRole::Independent;
};

// Stream item after point insertion: a word or a single presented mark.
struct Token {
  enum class Kind { Word, MarkTok } kind = Kind::Word;
  Lexeme word;
  Mark mark;
  int uid = -1;
  int pair_id = -1;
  int word_ordinal = -1;
  int origin_first = -1;
  int origin_last = -1;

  bool is_word() const { return kind == Kind::Word; }
  bool is_mark() const { return kind == Kind::MarkTok; }
  bool is_point() const { return is_mark() && mark.is_point(); }
  bool is_bracket() const { return is_mark() && mark.is_bracket(); }
  bool is_tone() const { return is_mark() && mark.is_tone(); }
};

inline Token word_token(Lexeme lex, int ordinal) {
  Token t;
  t.kind = Token::Kind::Word;
  t.word = std::move(lex);
  t.word_ordinal = ordinal;
  return t;
}

inline Token mark_token(Mark m, int uid) {
  Token t;
  t.kind = Token::Kind::MarkTok;
  t.mark = m;
  t.uid = uid;
  return t;
}

// Lexemes interleaved with explicit marks; at most one point per site, so
// no two point tokens are ever adjacent.  The sentence-final point, when
// one survives, lives in `terminal`.
struct PointedSeq {
  std::vector<Token> items;
  std::optional<Token> terminal;

  int word_count() const {
    int n = 0;
    for (const auto& t : items) n += t.is_word();
    return n;
  }
};

}  // namespace punct

#endif
