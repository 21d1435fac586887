#ifndef PUNCT_TESTS_HELPERS_HPP
#define PUNCT_TESTS_HELPERS_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "punct/punct.hpp"

namespace punct_tests {

// Build a sentence tree through the published input schema.
inline punct::SyntNode tree_from_json(const std::string& node_json) {
  std::string doc = R"({"schema":"1","blocks":[)" + node_json + "]}";
  punct::ParsedInput in = punct::parse_input(doc);
  return std::get<punct::SentenceBlock>(in.doc.blocks.at(0).v).root;
}

inline punct::Document doc_from_json(const std::string& blocks_json) {
  std::string doc = R"({"schema":"1","blocks":)" + blocks_json + "}";
  return punct::parse_input(doc).doc;
}

inline std::string realize_plain(const std::string& node_json,
                                 punct::Config cfg = {}) {
  cfg.output_format = punct::OutputFormat::Plain;
  return punct::realize_sentence(tree_from_json(node_json), cfg);
}

// Feed a pointed sequence back through insertion as boundary features;
// used for the fixed-point check.
inline punct::LinearSeq reinterpret_as_features(const punct::PointedSeq& seq) {
  punct::LinearSeq out;
  std::vector<punct::BoundaryMark> pending;
  auto flush_left = [&](punct::LinearToken& t) {
    t.left = pending;
    pending.clear();
  };
  for (const auto& item : seq.items) {
    if (item.is_word()) {
      punct::LinearToken t;
      t.lex = item.word;
      flush_left(t);
      out.tokens.push_back(std::move(t));
    } else {
      punct::BoundaryMark bm;
      bm.mark = item.mark;
      bm.pair_id = item.pair_id;
      bm.origin_first = item.origin_first;
      bm.origin_last = item.origin_last;
      pending.push_back(bm);
    }
  }
  if (seq.terminal) {
    punct::BoundaryMark bm;
    bm.mark = seq.terminal->mark;
    bm.terminal = true;
    pending.push_back(bm);
  }
  if (!out.tokens.empty())
    for (auto& bm : pending) out.tokens.back().right.push_back(bm);
  return out;
}

// ---- independent oracles ----

// Point absorption: strongest wins, equal-strength candidates merge.
inline std::optional<punct::PointKind> strongest_wins(
    const std::vector<punct::PointKind>& candidates) {
  std::optional<punct::PointKind> best;
  for (auto k : candidates)
    if (!best || punct::strength(k) > punct::strength(*best)) best = k;
  return best;
}

// Brute-force per-token visual assignment: apply spans outermost-first,
// later (inner) spans overwrite.
inline std::vector<punct::VisualAttrs> brute_visual(
    const std::vector<punct::VisualSpan>& spans, int n) {
  std::vector<punct::VisualAttrs> out(static_cast<size_t>(n));
  for (const auto& s : spans)
    for (int i = s.first; i <= s.last && i < n; ++i)
      out[static_cast<size_t>(i)] = s.attrs;
  return out;
}

// Explicit nesting-walk oracle: match bracket pairs over the flattened
// stream, then absorb a point iff it lies inside some pair and sits at
// that pair's boundary with no word between.
struct ScopeOracleItem {
  enum Kind { Word, Open, Close, Point } kind;
  punct::BracketKind bracket{};
  punct::PointKind point{};
};

inline std::vector<bool> scope_oracle(const std::vector<ScopeOracleItem>& flat) {
  std::vector<std::pair<size_t, size_t>> pairs;
  std::vector<size_t> stack;
  for (size_t i = 0; i < flat.size(); ++i) {
    if (flat[i].kind == ScopeOracleItem::Open) stack.push_back(i);
    if (flat[i].kind == ScopeOracleItem::Close) {
      pairs.emplace_back(stack.back(), i);
      stack.pop_back();
    }
  }
  auto word_free = [&](size_t a, size_t b) {  // exclusive bounds
    for (size_t j = a + 1; j < b; ++j)
      if (flat[j].kind == ScopeOracleItem::Word) return false;
    return true;
  };
  std::vector<bool> absorbed;
  for (size_t p = 0; p < flat.size(); ++p) {
    if (flat[p].kind != ScopeOracleItem::Point) continue;
    bool dead = false;
    for (auto [o, c] : pairs) {
      if (!(o < p && p < c)) continue;
      if (word_free(p, c) || word_free(o, p)) dead = true;
    }
    absorbed.push_back(dead);
  }
  return absorbed;
}

// Re-tokenize tagged render output, given the words in order.  Quote
// glyphs are sided by an open-quote stack; attrs track the live tags.
struct RetokItem {
  bool is_word = false;
  std::string word;
  punct::Mark mark{punct::PointKind::Comma, punct::MarkOrigin::Explicit};
  punct::VisualAttrs attrs;
};

inline std::vector<RetokItem> retokenize_tagged(
    const std::string& s, const std::vector<std::string>& words) {
  std::vector<RetokItem> out;
  punct::VisualAttrs cur;
  std::vector<punct::BracketKind> quote_stack;
  size_t w = 0;
  size_t i = 0;
  auto starts = [&](const char* t) {
    return s.compare(i, std::strlen(t), t) == 0;
  };
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (starts("<i>")) { cur.font = punct::Font::Italic; i += 3; continue; }
    if (starts("</i>")) { cur.font = punct::Font::Roman; i += 4; continue; }
    if (starts("<b>")) { cur.face = punct::Face::Bold; i += 3; continue; }
    if (starts("</b>")) { cur.face = punct::Face::Regular; i += 4; continue; }
    if (w < words.size() && s.compare(i, words[w].size(), words[w]) == 0) {
      RetokItem item;
      item.is_word = true;
      item.word = words[w];
      item.attrs = cur;
      out.push_back(item);
      i += words[w].size();
      ++w;
      continue;
    }
    RetokItem item;
    item.attrs = cur;
    char c = s[i];
    if (starts("\xE2\x80\x94")) {
      item.mark = punct::point_mark(punct::PointKind::Dash);
      i += 3;
    } else if (c == ',' || c == ';' || c == ':' || c == '.') {
      item.mark = punct::point_mark(
          c == ',' ? punct::PointKind::Comma
                   : c == ';' ? punct::PointKind::Semicolon
                              : c == ':' ? punct::PointKind::Colon
                                         : punct::PointKind::Period);
      ++i;
    } else if (c == '?' || c == '!') {
      item.mark = punct::tone_mark(c == '?' ? punct::ToneKind::QuestionMark
                                            : punct::ToneKind::ExclamationPoint);
      ++i;
    } else if (c == '(' || c == ')' || c == '[' || c == ']') {
      punct::BracketKind k =
          (c == '(' || c == ')') ? punct::BracketKind::Paren
                                 : punct::BracketKind::Square;
      item.mark = punct::bracket_mark(
          k, (c == '(' || c == '[') ? punct::Side::Open : punct::Side::Close);
      ++i;
    } else if (c == '"' || c == '\'') {
      punct::BracketKind k = c == '"' ? punct::BracketKind::DoubleQuote
                                      : punct::BracketKind::SingleQuote;
      punct::Side side = punct::Side::Open;
      if (!quote_stack.empty() && quote_stack.back() == k)
        side = punct::Side::Close;
      if (side == punct::Side::Open)
        quote_stack.push_back(k);
      else
        quote_stack.pop_back();
      item.mark = punct::bracket_mark(k, side);
      ++i;
    } else {
      throw std::runtime_error("retokenize: unexpected byte at " +
                               std::to_string(i) + " in: " + s);
    }
    out.push_back(item);
  }
  return out;
}

}  // namespace punct_tests

#endif
