#ifndef PUNCT_MORPH_HPP
#define PUNCT_MORPH_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "punct/linear.hpp"
#include "punct/tree.hpp"

// Adjacency-sensitive rules.  Points vying at one insertion site are
// merged into at most one presented mark; brackets absorb points within
// their scope at their own boundary.

namespace punct {

struct SiteCandidate {
  PointKind kind;
  MarkOrigin origin = MarkOrigin::Explicit;
  bool terminal = false;
  int entry = 0;  // position in the site's ordered mark list
};

struct SiteBracket {
  Bracket bracket;
  int entry = 0;
  int pair_id = -1;
};

// One inter-token gap.  The ordered mark list mirrors boundary-feature
// scope: a candidate left of an Open or right of a Close lies outside
// that bracket, anything else at the site lies inside it.
struct InsertionSite {
  int position = 0;  // gap before token `position`; last gap == token count
  std::vector<SiteCandidate> candidates;
  std::vector<SiteBracket> adjacent_brackets;
  std::vector<BoundaryMark> entries;
};

inline std::vector<InsertionSite> collect_sites(const LinearSeq& seq) {
  std::vector<InsertionSite> sites;
  int n = static_cast<int>(seq.tokens.size());
  for (int g = 0; g <= n; ++g) {
    InsertionSite site;
    site.position = g;
    if (g > 0)
      for (const auto& bm : seq.tokens[g - 1].right) site.entries.push_back(bm);
    if (g < n)
      for (const auto& bm : seq.tokens[g].left) site.entries.push_back(bm);
    for (int i = 0; i < static_cast<int>(site.entries.size()); ++i) {
      const auto& bm = site.entries[i];
      if (bm.mark.is_point())
        site.candidates.push_back(
            {bm.mark.point(), bm.mark.origin, bm.terminal, i});
      else if (bm.mark.is_bracket())
        site.adjacent_brackets.push_back({bm.mark.bracket(), i, bm.pair_id});
    }
    sites.push_back(std::move(site));
  }
  return sites;
}

namespace detail {

// A candidate is within a bracket's scope at this site when an Open
// precedes it or a Close follows it in the site's mark list.
inline bool bracket_absorbed(const InsertionSite& site, const SiteCandidate& c) {
  for (const auto& b : site.adjacent_brackets) {
    if (b.bracket.side == Side::Open && b.entry < c.entry) return true;
    if (b.bracket.side == Side::Close && b.entry > c.entry) return true;
  }
  return false;
}

inline std::optional<SiteCandidate> resolve_site(const InsertionSite& site,
                                                 const Config& cfg) {
  std::optional<SiteCandidate> best;
  for (const auto& c : site.candidates) {
    if (bracket_absorbed(site, c)) continue;
    if (!best || strength(c.kind) > strength(best->kind)) best = c;
  }
  if (best && cfg.prefer_promoted_semicolon && best->kind == PointKind::Colon) {
    for (const auto& c : site.candidates)
      if (!bracket_absorbed(site, c) && c.kind == PointKind::Semicolon &&
          c.origin == MarkOrigin::Promoted)
        return c;
  }
  return best;
}

}  // namespace detail

// Two-step point insertion: collect the candidates per site, then present
// at most the strongest survivor.  Brackets and tones pass through into
// the stream; abbreviation periods are surface characters and invisible
// here.  Site resolution is order-independent, so the result is too.
inline PointedSeq insert_points(const LinearSeq& seq, const Config& cfg = {}) {
  auto sites = collect_sites(seq);
  PointedSeq out;
  int uid = 0;
  int n = static_cast<int>(seq.tokens.size());

  for (int g = 0; g <= n; ++g) {
    const InsertionSite& site = sites[g];
    auto winner = detail::resolve_site(site, cfg);
    bool final_gap = (g == n);
    for (int i = 0; i < static_cast<int>(site.entries.size()); ++i) {
      const BoundaryMark& bm = site.entries[i];
      if (bm.mark.is_point()) {
        if (winner && winner->entry == i) {
          Token t = mark_token(point_mark(winner->kind, winner->origin), uid++);
          t.origin_first = bm.origin_first;
          t.origin_last = bm.origin_last;
          if (final_gap)
            out.terminal = t;
          else
            out.items.push_back(t);
        }
      } else {
        Token t = mark_token(bm.mark, uid++);
        t.pair_id = bm.pair_id;
        t.origin_first = bm.origin_first;
        t.origin_last = bm.origin_last;
        out.items.push_back(t);
      }
    }
    if (g < n)
      out.items.push_back(word_token(seq.tokens[g].lex, g));
  }
  return out;
}

// Structural invariants every later stage must preserve.
inline bool points_never_adjacent(const PointedSeq& seq) {
  const Token* prev = nullptr;
  for (const auto& t : seq.items) {
    if (t.is_point() && prev && prev->is_point()) return false;
    prev = &t;
  }
  if (seq.terminal && seq.terminal->is_point() && prev && prev->is_point())
    return false;
  return true;
}

inline bool brackets_balanced(const PointedSeq& seq) {
  std::vector<BracketKind> stack;
  for (const auto& t : seq.items) {
    if (!t.is_bracket()) continue;
    Bracket b = t.mark.bracket();
    if (b.side == Side::Open) {
      stack.push_back(b.kind);
    } else {
      if (stack.empty() || stack.back() != b.kind) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

}  // namespace punct

#endif
