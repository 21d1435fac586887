#ifndef PUNCT_OVERLAY_HPP
#define PUNCT_OVERLAY_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "punct/marks.hpp"

namespace punct {

// Font/face span over word ordinals, inclusive on both ends.  The overlay
// is orthogonal to the token stream: removing it leaves the stream intact.
struct VisualSpan {
  int first = 0;
  int last = 0;
  VisualAttrs attrs;
  bool operator==(const VisualSpan&) const = default;
};

struct VisualOverlay {
  std::vector<VisualSpan> spans;  // outer spans before inner ones
  int word_count = 0;
  // Filled by harmonize: resolved attrs per mark uid.
  std::map<int, VisualAttrs> mark_attrs;

  // Innermost enclosing span's attrs; Roman/Regular when uncovered.
  VisualAttrs resolve(int word_ordinal) const {
    if (word_ordinal < 0 || word_ordinal >= word_count)
      throw std::out_of_range("visual overlay index out of range");
    VisualAttrs out;
    for (const auto& s : spans)
      if (s.first <= word_ordinal && word_ordinal <= s.last) out = s.attrs;
    return out;
  }

  // Innermost span covering the ordinal, or nullptr.
  const VisualSpan* innermost(int word_ordinal) const {
    const VisualSpan* found = nullptr;
    for (const auto& s : spans)
      if (s.first <= word_ordinal && word_ordinal <= s.last) found = &s;
    return found;
  }
};

}  // namespace punct

#endif
