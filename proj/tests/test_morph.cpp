#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "punct/punct.hpp"

using namespace punct;

namespace {

LinearToken tok(const char* s) {
  LinearToken t;
  t.lex.surface = s;
  return t;
}

BoundaryMark bp(PointKind k, MarkOrigin o = MarkOrigin::Explicit) {
  BoundaryMark bm;
  bm.mark = point_mark(k, o);
  return bm;
}

BoundaryMark bb(BracketKind k, Side s, int pair) {
  BoundaryMark bm;
  bm.mark = bracket_mark(k, s);
  bm.pair_id = pair;
  return bm;
}

std::vector<PointKind> emitted_points(const PointedSeq& seq) {
  std::vector<PointKind> out;
  for (const auto& t : seq.items)
    if (t.is_point()) out.push_back(t.mark.point());
  if (seq.terminal && seq.terminal->is_point())
    out.push_back(seq.terminal->mark.point());
  return out;
}

const PointKind kAll[] = {PointKind::Comma, PointKind::Dash,
                          PointKind::Semicolon, PointKind::Colon,
                          PointKind::Period};

}  // namespace

TEST_CASE("collect_sites gathers vying points per gap") {
  LinearSeq seq;
  seq.tokens = {tok("CoGenTex"), tok("will")};
  seq.tokens[0].right = {bp(PointKind::Comma), bp(PointKind::Dash)};
  auto sites = collect_sites(seq);
  REQUIRE(sites.size() == 3);
  CHECK(sites[0].candidates.empty());
  REQUIRE(sites[1].candidates.size() == 2);
  CHECK(sites[1].candidates[0].kind == PointKind::Comma);
  CHECK(sites[1].candidates[1].kind == PointKind::Dash);
  CHECK(sites[2].candidates.empty());
}

TEST_CASE("insert_points: strength decides pairwise contests") {
  auto duel = [](PointKind a, PointKind b) {
    LinearSeq seq;
    seq.tokens = {tok("x"), tok("y")};
    seq.tokens[0].right = {bp(a)};
    seq.tokens[1].left = {bp(b)};
    auto out = insert_points(seq);
    auto pts = emitted_points(out);
    REQUIRE(pts.size() == 1);
    return pts[0];
  };
  CHECK(duel(PointKind::Comma, PointKind::Dash) == PointKind::Dash);
  CHECK(duel(PointKind::Comma, PointKind::Semicolon) == PointKind::Semicolon);
  CHECK(duel(PointKind::Comma, PointKind::Colon) == PointKind::Colon);
  CHECK(duel(PointKind::Dash, PointKind::Semicolon) == PointKind::Semicolon);
  CHECK(duel(PointKind::Dash, PointKind::Period) == PointKind::Period);
  CHECK(duel(PointKind::Dash, PointKind::Comma) == PointKind::Dash);
}

TEST_CASE("insert_points: equal-strength candidates merge") {
  LinearSeq seq;
  seq.tokens = {tok("x"), tok("y")};
  seq.tokens[0].right = {bp(PointKind::Comma)};
  seq.tokens[1].left = {bp(PointKind::Comma)};
  auto pts = emitted_points(insert_points(seq));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == PointKind::Comma);
}

TEST_CASE("bracket absorption: inside-scope dash dies at the close") {
  // A dash-interpolation ending against its host's closing paren.
  LinearSeq seq;
  seq.tokens = {tok("May"), tok("study"), tok("and")};
  seq.tokens[0].left = {bb(BracketKind::Paren, Side::Open, 0)};
  seq.tokens[1].right = {bp(PointKind::Dash),
                         bb(BracketKind::Paren, Side::Close, 0)};
  auto out = insert_points(seq);
  CHECK(emitted_points(out).empty());
  CHECK(brackets_balanced(out));
}

TEST_CASE("bracket absorption: outside-scope dash survives past the close") {
  LinearSeq seq;
  seq.tokens = {tok("the"), tok("lost"), tok("and")};
  seq.tokens[0].left = {bb(BracketKind::Paren, Side::Open, 0)};
  seq.tokens[1].right = {bb(BracketKind::Paren, Side::Close, 0),
                         bp(PointKind::Dash)};
  auto out = insert_points(seq);
  auto pts = emitted_points(out);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == PointKind::Dash);
  // emitted after the close, not inside
  REQUIRE(out.items.size() == 6);
  CHECK(out.items[3].is_bracket());
  CHECK(out.items[4].is_point());
}

TEST_CASE("bracket absorption: embedded period dies, outer comma survives") {
  // The quoted-reply pattern: [left-quote] ... period close-quote comma.
  LinearSeq seq;
  seq.tokens = {tok("reply"), tok("untrustworthy"), tok("was")};
  seq.tokens[1].left = {bb(BracketKind::DoubleQuote, Side::Open, 0)};
  BoundaryMark period = bp(PointKind::Period);
  seq.tokens[1].right = {period, bb(BracketKind::DoubleQuote, Side::Close, 0),
                         bp(PointKind::Comma)};
  auto out = insert_points(seq);
  auto pts = emitted_points(out);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == PointKind::Comma);
}

TEST_CASE("bracket absorption: comma before an open quote is outside scope") {
  LinearSeq seq;
  seq.tokens = {tok("her"), tok("Who")};
  seq.tokens[1].left = {bp(PointKind::Comma),
                        bb(BracketKind::DoubleQuote, Side::Open, 0)};
  seq.tokens[1].right = {bb(BracketKind::DoubleQuote, Side::Close, 0)};
  auto out = insert_points(seq);
  auto pts = emitted_points(out);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == PointKind::Comma);
}

TEST_CASE("insert_points matches the strongest-wins oracle exhaustively") {
  // All candidate multisets of size <= 4 over the five kinds, split every
  // way between the two boundary lists of one site.
  std::vector<std::vector<PointKind>> multisets{{}};
  for (int size = 1; size <= 4; ++size) {
    std::vector<std::vector<PointKind>> next;
    for (const auto& m : multisets)
      if (static_cast<int>(m.size()) == size - 1)
        for (auto k : kAll) {
          if (!m.empty() && strength(m.back()) > strength(k)) continue;
          auto e = m;
          e.push_back(k);
          next.push_back(e);
        }
    multisets.insert(multisets.end(), next.begin(), next.end());
  }

  int cases = 0;
  for (const auto& m : multisets) {
    auto expect = punct_tests::strongest_wins(m);
    for (unsigned split = 0; split < (1u << m.size()); ++split) {
      LinearSeq seq;
      seq.tokens = {tok("x"), tok("y")};
      for (size_t i = 0; i < m.size(); ++i) {
        if (split & (1u << i))
          seq.tokens[0].right.push_back(bp(m[i]));
        else
          seq.tokens[1].left.push_back(bp(m[i]));
      }
      auto pts = emitted_points(insert_points(seq));
      if (expect) {
        REQUIRE(pts.size() == 1);
        REQUIRE(pts[0] == *expect);
      } else {
        REQUIRE(pts.empty());
      }
      ++cases;
    }
  }
  CHECK(cases > 500);
}

TEST_CASE("insert_points output is a fixed point") {
  SyntNode t = punct_tests::tree_from_json(R"({
    "lexeme":"John left","rels":[
      {"rel":"descr-attr","pos":"after","order":1,"child":{"lexeme":"apparently"}},
      {"rel":"coord","pos":"after","order":2,"child":{"lexeme":"Mary stayed"}}]})");
  LinearizeResult lin =
      linearize(apply_default_punctuation(promote_commas(t)));
  PointedSeq once = insert_points(lin.seq);
  PointedSeq twice = insert_points(punct_tests::reinterpret_as_features(once));
  CHECK(emitted_points(once) == emitted_points(twice));
  REQUIRE(once.items.size() == twice.items.size());
  for (size_t i = 0; i < once.items.size(); ++i) {
    CHECK(once.items[i].kind == twice.items[i].kind);
    if (once.items[i].is_word())
      CHECK(once.items[i].word.surface == twice.items[i].word.surface);
  }
}

TEST_CASE("monotonicity: a weaker candidate never changes the outcome") {
  for (auto strong : kAll)
    for (auto weak : kAll) {
      if (strength(weak) >= strength(strong)) continue;
      LinearSeq base;
      base.tokens = {tok("x"), tok("y")};
      base.tokens[0].right = {bp(strong)};
      LinearSeq more = base;
      more.tokens[1].left = {bp(weak)};
      CHECK(emitted_points(insert_points(base)) ==
            emitted_points(insert_points(more)));
    }
}

TEST_CASE("brackets in equals brackets out") {
  LinearSeq seq;
  seq.tokens = {tok("a"), tok("b"), tok("c")};
  seq.tokens[0].left = {bb(BracketKind::Paren, Side::Open, 0)};
  seq.tokens[1].left = {bb(BracketKind::DoubleQuote, Side::Open, 1)};
  seq.tokens[1].right = {bp(PointKind::Period),
                         bb(BracketKind::DoubleQuote, Side::Close, 1)};
  seq.tokens[2].right = {bb(BracketKind::Paren, Side::Close, 0),
                         bp(PointKind::Comma)};
  auto out = insert_points(seq);
  int in_marks = 4, out_marks = 0;
  for (const auto& t : out.items) out_marks += t.is_bracket();
  CHECK(out_marks == in_marks);
  CHECK(brackets_balanced(out));
  CHECK(points_never_adjacent(out));
}

TEST_CASE("promoted semicolon vs expansion colon is config-overridable") {
  LinearSeq seq;
  seq.tokens = {tok("x"), tok("y")};
  seq.tokens[0].right = {bp(PointKind::Semicolon, MarkOrigin::Promoted)};
  seq.tokens[1].left = {bp(PointKind::Colon)};

  auto pts = emitted_points(insert_points(seq));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == PointKind::Colon);

  Config cfg;
  cfg.prefer_promoted_semicolon = true;
  pts = emitted_points(insert_points(seq, cfg));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == PointKind::Semicolon);
}

TEST_CASE("suppression agrees with the nesting-walk oracle") {
  // All sequences of <= 8 tokens, <= 2 bracket pairs, <= 2 points: the
  // acceptance suite runs the full grid; this is a fast spot-sample.
  using punct_tests::ScopeOracleItem;
  std::mt19937 rng(7);
  for (int iter = 0; iter < 4000; ++iter) {
    int n = 2 + static_cast<int>(rng() % 7);
    int pairs = static_cast<int>(rng() % 3);
    struct Pair {
      int open, close;
    };
    std::vector<Pair> ps;
    for (int p = 0; p < pairs; ++p) {
      int a = static_cast<int>(rng() % static_cast<unsigned>(n));
      int b = static_cast<int>(rng() % static_cast<unsigned>(n));
      ps.push_back({std::min(a, b), std::max(a, b)});
    }
    if (ps.size() == 2) {
      // keep them nested or disjoint, endpoints on distinct tokens
      auto& x = ps[0];
      auto& y = ps[1];
      bool nested = (x.open <= y.open && y.close <= x.close) ||
                    (y.open <= x.open && x.close <= y.close);
      bool disjoint = x.close < y.open || y.close < x.open;
      bool shared = x.open == y.open || x.open == y.close ||
                    x.close == y.open || x.close == y.close;
      if ((!nested && !disjoint) || shared) continue;
    }

    LinearSeq seq;
    for (int i = 0; i < n; ++i) seq.tokens.push_back(tok("w"));
    for (size_t p = 0; p < ps.size(); ++p) {
      BracketKind k = p == 0 ? BracketKind::Paren : BracketKind::DoubleQuote;
      seq.tokens[static_cast<size_t>(ps[p].open)].left.insert(
          seq.tokens[static_cast<size_t>(ps[p].open)].left.begin(),
          bb(k, Side::Open, static_cast<int>(p)));
      seq.tokens[static_cast<size_t>(ps[p].close)].right.push_back(
          bb(k, Side::Close, static_cast<int>(p)));
    }
    int points = 1 + static_cast<int>(rng() % 2);
    for (int q = 0; q < points; ++q) {
      int t = static_cast<int>(rng() % static_cast<unsigned>(n));
      auto& lists = (rng() % 2) ? seq.tokens[static_cast<size_t>(t)].right
                                : seq.tokens[static_cast<size_t>(t)].left;
      PointKind k = (q == 0) ? PointKind::Comma : PointKind::Period;
      auto pos = lists.empty() ? 0 : rng() % (lists.size() + 1);
      lists.insert(lists.begin() + static_cast<long>(pos), bp(k));
    }

    // Flatten for the oracle.
    std::vector<ScopeOracleItem> flat;
    std::vector<PointKind> oracle_points;
    for (const auto& t : seq.tokens) {
      for (const auto& bm : t.left) {
        if (bm.mark.is_point())
          flat.push_back({ScopeOracleItem::Point, {}, bm.mark.point()});
        else
          flat.push_back({bm.mark.bracket().side == Side::Open
                              ? ScopeOracleItem::Open
                              : ScopeOracleItem::Close,
                          bm.mark.bracket().kind});
      }
      flat.push_back({ScopeOracleItem::Word});
      for (const auto& bm : t.right) {
        if (bm.mark.is_point())
          flat.push_back({ScopeOracleItem::Point, {}, bm.mark.point()});
        else
          flat.push_back({bm.mark.bracket().side == Side::Open
                              ? ScopeOracleItem::Open
                              : ScopeOracleItem::Close,
                          bm.mark.bracket().kind});
      }
    }
    for (const auto& it : flat)
      if (it.kind == ScopeOracleItem::Point) oracle_points.push_back(it.point);

    auto absorbed = punct_tests::scope_oracle(flat);
    // Oracle survivors, resolved per site by strength.
    std::vector<PointKind> survivors;
    size_t pi = 0;
    for (const auto& it : flat) {
      if (it.kind != ScopeOracleItem::Point) continue;
      if (!absorbed[pi]) survivors.push_back(it.point);
      ++pi;
    }
    // The two candidate points share a site only when no word separates
    // them; then the strongest wins.  Rebuild expectation per gaps.
    std::vector<std::vector<PointKind>> gaps(1);
    pi = 0;
    for (const auto& it : flat) {
      if (it.kind == ScopeOracleItem::Word) gaps.emplace_back();
      if (it.kind == ScopeOracleItem::Point) {
        if (!absorbed[pi]) gaps.back().push_back(it.point);
        ++pi;
      }
    }
    std::vector<PointKind> expect;
    for (auto& g : gaps)
      if (auto w = punct_tests::strongest_wins(g)) expect.push_back(*w);

    CHECK(emitted_points(insert_points(seq)) == expect);
  }
}
