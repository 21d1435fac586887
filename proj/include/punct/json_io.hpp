#ifndef PUNCT_JSON_IO_HPP
#define PUNCT_JSON_IO_HPP

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "punct/tree.hpp"

// Structured-text input.  The schema mirrors the phrasal-attribute
// notation: nodes carry a lexeme, attrs (btw/font/abbrev/quote/terminal)
// and ordered relations; blocks are sentences, groups or lists.

namespace punct {

struct ParsedInput {
  Document doc;
  Config config;
  bool has_config = false;
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void bad(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

inline void check_keys(const json& j, const std::set<std::string>& allowed,
                       const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) bad(path, "unknown key \"" + it.key() + "\"");
}

inline Enclosure enclosure_of(const std::string& s, const std::string& path) {
  if (s == "comma") return Enclosure::Comma;
  if (s == "dash") return Enclosure::Dash;
  if (s == "paren") return Enclosure::Paren;
  if (s == "square") return Enclosure::Square;
  if (s == "dblqt") return Enclosure::DoubleQuote;
  if (s == "snglqt") return Enclosure::SingleQuote;
  if (s == "colon-exp") return Enclosure::ColonExpansion;
  if (s == "dash-exp") return Enclosure::DashExpansion;
  bad(path, "unknown btw name \"" + s + "\"");
}

inline PointKind point_of(const std::string& s, const std::string& path) {
  if (s == "comma") return PointKind::Comma;
  if (s == "dash") return PointKind::Dash;
  if (s == "semicolon") return PointKind::Semicolon;
  if (s == "colon") return PointKind::Colon;
  if (s == "period") return PointKind::Period;
  bad(path, "unknown point name \"" + s + "\"");
}

inline BracketKind bracket_of(const std::string& s, const std::string& path) {
  if (s == "paren") return BracketKind::Paren;
  if (s == "square") return BracketKind::Square;
  if (s == "dblqt") return BracketKind::DoubleQuote;
  if (s == "snglqt") return BracketKind::SingleQuote;
  bad(path, "unknown bracket name \"" + s + "\"");
}

inline SyntNode parse_node(const json& j, const std::string& path);

inline void parse_attrs(const json& j, SyntNode& node, const std::string& path) {
  check_keys(j, {"btw", "font", "abbrev", "quote", "terminal"}, path);
  if (j.contains("btw")) {
    const json& arr = j["btw"];
    if (!arr.is_array()) bad(path + ".btw", "expected an array of names");
    for (const auto& e : arr)
      node.attrs.btw.push_back(btw(enclosure_of(e.get<std::string>(), path)));
  }
  if (j.contains("font")) {
    std::string f = j["font"].get<std::string>();
    if (f == "ital")
      node.attrs.visual = VisualAttrs{Font::Italic, Face::Regular};
    else if (f == "bold")
      node.attrs.visual = VisualAttrs{Font::Roman, Face::Bold};
    else
      bad(path + ".font", "expected \"ital\" or \"bold\"");
  }
  if (j.contains("abbrev")) {
    if (!j["abbrev"].is_boolean()) bad(path + ".abbrev", "expected a boolean");
    node.lexeme.abbrev_period = j["abbrev"].get<bool>();
  }
  if (j.contains("quote")) {
    std::string q = j["quote"].get<std::string>();
    BracketKind k;
    if (q == "double")
      k = BracketKind::DoubleQuote;
    else if (q == "single")
      k = BracketKind::SingleQuote;
    else
      bad(path + ".quote", "expected \"double\" or \"single\"");
    node.lexeme.lexical_marks.push_back(
        {bracket_mark(k, Side::Open, MarkOrigin::Lexical), Side::Open});
    node.lexeme.lexical_marks.push_back(
        {bracket_mark(k, Side::Close, MarkOrigin::Lexical), Side::Close});
  }
  if (j.contains("terminal")) {
    std::string t = j["terminal"].get<std::string>();
    if (t == "none") {
      node.attrs.terminal_none = true;
    } else if (t == "question") {
      node.attrs.terminal = TerminalSpec{ToneKind::QuestionMark};
    } else if (t == "exclaim") {
      node.attrs.terminal = TerminalSpec{ToneKind::ExclamationPoint};
    } else {
      node.attrs.terminal = TerminalSpec{point_of(t, path + ".terminal")};
    }
  }
}

// A lexeme with spaces denotes a flat word chain headed by its first
// word.  The font attr covers exactly these words, so it compiles to
// lexical visuals rather than a subtree span.
inline void split_lexeme(SyntNode& node, const std::string& path) {
  const std::string& s = node.lexeme.surface;
  if (s.empty()) bad(path, "empty lexeme");
  std::optional<VisualAttrs> vis = node.attrs.visual;
  node.attrs.visual.reset();
  if (vis) node.lexeme.visual = *vis;
  if (s.find(' ') == std::string::npos) return;
  std::istringstream in(s);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  if (words.empty()) bad(path, "blank lexeme");
  bool abbrev = node.lexeme.abbrev_period;
  auto lexical = std::move(node.lexeme.lexical_marks);
  node.lexeme = Lexeme{};
  node.lexeme.surface = words.front();
  if (vis) node.lexeme.visual = *vis;
  for (size_t i = 1; i < words.size(); ++i) {
    SyntNode flat;
    flat.lexeme.surface = words[i];
    if (abbrev && i + 1 == words.size()) flat.lexeme.abbrev_period = true;
    if (vis) flat.lexeme.visual = *vis;
    node.rels.insert(node.rels.begin() + static_cast<long>(i - 1),
                     make_rel("flat", Pos::After, -1000000 + static_cast<int>(i),
                              std::move(flat)));
  }
  if (!lexical.empty()) {
    // Quotes around a multi-word lexeme enclose the whole chain.
    BracketKind k = lexical.front().mark.bracket().kind;
    node.attrs.btw.insert(node.attrs.btw.begin(),
                          btw(k == BracketKind::DoubleQuote
                                  ? Enclosure::DoubleQuote
                                  : Enclosure::SingleQuote,
                              MarkOrigin::Lexical));
  }
}

inline SyntNode parse_node(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected a node object");
  check_keys(j, {"lexeme", "attrs", "rels"}, path);
  if (!j.contains("lexeme") || !j["lexeme"].is_string())
    bad(path, "node requires a string \"lexeme\"");
  SyntNode node;
  node.lexeme.surface = j["lexeme"].get<std::string>();
  if (j.contains("attrs")) {
    if (!j["attrs"].is_object()) bad(path + ".attrs", "expected an object");
    parse_attrs(j["attrs"], node, path + ".attrs");
  }
  if (node.lexeme.abbrev_period) {
    const std::string& s = node.lexeme.surface;
    if (s.empty() || s.back() != '.')
      bad(path, "abbrev word must end in a period");
  }
  if (j.contains("rels")) {
    if (!j["rels"].is_array()) bad(path + ".rels", "expected an array");
    int i = 0;
    for (const auto& rj : j["rels"]) {
      std::string rpath = path + ".rels[" + std::to_string(i++) + "]";
      check_keys(rj, {"rel", "pos", "order", "sep", "child"}, rpath);
      if (!rj.contains("rel") || !rj["rel"].is_string())
        bad(rpath, "relation requires a string \"rel\"");
      if (!rj.contains("child")) bad(rpath, "relation requires a \"child\"");
      Relation r;
      r.rel = rj["rel"].get<std::string>();
      if (rj.contains("pos")) {
        std::string p = rj["pos"].get<std::string>();
        if (p == "before")
          r.pos = Pos::Before;
        else if (p == "after")
          r.pos = Pos::After;
        else
          bad(rpath + ".pos", "expected \"before\" or \"after\"");
      }
      if (rj.contains("order")) {
        if (!rj["order"].is_number_integer())
          bad(rpath + ".order", "expected an integer");
        r.order = rj["order"].get<int>();
      }
      if (rj.contains("sep")) {
        std::string s = rj["sep"].get<std::string>();
        if (s == "none")
          r.sep_none = true;
        else
          r.sep = point_of(s, rpath + ".sep");
      }
      r.child.push_back(parse_node(rj["child"], rpath + ".child"));
      node.rels.push_back(std::move(r));
    }
  }
  if (!node.lexeme.lexical_marks.empty() && !node.rels.empty() &&
      node.lexeme.surface.find(' ') != std::string::npos)
    bad(path, "quote on a multi-word lexeme with relations is ambiguous");
  split_lexeme(node, path);
  return node;
}

inline Block parse_block(const json& j, const std::string& path);

inline std::vector<Block> parse_blocks(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of blocks");
  std::vector<Block> out;
  int i = 0;
  for (const auto& b : j)
    out.push_back(parse_block(b, path + "[" + std::to_string(i++) + "]"));
  return out;
}

inline Block parse_block(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected a block object");
  std::string type = j.contains("type") ? j["type"].get<std::string>() : "";
  if (type.empty()) {
    SentenceBlock s;
    s.root = parse_node(j, path);
    return Block{std::move(s)};
  }
  if (type == "sentence") {
    check_keys(j, {"type", "root", "brackets", "para"}, path);
    if (!j.contains("root")) bad(path, "sentence block requires \"root\"");
    SentenceBlock s;
    s.root = parse_node(j["root"], path + ".root");
    if (j.contains("brackets"))
      s.discourse_brackets =
          bracket_of(j["brackets"].get<std::string>(), path + ".brackets");
    if (j.contains("para")) s.para = j["para"].get<bool>();
    return Block{std::move(s)};
  }
  if (type == "group") {
    check_keys(j, {"type", "brackets", "blocks", "para"}, path);
    GroupBlock g;
    if (j.contains("brackets"))
      g.brackets =
          bracket_of(j["brackets"].get<std::string>(), path + ".brackets");
    if (!j.contains("blocks")) bad(path, "group block requires \"blocks\"");
    g.blocks = parse_blocks(j["blocks"], path + ".blocks");
    if (j.contains("para")) g.para = j["para"].get<bool>();
    return Block{std::move(g)};
  }
  if (type == "list") {
    check_keys(j,
               {"type", "style", "single_sentence", "conjunction", "bullet",
                "intro", "items", "para"},
               path);
    ListBlock l;
    if (!j.contains("style")) bad(path, "list block requires \"style\"");
    std::string style = j["style"].get<std::string>();
    if (style == "vertical")
      l.style = ListStyle::Vertical;
    else if (style == "run-in")
      l.style = ListStyle::RunIn;
    else
      bad(path + ".style", "expected \"vertical\" or \"run-in\"");
    if (!j.contains("single_sentence"))
      bad(path, "list block requires \"single_sentence\"");
    l.single_sentence = j["single_sentence"].get<bool>();
    if (j.contains("conjunction"))
      l.conjunction = j["conjunction"].get<std::string>();
    if (j.contains("bullet")) l.bullet = j["bullet"].get<bool>();
    if (!j.contains("intro")) bad(path, "list block requires \"intro\"");
    l.intro = parse_node(j["intro"], path + ".intro");
    if (!j.contains("items")) bad(path, "list block requires \"items\"");
    if (!j["items"].is_array()) bad(path + ".items", "expected an array");
    int i = 0;
    for (const auto& it : j["items"])
      l.items.push_back(
          parse_node(it, path + ".items[" + std::to_string(i++) + "]"));
    if (j.contains("para")) l.para = j["para"].get<bool>();
    return Block{std::move(l)};
  }
  bad(path + ".type", "unknown block type \"" + type + "\"");
}

inline void parse_config(const json& j, Config& cfg, const std::string& path) {
  check_keys(j,
             {"quote_style", "harmony", "tone_italic_absorption",
              "expansion_mode", "promotion_refinements", "output_format",
              "ascii_dash", "prefer_promoted_semicolon"},
             path);
  if (j.contains("quote_style")) {
    std::string s = j["quote_style"].get<std::string>();
    if (s == "american")
      cfg.quote_style = QuoteStyle::American;
    else if (s == "precise")
      cfg.quote_style = QuoteStyle::Precise;
    else
      bad(path + ".quote_style", "expected \"american\" or \"precise\"");
  }
  if (j.contains("harmony")) cfg.harmony = j["harmony"].get<bool>();
  if (j.contains("tone_italic_absorption"))
    cfg.tone_italic_absorption = j["tone_italic_absorption"].get<bool>();
  if (j.contains("expansion_mode")) {
    std::string s = j["expansion_mode"].get<std::string>();
    if (s == "rewrite")
      cfg.expansion_mode = ExpansionMode::Rewrite;
    else if (s == "strict")
      cfg.expansion_mode = ExpansionMode::Strict;
    else
      bad(path + ".expansion_mode", "expected \"rewrite\" or \"strict\"");
  }
  if (j.contains("promotion_refinements"))
    cfg.promotion_refinements = j["promotion_refinements"].get<bool>();
  if (j.contains("output_format")) {
    std::string s = j["output_format"].get<std::string>();
    if (s == "plain")
      cfg.output_format = OutputFormat::Plain;
    else if (s == "tagged")
      cfg.output_format = OutputFormat::Tagged;
    else if (s == "directive")
      cfg.output_format = OutputFormat::Directive;
    else
      bad(path + ".output_format", "unknown format");
  }
  if (j.contains("ascii_dash")) cfg.ascii_dash = j["ascii_dash"].get<bool>();
  if (j.contains("prefer_promoted_semicolon"))
    cfg.prefer_promoted_semicolon = j["prefer_promoted_semicolon"].get<bool>();
}

}  // namespace detail

// Deserialize a document; unknown keys are rejected with their path.
inline ParsedInput parse_input(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) detail::bad("$", "expected a top-level object");
    detail::check_keys(j, {"schema", "blocks", "config", "note"}, "$");
    if (!j.contains("schema") || j["schema"] != "1")
      detail::bad("$.schema", "expected \"1\"");
    if (!j.contains("blocks")) detail::bad("$", "missing \"blocks\"");
    ParsedInput out;
    out.doc.blocks = detail::parse_blocks(j["blocks"], "$.blocks");
    if (j.contains("config")) {
      detail::parse_config(j["config"], out.config, "$.config");
      out.has_config = true;
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("schema violation: ") + e.what());
  }
}

}  // namespace punct

#endif
