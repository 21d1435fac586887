// Command-line front end: realize structured input, validate it, or run
// the golden-file corpus.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "punct/punct.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw punct::Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_final_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

punct::OutputFormat format_of(const std::string& s) {
  if (s == "plain") return punct::OutputFormat::Plain;
  if (s == "tagged") return punct::OutputFormat::Tagged;
  if (s == "directive") return punct::OutputFormat::Directive;
  throw punct::Error("unknown format " + s);
}

struct Flags {
  std::string input;
  std::string format = "plain";
  std::string quote_style;
  bool no_harmony = false;
  bool strict_expansions = false;
  bool ascii_dash = false;
};

punct::Config merge_flags(punct::Config cfg, const Flags& f) {
  cfg.output_format = format_of(f.format);
  if (f.quote_style == "american") cfg.quote_style = punct::QuoteStyle::American;
  if (f.quote_style == "precise") cfg.quote_style = punct::QuoteStyle::Precise;
  if (f.no_harmony) cfg.harmony = false;
  if (f.strict_expansions) cfg.expansion_mode = punct::ExpansionMode::Strict;
  if (f.ascii_dash) cfg.ascii_dash = true;
  return cfg;
}

int run_realize(const Flags& f) {
  punct::ParsedInput in = punct::parse_input(read_file(f.input));
  punct::Config cfg = merge_flags(in.config, f);
  std::cout << punct::realize_document(in.doc, cfg) << "\n";
  return kExitOk;
}

void collect_violations(const punct::SyntNode& root, const std::string& where,
                        std::vector<std::string>& out) {
  punct::Config strict;
  strict.expansion_mode = punct::ExpansionMode::Strict;
  try {
    punct::select_expansion(root, strict);
  } catch (const punct::ValidationError& e) {
    out.push_back(where + ": " + e.what());
  }
}

void check_block(const punct::Block& b, const std::string& where,
                 std::vector<std::string>& out) {
  if (const auto* s = std::get_if<punct::SentenceBlock>(&b.v)) {
    collect_violations(s->root, where, out);
  } else if (const auto* g = std::get_if<punct::GroupBlock>(&b.v)) {
    for (size_t i = 0; i < g->blocks.size(); ++i)
      check_block(g->blocks[i], where + ".blocks[" + std::to_string(i) + "]",
                  out);
  } else {
    const auto& l = std::get<punct::ListBlock>(b.v);
    collect_violations(l.intro, where + ".intro", out);
    for (size_t i = 0; i < l.items.size(); ++i)
      collect_violations(l.items[i], where + ".items[" + std::to_string(i) + "]",
                         out);
  }
}

int run_check(const Flags& f) {
  punct::ParsedInput in = punct::parse_input(read_file(f.input));
  std::vector<std::string> violations;
  for (size_t i = 0; i < in.doc.blocks.size(); ++i)
    check_block(in.doc.blocks[i], "blocks[" + std::to_string(i) + "]",
                violations);
  if (violations.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
  return kExitValidation;
}

void print_diff(const std::string& expected, const std::string& actual) {
  std::cerr << "--- expected\n+++ actual\n";
  std::istringstream e(expected), a(actual);
  std::string le, la;
  bool more_e = true, more_a = true;
  while (more_e || more_a) {
    more_e = more_e && static_cast<bool>(std::getline(e, le));
    more_a = more_a && static_cast<bool>(std::getline(a, la));
    if (more_e && more_a && le == la) {
      std::cerr << " " << le << "\n";
      continue;
    }
    if (more_e) std::cerr << "-" << le << "\n";
    if (more_a) std::cerr << "+" << la << "\n";
  }
}

int run_corpus(const std::string& dir) {
  fs::path root(dir);
  if (fs::exists(root / "cases")) root /= "cases";
  if (!fs::is_directory(root)) throw punct::Error("no such corpus: " + dir);

  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(root))
    if (e.is_directory() && fs::exists(e.path() / "input.json"))
      cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());

  int failures = 0;
  for (const auto& c : cases) {
    punct::ParsedInput in = punct::parse_input(read_file(c / "input.json"));
    for (const char* fname : {"plain", "tagged", "directive"}) {
      punct::OutputFormat fmt = format_of(fname);
      fs::path exp_file = c / ("expected." + std::string(fname) + ".txt");
      fs::path forb_file = c / ("forbidden." + std::string(fname) + ".txt");
      if (fname == std::string("plain") && !fs::exists(forb_file) &&
          fs::exists(c / "forbidden.txt"))
        forb_file = c / "forbidden.txt";
      if (!fs::exists(exp_file) && !fs::exists(forb_file)) continue;

      punct::Config cfg = in.config;
      cfg.output_format = fmt;
      std::string actual = punct::realize_document(in.doc, cfg);

      if (fs::exists(exp_file)) {
        std::string expected = strip_final_newline(read_file(exp_file));
        if (actual != expected) {
          ++failures;
          std::cerr << "FAIL " << c.filename().string() << " [" << fname
                    << "]\n";
          print_diff(expected, actual);
          continue;
        }
      }
      if (fs::exists(forb_file)) {
        std::string forbidden = strip_final_newline(read_file(forb_file));
        if (!forbidden.empty() && actual.find(forbidden) != std::string::npos) {
          ++failures;
          std::cerr << "FAIL " << c.filename().string() << " [" << fname
                    << "] emits forbidden string\n  " << forbidden << "\n";
          continue;
        }
      }
      std::cout << "ok " << c.filename().string() << " [" << fname << "]\n";
    }
  }
  std::cout << cases.size() << " cases, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presentation engine for punctuation and formatting"};
  app.require_subcommand(1);

  Flags flags;
  std::string corpus_dir;

  CLI::App* realize = app.add_subcommand("realize", "realize a document");
  realize->add_option("--input", flags.input, "input file")->required();
  realize->add_option("--format", flags.format, "plain|tagged|directive");
  realize->add_option("--quote-style", flags.quote_style, "american|precise");
  realize->add_flag("--no-harmony", flags.no_harmony, "disable font/face harmony");
  realize->add_flag("--strict-expansions", flags.strict_expansions,
                    "reject nested expansions instead of rewriting");
  realize->add_flag("--ascii-dash", flags.ascii_dash, "render dashes as --");

  CLI::App* check = app.add_subcommand("check", "validate structure");
  check->add_option("--input", flags.input, "input file")->required();

  CLI::App* corpus = app.add_subcommand("corpus", "run a golden-file corpus");
  corpus->add_option("--dir", corpus_dir, "corpus directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (realize->parsed()) return run_realize(flags);
    if (check->parsed()) return run_check(flags);
    if (corpus->parsed()) return run_corpus(corpus_dir);
    return kExitUsage;
  } catch (const punct::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const punct::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
