#include "cfx/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>

#include "cfx/coerce.hpp"
#include "cfx/error.hpp"
#include "cfx/reach.hpp"
#include "cfx/serialize.hpp"
#include "cfx/syntax.hpp"

namespace cfx::cli {

namespace {

/// Bad flag value; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Regex regex_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_regex(text);
  } catch (const SyntaxError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Cfe cfe_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_cfe(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

ParseTree tree_arg(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(flag + ": cannot read '" + path + "'");
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  try {
    return tree_from_json(text);
  } catch (const FormatError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Symbol symbol_arg(const std::string& flag, const std::string& text) {
  if (text.size() != 1) throw UsageError(flag + ": expected a single symbol, got '" + text + "'");
  return text[0];
}

std::string show_word(const Word& w) { return w.empty() ? "ε" : w; }

// Shared flag storage; each subcommand binds the flags it needs.
struct Flags {
  std::string regex;
  std::string cfe;
  std::string symbol;
  std::string tree;
  std::string word;
  std::string alphabet;
  std::string output;
  std::string direction;
  bool raw = false;
  std::uint64_t fuel = 0;
  std::size_t max_len = 5;
};

int dispatch(const CLI::App& app, const Flags& f, std::ostream& out) {
  const CLI::App* cmd = app.get_subcommands().front();
  const std::string& name = cmd->get_name();
  Alphabet sigma(f.alphabet);

  if (name == "derive") {
    Regex d = deriv(regex_arg("-r", f.regex), symbol_arg("-x", f.symbol));
    out << render(f.raw ? d : simp(d)) << "\n";
    return 0;
  }
  if (name == "canon") {
    out << render(simp(regex_arg("-r", f.regex))) << "\n";
    return 0;
  }
  if (name == "reach") {
    for (const Regex& s : reach(cfe_arg("-e", f.cfe), regex_arg("-r", f.regex), sigma)) {
      out << render(s) << "\n";
    }
    return 0;
  }
  if (name == "contains") {
    bool yes = contains(cfe_arg("-e", f.cfe), regex_arg("-r", f.regex), sigma);
    out << (yes ? "true" : "false") << "\n";
    return yes ? 0 : 1;
  }
  if (name == "enumerate") {
    auto words = enumerate_words(cfe_arg("-e", f.cfe), f.max_len);
    std::vector<Word> sorted(words.begin(), words.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    for (const Word& w : sorted) out << show_word(w) << "\n";
    return 0;
  }
  if (name == "upcast") {
    Cfe e = cfe_arg("-e", f.cfe);
    Regex r = regex_arg("-r", f.regex);
    ParseTree p = tree_arg("--tree", f.tree);
    if (!check_cfe_type(p, e)) throw UsageError("--tree: not a parse tree of " + render(e));
    Coercion c = cfe_upcast(e, r, sigma);
    out << tree_to_json(run_upcast(c, p)) << "\n";
    return 0;
  }
  if (name == "downcast") {
    Cfe e = cfe_arg("-e", f.cfe);
    Regex r = regex_arg("-r", f.regex);
    ParseTree t = tree_arg("--tree", f.tree);
    bool fueled = cmd->count("--fuel") > 0;
    if (!fueled && !is_guarded(e)) {
      throw UsageError("--fuel: required because " + render(e) + " is not guarded");
    }
    if (!check_re_type(t, r)) throw UsageError("--tree: not a parse tree of " + render(r));
    Coercion c = cfe_downcast(e, r, sigma);
    auto result = run_downcast(c, t, fueled ? std::optional<std::uint64_t>(f.fuel) : std::nullopt);
    if (!result) {
      out << "Nothing\n";
      return 1;
    }
    out << "{\"parse\":" << tree_to_json(result->first)
        << ",\"residue\":" << tree_to_json(result->second) << "}\n";
    return 0;
  }
  if (name == "parse") {
    Cfe e = cfe_arg("-e", f.cfe);
    if (!is_guarded(e)) throw UsageError("-e: " + render(e) + " is not guarded");
    PredictiveParser parser(e, sigma);
    auto p = parser.parse(f.word);
    if (!p) {
      out << "Nothing\n";
      return 1;
    }
    out << tree_to_json(*p) << "\n";
    return 0;
  }
  if (name == "emit-coercion") {
    Cfe e = cfe_arg("-e", f.cfe);
    Regex r = regex_arg("-r", f.regex);
    Coercion c = f.direction == "up" ? cfe_upcast(e, r, sigma) : cfe_downcast(e, r, sigma);
    std::string text = coercion_to_json(c) + "\n";
    if (f.output == "-") {
      out << text;
      return 0;
    }
    std::ofstream file(f.output);
    if (!file) throw UsageError("-o: cannot write '" + f.output + "'");
    file << text;
    return 0;
  }
  throw UsageError("unknown command " + name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Context-free expressions: containment in regular languages, parse tree coercions "
               "and predictive parsing.",
               "cfx"};
  app.require_subcommand(1);
  Flags f;

  auto regex_opt = [&](CLI::App* c) {
    c->add_option("-r,--regex", f.regex, "regular expression")->required();
  };
  auto cfe_opt = [&](CLI::App* c) {
    c->add_option("-e,--expr", f.cfe, "context-free expression")->required();
  };
  auto alphabet_opt = [&](CLI::App* c) {
    c->add_option("--alphabet", f.alphabet, "alphabet, e.g. xyz (default: symbols of the inputs)");
  };

  auto* derive = app.add_subcommand("derive", "Brzozowski derivative of a regex");
  regex_opt(derive);
  derive->add_option("-x,--symbol", f.symbol, "symbol")->required();
  derive->add_flag("--raw", f.raw, "print the derivative before canonicalization");

  auto* canon = app.add_subcommand("canon", "canonical representative of a regex");
  regex_opt(canon);

  for (auto [cmd, help] : {std::pair{"reach", "reachability set, one canonical regex per line"},
                           std::pair{"contains", "decide whether L(e) is contained in L(r)"}}) {
    auto* c = app.add_subcommand(cmd, help);
    cfe_opt(c);
    regex_opt(c);
    alphabet_opt(c);
  }

  auto* upcast = app.add_subcommand("upcast", "coerce a parse tree of e into one of r");
  cfe_opt(upcast);
  regex_opt(upcast);
  alphabet_opt(upcast);
  upcast->add_option("--tree", f.tree, "JSON parse tree of e")->required();

  auto* downcast = app.add_subcommand("downcast", "coerce a parse tree of r into e and a residue");
  cfe_opt(downcast);
  regex_opt(downcast);
  alphabet_opt(downcast);
  downcast->add_option("--tree", f.tree, "JSON parse tree of r")->required();
  downcast->add_option("--fuel", f.fuel, "evaluation step budget (required for unguarded e)");

  auto* parse = app.add_subcommand("parse", "predictive parser of a guarded expression");
  cfe_opt(parse);
  parse->add_option("--word", f.word, "input word")->required();
  alphabet_opt(parse);

  auto* emit = app.add_subcommand("emit-coercion", "write a synthesized coercion as JSON");
  emit->add_option("direction", f.direction, "up or down")
      ->required()
      ->check(CLI::IsMember({"up", "down"}));
  cfe_opt(emit);
  regex_opt(emit);
  alphabet_opt(emit);
  emit->add_option("-o,--output", f.output, "output file, - for standard output")->required();

  auto* enumerate = app.add_subcommand("enumerate", "words of L(e) up to a length");
  cfe_opt(enumerate);
  enumerate->add_option("--max-len", f.max_len, "maximal word length")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return dispatch(app, f, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Diverged& e) {
    out << "Diverged after " << e.steps() << " steps\n";
    return 1;
  } catch (const NotContained& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const EmptyLanguage& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cfx::cli
