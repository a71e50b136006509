#include "cfx/syntax.hpp"

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cfx/error.hpp"

namespace cfx {

namespace {

struct Ast {
  enum class Kind { Phi, Eps, Ident, Alt, Cat, Star, Mu };
  Kind kind;
  std::string name;
  std::size_t column = 0;
  std::vector<Ast> children;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ast parse_all() {
    Ast ast = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return ast;
  }

  const std::set<std::string>& identifiers() const { return identifiers_; }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_ + 1, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool at_keyword_mu() {
    skip_space();
    if (text_.substr(pos_, 2) != "mu") return false;
    return pos_ + 2 >= text_.size() || !ident_char(text_[pos_ + 2]);
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected a name");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    identifiers_.insert(name);
    return name;
  }

  bool starts_atom() {
    char c = peek();
    return c == '0' || c == '1' || c == '(' || ident_start(c);
  }

  Ast expr() {
    Ast left = cat();
    if (peek() == '+') {
      ++pos_;
      Ast right = expr();
      return Ast{Ast::Kind::Alt, {}, left.column, {std::move(left), std::move(right)}};
    }
    return left;
  }

  Ast cat() {
    std::vector<Ast> parts;
    parts.push_back(postfix());
    while (true) {
      if (peek() == '.') {
        ++pos_;
        parts.push_back(postfix());
      } else if (starts_atom()) {
        parts.push_back(postfix());
      } else {
        break;
      }
    }
    Ast acc = std::move(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
      std::size_t column = parts[i].column;
      acc = Ast{Ast::Kind::Cat, {}, column, {std::move(parts[i]), std::move(acc)}};
    }
    return acc;
  }

  Ast postfix() {
    Ast a = atom();
    while (peek() == '*') {
      ++pos_;
      a = Ast{Ast::Kind::Star, {}, a.column, {std::move(a)}};
    }
    return a;
  }

  Ast atom() {
    char c = peek();
    std::size_t column = pos_ + 1;
    if (c == '0') {
      ++pos_;
      return Ast{Ast::Kind::Phi, {}, column, {}};
    }
    if (c == '1') {
      ++pos_;
      return Ast{Ast::Kind::Eps, {}, column, {}};
    }
    if (c == '(') {
      ++pos_;
      Ast inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (at_keyword_mu()) {
      pos_ += 2;
      std::string binder = identifier();
      if (peek() != '.') fail("expected '.' after 'mu " + binder + "'");
      ++pos_;
      Ast body = expr();
      return Ast{Ast::Kind::Mu, binder, column, {std::move(body)}};
    }
    if (ident_start(c)) {
      std::string name = identifier();
      return Ast{Ast::Kind::Ident, name, column, {}};
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<std::string> identifiers_;
};

Symbol single_symbol(const Ast& a) {
  if (a.name.size() != 1 || !std::isalpha(static_cast<unsigned char>(a.name[0]))) {
    throw SyntaxError(a.column, "unknown name '" + a.name + "' (symbols are single letters)");
  }
  return a.name[0];
}

Regex to_regex(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::Phi:
      return Regex::phi();
    case Ast::Kind::Eps:
      return Regex::eps();
    case Ast::Kind::Ident:
      return Regex::sym(single_symbol(a));
    case Ast::Kind::Alt:
      return Regex::alt(to_regex(a.children[0]), to_regex(a.children[1]));
    case Ast::Kind::Cat:
      return Regex::cat(to_regex(a.children[0]), to_regex(a.children[1]));
    case Ast::Kind::Star:
      return Regex::star(to_regex(a.children[0]));
    case Ast::Kind::Mu:
      throw SyntaxError(a.column, "'mu' is not allowed in a regular expression");
  }
  return Regex::phi();
}

class CfeBuilder {
 public:
  explicit CfeBuilder(const std::set<std::string>& used) : used_(used) {}

  Cfe build(const Ast& a) {
    switch (a.kind) {
      case Ast::Kind::Phi:
        return Cfe::phi();
      case Ast::Kind::Eps:
        return Cfe::eps();
      case Ast::Kind::Ident:
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (*it == a.name) return Cfe::var(a.name);
        }
        return Cfe::sym(single_symbol(a));
      case Ast::Kind::Alt:
        return Cfe::alt(build(a.children[0]), build(a.children[1]));
      case Ast::Kind::Cat:
        return Cfe::cat(build(a.children[0]), build(a.children[1]));
      case Ast::Kind::Star: {
        std::string binder = fresh();
        Cfe body = build(a.children[0]);
        return Cfe::mu(binder, Cfe::alt(Cfe::cat(body, Cfe::var(binder)), Cfe::eps()));
      }
      case Ast::Kind::Mu: {
        scope_.push_back(a.name);
        Cfe body = build(a.children[0]);
        scope_.pop_back();
        return Cfe::mu(a.name, std::move(body));
      }
    }
    return Cfe::phi();
  }

 private:
  std::string fresh() {
    while (true) {
      std::string name = "_s" + std::to_string(counter_++);
      if (!used_.count(name)) return name;
    }
  }

  const std::set<std::string>& used_;
  std::vector<std::string> scope_;
  std::size_t counter_ = 0;
};

}  // namespace

Regex parse_regex(std::string_view text) {
  Parser parser(text);
  return to_regex(parser.parse_all());
}

Cfe parse_cfe(std::string_view text) {
  Parser parser(text);
  Ast ast = parser.parse_all();
  CfeBuilder builder(parser.identifiers());
  Cfe e = builder.build(ast);
  check_well_formed(e);
  return e;
}

}  // namespace cfx
