#include "cfx/regex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "cfx/tree.hpp"

namespace cfx {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::initializer_list<Symbol> symbols) : symbols_(symbols) {
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols.begin(), symbols.end()) {
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

bool Alphabet::contains(Symbol x) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), x);
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  return Alphabet(to_string() + other.to_string());
}

// ------------------------------------------------------------------- Regex

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Regex Regex::make(Kind kind, Symbol symbol, const Regex* left, const Regex* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->symbol = symbol;
  node->hash = mix(static_cast<std::size_t>(kind) + 1, static_cast<unsigned char>(symbol));
  if (left) {
    node->left = std::make_shared<const Regex>(*left);
    node->size += left->size();
    node->hash = mix(node->hash, left->hash());
  }
  if (right) {
    node->right = std::make_shared<const Regex>(*right);
    node->size += right->size();
    node->hash = mix(node->hash, right->hash());
  }
  return Regex(std::move(node));
}

Regex Regex::phi() {
  static const Regex kPhi = make(Kind::Phi, 0, nullptr, nullptr);
  return kPhi;
}

Regex Regex::eps() {
  static const Regex kEps = make(Kind::Eps, 0, nullptr, nullptr);
  return kEps;
}

Regex Regex::sym(Symbol x) { return make(Kind::Sym, x, nullptr, nullptr); }
Regex Regex::alt(Regex left, Regex right) { return make(Kind::Alt, 0, &left, &right); }
Regex Regex::cat(Regex left, Regex right) { return make(Kind::Cat, 0, &left, &right); }
Regex Regex::star(Regex body) { return make(Kind::Star, 0, &body, nullptr); }

bool operator==(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Regex::Kind::Phi:
    case Regex::Kind::Eps:
      return true;
    case Regex::Kind::Sym:
      return a.symbol() == b.symbol();
    case Regex::Kind::Star:
      return a.body() == b.body();
    case Regex::Kind::Alt:
    case Regex::Kind::Cat:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

std::strong_ordering structural_order(const Regex& a, const Regex& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Regex::Kind::Phi:
    case Regex::Kind::Eps:
      return std::strong_ordering::equal;
    case Regex::Kind::Sym:
      return a.symbol() <=> b.symbol();
    case Regex::Kind::Star:
      return structural_order(a.body(), b.body());
    case Regex::Kind::Alt:
    case Regex::Kind::Cat:
      if (auto c = structural_order(a.left(), b.left()); c != 0) return c;
      return structural_order(a.right(), b.right());
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return structural_order(a, b);
}

// ------------------------------------------------------------- operations

Alphabet symbols_of(const Regex& r) {
  std::string out;
  std::function<void(const Regex&)> walk = [&](const Regex& s) {
    switch (s.kind()) {
      case Regex::Kind::Sym:
        out.push_back(s.symbol());
        break;
      case Regex::Kind::Star:
        walk(s.body());
        break;
      case Regex::Kind::Alt:
      case Regex::Kind::Cat:
        walk(s.left());
        walk(s.right());
        break;
      default:
        break;
    }
  };
  walk(r);
  return Alphabet(out);
}

bool re_nullable(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::Phi:
    case Regex::Kind::Sym:
      return false;
    case Regex::Kind::Eps:
    case Regex::Kind::Star:
      return true;
    case Regex::Kind::Alt:
      return re_nullable(r.left()) || re_nullable(r.right());
    case Regex::Kind::Cat:
      return re_nullable(r.left()) && re_nullable(r.right());
  }
  return false;
}

Regex deriv(const Regex& r, Symbol x) {
  switch (r.kind()) {
    case Regex::Kind::Phi:
    case Regex::Kind::Eps:
      return Regex::phi();
    case Regex::Kind::Sym:
      return r.symbol() == x ? Regex::eps() : Regex::phi();
    case Regex::Kind::Alt:
      return Regex::alt(deriv(r.left(), x), deriv(r.right(), x));
    case Regex::Kind::Cat: {
      Regex head = Regex::cat(deriv(r.left(), x), r.right());
      if (!re_nullable(r.left())) return head;
      return Regex::alt(head, deriv(r.right(), x));
    }
    case Regex::Kind::Star:
      return Regex::cat(deriv(r.body(), x), r);
  }
  return Regex::phi();
}

namespace {

// Both operands are canonical.
Regex mk_cat(const Regex& a, const Regex& b) {
  if (a.is(Regex::Kind::Phi)) return Regex::phi();
  if (a.is(Regex::Kind::Eps)) return b;
  if (a.is(Regex::Kind::Cat)) return mk_cat(a.left(), mk_cat(a.right(), b));
  return Regex::cat(a, b);
}

void collect_summands(const Regex& r, std::vector<Regex>& out) {
  if (r.is(Regex::Kind::Alt)) {
    collect_summands(r.left(), out);
    collect_summands(r.right(), out);
  } else if (!r.is(Regex::Kind::Phi)) {
    out.push_back(r);
  }
}

// Summands are canonical and not themselves alternatives.
Regex mk_sum(std::vector<Regex> summands) {
  std::sort(summands.begin(), summands.end());
  summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
  if (summands.empty()) return Regex::phi();
  Regex acc = summands.back();
  for (auto it = summands.rbegin() + 1; it != summands.rend(); ++it) acc = Regex::alt(*it, acc);
  return acc;
}

}  // namespace

Regex simp(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::Phi:
    case Regex::Kind::Eps:
    case Regex::Kind::Sym:
      return r;
    case Regex::Kind::Star:
      return Regex::star(simp(r.body()));
    case Regex::Kind::Cat:
      return mk_cat(simp(r.left()), simp(r.right()));
    case Regex::Kind::Alt: {
      std::vector<Regex> summands;
      collect_summands(simp(r.left()), summands);
      collect_summands(simp(r.right()), summands);
      return mk_sum(std::move(summands));
    }
  }
  return r;
}

Regex deriv_word(const Regex& r, std::string_view w) {
  Regex cur = simp(r);
  for (Symbol x : w) cur = simp(deriv(cur, x));
  return cur;
}

RegexSet descendants(const Regex& r, const Alphabet& sigma) {
  RegexSet seen;
  std::deque<Regex> work;
  Regex start = simp(r);
  seen.insert(start);
  work.push_back(start);
  while (!work.empty()) {
    Regex cur = work.front();
    work.pop_front();
    for (Symbol x : sigma) {
      Regex next = simp(deriv(cur, x));
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  return seen;
}

bool re_matches(const Regex& r, std::string_view w) { return re_nullable(deriv_word(r, w)); }

bool re_contains(const Regex& r, const Regex& s, const Alphabet& sigma) {
  std::set<std::pair<Regex, Regex>> seen;
  std::deque<std::pair<Regex, Regex>> work;
  auto start = std::make_pair(simp(r), simp(s));
  seen.insert(start);
  work.push_back(start);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (re_nullable(a) && !re_nullable(b)) return false;
    if (a.is(Regex::Kind::Phi)) continue;
    for (Symbol x : sigma) {
      auto next = std::make_pair(simp(deriv(a, x)), simp(deriv(b, x)));
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  return true;
}

// ------------------------------------------------------------------ parsing

namespace {

class RegexParser {
 public:
  explicit RegexParser(std::string_view w) : word_(w) {}

  // Parses word_[i, j) against r; the caller guarantees membership.
  ParseTree build(const Regex& r, std::size_t i, std::size_t j) {
    switch (r.kind()) {
      case Regex::Kind::Eps:
        return ParseTree::eps();
      case Regex::Kind::Sym:
        return ParseTree::sym(r.symbol());
      case Regex::Kind::Alt:
        if (matches(r.left(), i, j)) return ParseTree::inl(build(r.left(), i, j));
        return ParseTree::inr(build(r.right(), i, j));
      case Regex::Kind::Cat:
        for (std::size_t k = j + 1; k-- > i;) {
          if (matches(r.left(), i, k) && matches(r.right(), k, j)) {
            return ParseTree::seq(build(r.left(), i, k), build(r.right(), k, j));
          }
        }
        break;
      case Regex::Kind::Star:
        if (i == j) return ParseTree::fold(ParseTree::inr(ParseTree::eps()));
        for (std::size_t k = j; k > i; --k) {
          if (matches(r.body(), i, k) && matches(r, k, j)) {
            return ParseTree::fold(
                ParseTree::inl(ParseTree::seq(build(r.body(), i, k), build(r, k, j))));
          }
        }
        break;
      case Regex::Kind::Phi:
        break;
    }
    throw std::logic_error("re_parse: membership oracle and tree builder disagree");
  }

  bool matches(const Regex& r, std::size_t i, std::size_t j) {
    auto key = std::make_tuple(r, i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = re_matches(r, word_.substr(i, j - i));
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::string_view word_;
  std::map<std::tuple<Regex, std::size_t, std::size_t>, bool> memo_;
};

}  // namespace

std::optional<ParseTree> re_parse(const Regex& r, std::string_view w) {
  RegexParser parser(w);
  if (!parser.matches(r, 0, w.size())) return std::nullopt;
  return parser.build(r, 0, w.size());
}

std::optional<ParseTree> re_mk_empty(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::Eps:
      return ParseTree::eps();
    case Regex::Kind::Star:
      return ParseTree::fold(ParseTree::inr(ParseTree::eps()));
    case Regex::Kind::Alt:
      if (re_nullable(r.left())) return ParseTree::inl(*re_mk_empty(r.left()));
      if (re_nullable(r.right())) return ParseTree::inr(*re_mk_empty(r.right()));
      return std::nullopt;
    case Regex::Kind::Cat: {
      auto a = re_mk_empty(r.left());
      auto b = re_mk_empty(r.right());
      if (!a || !b) return std::nullopt;
      return ParseTree::seq(*a, *b);
    }
    default:
      return std::nullopt;
  }
}

// -------------------------------------------------------------- rendering

namespace {

void render_into(const Regex& r, std::string& out);

void render_atom(const Regex& r, std::string& out, bool parens) {
  if (parens) out.push_back('(');
  render_into(r, out);
  if (parens) out.push_back(')');
}

void render_into(const Regex& r, std::string& out) {
  switch (r.kind()) {
    case Regex::Kind::Phi:
      out.push_back('0');
      break;
    case Regex::Kind::Eps:
      out.push_back('1');
      break;
    case Regex::Kind::Sym:
      out.push_back(r.symbol());
      break;
    case Regex::Kind::Alt:
      render_atom(r.left(), out, r.left().is(Regex::Kind::Alt));
      out.push_back('+');
      render_into(r.right(), out);
      break;
    case Regex::Kind::Cat:
      render_atom(r.left(), out, r.left().is(Regex::Kind::Alt) || r.left().is(Regex::Kind::Cat));
      out.push_back('.');
      render_atom(r.right(), out, r.right().is(Regex::Kind::Alt));
      break;
    case Regex::Kind::Star:
      render_atom(r.body(), out,
                  r.body().is(Regex::Kind::Alt) || r.body().is(Regex::Kind::Cat));
      out.push_back('*');
      break;
  }
}

}  // namespace

std::string render(const Regex& r) {
  std::string out;
  render_into(r, out);
  return out;
}

}  // namespace cfx
