#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cfx {

/// Symbols are single characters; their total order is the `char` order.
using Symbol = char;

/// A word over the alphabet. The empty string is the empty word.
using Word = std::string;

/// An ordered set of distinct symbols.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<Symbol> symbols);
  explicit Alphabet(std::string_view symbols);

  bool contains(Symbol x) const;
  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  /// Union with another alphabet; the result stays sorted.
  Alphabet merged(const Alphabet& other) const;

  std::string to_string() const { return {symbols_.begin(), symbols_.end()}; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Symbol> symbols_;
};

class ParseTree;

/// Immutable regular expression over single-character symbols.
///
/// Nodes are shared; copying a `Regex` is cheap. Equality is structural and
/// the three-way comparison is the canonical order used to sort alternatives:
/// node count first, then a structural comparison (kind, symbol, children).
class Regex {
 public:
  enum class Kind { Phi, Eps, Sym, Alt, Cat, Star };

  static Regex phi();
  static Regex eps();
  static Regex sym(Symbol x);
  static Regex alt(Regex left, Regex right);
  static Regex cat(Regex left, Regex right);
  static Regex star(Regex body);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  Symbol symbol() const { return node_->symbol; }
  const Regex& left() const { return *node_->left; }
  const Regex& right() const { return *node_->right; }
  const Regex& body() const { return *node_->left; }

  /// Number of nodes in the syntax tree.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Regex& a, const Regex& b);
  friend std::strong_ordering operator<=>(const Regex& a, const Regex& b);

 private:
  struct Node {
    Kind kind;
    Symbol symbol = 0;
    std::shared_ptr<const Regex> left;
    std::shared_ptr<const Regex> right;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Regex make(Kind kind, Symbol symbol, const Regex* left, const Regex* right);

  std::shared_ptr<const Node> node_;
};

struct RegexHash {
  std::size_t operator()(const Regex& r) const { return r.hash(); }
};

using RegexSet = std::set<Regex>;

/// Symbols occurring in `r`.
Alphabet symbols_of(const Regex& r);

/// True iff the empty word belongs to L(r).
bool re_nullable(const Regex& r);

/// Brzozowski derivative with respect to one symbol. No simplification.
Regex deriv(const Regex& r, Symbol x);

/// Canonical representative of the similarity class of `r`.
///
/// Applies the elimination rules exhaustively, right-associates
/// concatenations, and flattens, sorts and deduplicates alternatives.
Regex simp(const Regex& r);

/// Canonical derivative along a word: simp is applied after every step.
Regex deriv_word(const Regex& r, std::string_view w);

/// Canonical representatives of all descendants of `r` over `sigma`,
/// including φ when some derivative canonicalizes to it.
RegexSet descendants(const Regex& r, const Alphabet& sigma);

/// Membership by iterated derivatives followed by a nullability test.
bool re_matches(const Regex& r, std::string_view w);

/// Decides L(r) ⊆ L(s) by exploring pairs of canonical descendants.
bool re_contains(const Regex& r, const Regex& s, const Alphabet& sigma);

/// Builds a regular parse tree for `w` against `r`, or nothing when w ∉ L(r).
///
/// Disambiguation: an alternative takes the left branch whenever the left
/// operand matches; a concatenation gives its left operand the longest prefix
/// that still lets the right operand match the rest; a star iteration always
/// consumes at least one symbol and takes the longest such prefix.
std::optional<ParseTree> re_parse(const Regex& r, std::string_view w);

/// The empty regular parse tree of a nullable regex.
std::optional<ParseTree> re_mk_empty(const Regex& r);

/// Fully parenthesised-where-needed textual form: `0`, `1`, `x`, `a+b`,
/// `a.b`, `a*`.
std::string render(const Regex& r);

}  // namespace cfx
