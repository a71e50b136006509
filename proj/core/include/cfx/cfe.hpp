#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "cfx/regex.hpp"

namespace cfx {

/// Immutable context-free expression: a regular expression without star but
/// with placeholders and the least-fixed-point binder `mu a. e`.
///
/// Equality is syntactic; binder names matter. Well-formed expressions are
/// closed and every binder name occurs at most once.
class Cfe {
 public:
  enum class Kind { Phi, Eps, Sym, Var, Alt, Cat, Mu };

  static Cfe phi();
  static Cfe eps();
  static Cfe sym(Symbol x);
  static Cfe var(std::string name);
  static Cfe alt(Cfe left, Cfe right);
  static Cfe cat(Cfe left, Cfe right);
  static Cfe mu(std::string binder, Cfe body);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  Symbol symbol() const { return node_->symbol; }
  /// Placeholder of a Var, binder of a Mu.
  const std::string& name() const { return node_->name; }
  const Cfe& left() const { return *node_->left; }
  const Cfe& right() const { return *node_->right; }
  const Cfe& body() const { return *node_->left; }

  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }
  /// Identity of the shared node; equal identities imply structural equality.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Cfe& a, const Cfe& b);
  friend std::strong_ordering operator<=>(const Cfe& a, const Cfe& b);

 private:
  struct Node {
    Kind kind;
    Symbol symbol = 0;
    std::string name;
    std::shared_ptr<const Cfe> left;
    std::shared_ptr<const Cfe> right;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit Cfe(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Cfe make(Kind kind, Symbol symbol, std::string name, const Cfe* left, const Cfe* right);

  std::shared_ptr<const Node> node_;
};

struct CfeHash {
  std::size_t operator()(const Cfe& e) const { return e.hash(); }
};

using CfeSet = std::set<Cfe>;

/// Placeholder name → closed expression. Images never mention names of the
/// domain freely.
using Binding = std::map<std::string, Cfe>;

/// Throws UnboundPlaceholder or DuplicateBinder.
void check_well_formed(const Cfe& e);
bool is_well_formed(const Cfe& e);

/// Replaces the free occurrences of `binder` in `e` by `f`.
Cfe substitute(const Cfe& e, const std::string& binder, const Cfe& f);

/// Simultaneous substitution of the free placeholders in `binding`.
Cfe apply_binding(const Binding& binding, const Cfe& e);

/// `mu a. body` ↦ `[a ↦ mu a. body] body`. Throws NotAMu.
Cfe unfold(const Cfe& e);

/// ν(e), by structural recursion; placeholders are not nullable.
bool cfe_nullable(const Cfe& e);

/// Every μ body has the shape `x1.e1 + (x2.e2 + ... (+ 1))` with distinct
/// guard symbols, and every subexpression is guarded in turn.
bool is_guarded(const Cfe& e);

/// SubTerm(e).
CfeSet subterms(const Cfe& e);

/// Maps each binder of `e` to its closed μ-expression.
Binding binding_subst(const Cfe& e);

/// Maps each binder of `e` to its own (possibly open) μ-subterm.
std::map<std::string, Cfe> mu_of_binder(const Cfe& e);

/// Words of L(e) with length at most `max_len`.
std::set<Word> enumerate_words(const Cfe& e, std::size_t max_len);

Alphabet symbols_of(const Cfe& e);

/// Star-free regex viewed as a context-free expression.
Cfe from_regex(const Regex& r, const std::string& fresh_prefix = "_s");

std::string render(const Cfe& e);

}  // namespace cfx
