#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cfx/regex.hpp"

namespace cfx {

class Cfe;

/// Generic parse tree. Validity is relative to an expression and is decided
/// by `check_cfe_type` or `check_re_type`.
class ParseTree {
 public:
  enum class Kind { Eps, Sym, Inl, Inr, Seq, Fold };

  static ParseTree eps();
  static ParseTree sym(Symbol x);
  static ParseTree inl(ParseTree child);
  static ParseTree inr(ParseTree child);
  static ParseTree seq(ParseTree left, ParseTree right);
  static ParseTree fold(ParseTree child);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  Symbol symbol() const { return node_->symbol; }
  /// Child of Inl, Inr and Fold; left child of Seq.
  const ParseTree& child() const { return *node_->left; }
  const ParseTree& left() const { return *node_->left; }
  const ParseTree& right() const { return *node_->right; }

  std::size_t size() const { return node_->size; }

  friend bool operator==(const ParseTree& a, const ParseTree& b);

 private:
  struct Node {
    Kind kind;
    Symbol symbol = 0;
    std::shared_ptr<const ParseTree> left;
    std::shared_ptr<const ParseTree> right;
    std::size_t size = 1;
  };
  explicit ParseTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ParseTree make(Kind kind, Symbol symbol, const ParseTree* left, const ParseTree* right);

  std::shared_ptr<const Node> node_;
};

/// The yield of a tree; Inl, Inr and Fold are transparent.
Word flatten(const ParseTree& p);

/// ⊢ p : e. A Fold node is checked against the unfolding of its μ-expression.
bool check_cfe_type(const ParseTree& p, const Cfe& e);

/// ⊢ᵣ t : r. Stars accept exactly `Fold (Inr Eps)` and
/// `Fold (Inl (Seq t1 t2))` with t1 : body and t2 : the star itself.
bool check_re_type(const ParseTree& t, const Regex& r);

/// Parse tree of `e` with empty yield. Throws NotNullable.
ParseTree mk_empty(const Cfe& e);

/// All valid parse trees of `e` with at most `max_nodes` nodes, without
/// duplicates, in a deterministic order.
std::vector<ParseTree> enumerate_trees(const Cfe& e, std::size_t max_nodes);

/// Compact constructor notation, e.g. `Fold (Inl (Seq (Sym x) Eps))`.
std::string show(const ParseTree& p);

}  // namespace cfx
