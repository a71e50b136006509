#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfx/regex.hpp"
#include "cfx/tree.hpp"

namespace cfx {

enum class Constructor { Eps, Sym, Inl, Inr, Seq, Fold, Just, Nothing, Pair };

std::size_t arity(Constructor k);
std::string_view constructor_name(Constructor k);
std::optional<Constructor> constructor_from_name(std::string_view name);

/// Linear pattern: a variable or a constructor applied to sub-patterns.
class Pattern {
 public:
  enum class Kind { Var, Con };

  static Pattern var(std::string name);
  /// Throws std::invalid_argument on an arity mismatch.
  static Pattern con(Constructor k, std::vector<Pattern> args = {});

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Constructor constructor() const { return node_->k; }
  const std::vector<Pattern>& args() const { return node_->args; }

  /// Pattern variables in left-to-right order.
  std::vector<std::string> variables() const;
  bool is_linear() const;

  friend bool operator==(const Pattern& a, const Pattern& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    Constructor k = Constructor::Eps;
    std::vector<Pattern> args;
  };
  explicit Pattern(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Coercion term: λ-calculus with constructors, pattern matching, `rec` and
/// references to registered primitive coercions.
class Term {
 public:
  enum class Kind { Var, Con, Lam, App, Rec, Case, Prim };
  using Branch = std::pair<Pattern, Term>;

  static Term var(std::string name);
  /// Throws std::invalid_argument on an arity mismatch.
  static Term con(Constructor k, std::vector<Term> args = {});
  /// Throws std::invalid_argument for a non-linear pattern.
  static Term lam(Pattern pat, Term body);
  static Term app(Term fn, Term arg);
  static Term rec(std::string name, Term body);
  static Term case_of(Term scrutinee, std::vector<Branch> branches);
  static Term prim(std::string id);

  Kind kind() const { return node_->kind; }
  /// Variable of Var and Rec, identifier of Prim.
  const std::string& name() const { return node_->name; }
  Constructor constructor() const { return node_->k; }
  const std::vector<Term>& args() const { return node_->args; }
  const Pattern& pattern() const { return *node_->pattern; }
  /// Body of Lam and Rec, function of App, scrutinee of Case.
  const Term& body() const { return node_->args[0]; }
  const Term& fn() const { return node_->args[0]; }
  const Term& arg() const { return node_->args[1]; }
  const Term& scrutinee() const { return node_->args[0]; }
  const std::vector<Branch>& branches() const { return node_->branches; }

  const void* identity() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    Constructor k = Constructor::Eps;
    std::vector<Term> args;
    std::optional<Pattern> pattern;
    std::vector<Branch> branches;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Free variables of a term (Prim identifiers are not variables).
std::set<std::string> free_vars(const Term& c);
/// Prim identifiers referenced by a term.
std::set<std::string> prims_of(const Term& c);
/// Number of nodes, counting shared subterms once per occurrence.
std::size_t term_size(const Term& c);

class Value;

/// Evaluation environment: a persistent chain of frames.
class Env {
 public:
  Env() = default;

  Env bind(std::string name, Value value) const;
  /// Binds `name` to the recursive value of `rec_term` (a Rec node) closed
  /// over `*this`.
  Env bind_rec(std::string name, Term rec_term) const;
  Env bind_all(const std::map<std::string, Value>& bindings) const;

  struct Frame;
  const Frame* frame() const { return frame_.get(); }

 private:
  explicit Env(std::shared_ptr<const Frame> frame) : frame_(std::move(frame)) {}
  std::shared_ptr<const Frame> frame_;
};

class Evaluator;

/// Element of the value domain: Wrong, a function, a constructor applied to
/// values, or a symbol atom (the payload of `Sym`).
class Value {
 public:
  enum class Kind { Wrong, Fn, Con, Atom };
  using Native = std::function<Value(const Value&)>;

  static Value wrong();
  static Value con(Constructor k, std::vector<Value> args = {});
  static Value atom(Symbol x);
  static Value closure(Pattern pat, Term body, Env env);
  static Value native(Native fn);

  Kind kind() const { return node_->kind; }
  bool is_wrong() const { return kind() == Kind::Wrong; }
  Constructor constructor() const { return node_->k; }
  const std::vector<Value>& args() const { return node_->args; }
  Symbol symbol() const { return node_->symbol; }

  /// Structural on constructors and atoms; functions compare by identity.
  friend bool operator==(const Value& a, const Value& b);

 private:
  friend class Evaluator;
  struct Node {
    Kind kind;
    Constructor k = Constructor::Eps;
    std::vector<Value> args;
    Symbol symbol = 0;
    std::optional<Pattern> pat;
    std::optional<Term> body;
    Env env;
    Native native;
  };
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Env::Frame {
  std::string name;
  std::optional<Value> value;
  std::optional<Term> rec_term;
  Env rec_env;
  std::shared_ptr<const Frame> parent;
};

/// Pattern matching; binds every pattern variable or fails.
std::optional<std::map<std::string, Value>> match(const Value& a, const Pattern& pat);

/// The (direction, source, target) triple of a regular coercion.
struct RegularSignature {
  enum class Direction { Up, Down };
  Direction direction;
  Regex source;
  Regex target;
};

/// Named native coercions referenced by Prim terms. Populated while
/// synthesizing, then treated as frozen.
class PrimRegistry {
 public:
  struct Entry {
    Value::Native fn;
    std::optional<RegularSignature> signature;
  };

  /// Registers `id`; an existing entry with the same id is kept.
  void add(const std::string& id, Value::Native fn,
           std::optional<RegularSignature> signature = std::nullopt);
  const Entry* find(const std::string& id) const;
  bool contains(const std::string& id) const { return find(id) != nullptr; }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
};

/// Denotational evaluator with an optional step budget.
class Evaluator {
 public:
  explicit Evaluator(const PrimRegistry& prims, std::optional<std::uint64_t> fuel = std::nullopt)
      : prims_(prims), fuel_(fuel) {}

  /// Throws Diverged when the step budget runs out.
  Value eval(const Term& c, const Env& env);
  /// Applies a function value; a non-function yields Wrong.
  Value apply(const Value& fn, const Value& arg);

  std::uint64_t steps() const { return steps_; }

 private:
  Value lookup(const std::string& name, const Env& env);
  void tick();

  const PrimRegistry& prims_;
  std::optional<std::uint64_t> fuel_;
  std::uint64_t steps_ = 0;
};

/// Evaluates a closed term.
Value eval(const Term& c, const PrimRegistry& prims, std::optional<std::uint64_t> fuel = std::nullopt);

/// Tree ↔ value embedding. `Sym x` becomes `Sym` applied to the atom x.
Value encode(const ParseTree& p);
std::optional<ParseTree> decode_tree(const Value& v);
/// Term that constructs the given tree.
Term tree_term(const ParseTree& p);

/// `Just (p, t)` as a pair of trees; nothing for `Nothing` and throws
/// WrongResult for anything else.
std::optional<std::pair<ParseTree, ParseTree>> decode_maybe_pair(const Value& v);
/// `Just t` / `Nothing`; throws WrongResult for anything else.
std::optional<ParseTree> decode_maybe_tree(const Value& v);

/// Encodes the trees (one tree as itself, two as a Pair), applies `c` and
/// returns the result. Throws Diverged, and WrongResult when the result is
/// Wrong.
Value apply_coercion(const Term& c, const std::vector<ParseTree>& args, const PrimRegistry& prims,
                     std::optional<std::uint64_t> fuel = std::nullopt);

/// Readable single-line rendering of values and terms.
std::string show(const Value& v);
std::string show(const Pattern& pat);
std::string show(const Term& c);

}  // namespace cfx
