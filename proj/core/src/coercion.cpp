#include "cfx/coercion.hpp"

#include <array>
#include <stdexcept>

#include "cfx/error.hpp"

namespace cfx {

namespace {

struct ConstructorInfo {
  Constructor k;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<ConstructorInfo, 9> kConstructors{{
    {Constructor::Eps, "Eps", 0},
    {Constructor::Sym, "Sym", 1},
    {Constructor::Inl, "Inl", 1},
    {Constructor::Inr, "Inr", 1},
    {Constructor::Seq, "Seq", 2},
    {Constructor::Fold, "Fold", 1},
    {Constructor::Just, "Just", 1},
    {Constructor::Nothing, "Nothing", 0},
    {Constructor::Pair, "Pair", 2},
}};

}  // namespace

std::size_t arity(Constructor k) { return kConstructors[static_cast<std::size_t>(k)].arity; }

std::string_view constructor_name(Constructor k) {
  return kConstructors[static_cast<std::size_t>(k)].name;
}

std::optional<Constructor> constructor_from_name(std::string_view name) {
  for (const auto& info : kConstructors) {
    if (info.name == name) return info.k;
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- Pattern

Pattern Pattern::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return Pattern(std::move(node));
}

Pattern Pattern::con(Constructor k, std::vector<Pattern> args) {
  if (args.size() != arity(k)) {
    throw std::invalid_argument("pattern " + std::string(constructor_name(k)) + " expects " +
                                std::to_string(arity(k)) + " arguments");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Con;
  node->k = k;
  node->args = std::move(args);
  return Pattern(std::move(node));
}

std::vector<std::string> Pattern::variables() const {
  if (kind() == Kind::Var) return {name()};
  std::vector<std::string> out;
  for (const Pattern& p : args()) {
    auto vs = p.variables();
    out.insert(out.end(), vs.begin(), vs.end());
  }
  return out;
}

bool Pattern::is_linear() const {
  auto vs = variables();
  std::set<std::string> unique(vs.begin(), vs.end());
  return unique.size() == vs.size();
}

bool operator==(const Pattern& a, const Pattern& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Pattern::Kind::Var) return a.name() == b.name();
  return a.constructor() == b.constructor() && a.args() == b.args();
}

// -------------------------------------------------------------------- Term

Term Term::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::con(Constructor k, std::vector<Term> args) {
  if (args.size() != arity(k)) {
    throw std::invalid_argument("constructor " + std::string(constructor_name(k)) + " expects " +
                                std::to_string(arity(k)) + " arguments");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Con;
  node->k = k;
  node->args = std::move(args);
  return Term(std::move(node));
}

Term Term::lam(Pattern pat, Term body) {
  if (!pat.is_linear()) throw std::invalid_argument("lambda pattern is not linear");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lam;
  node->pattern = std::move(pat);
  node->args.push_back(std::move(body));
  return Term(std::move(node));
}

Term Term::app(Term fn, Term arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->args.push_back(std::move(fn));
  node->args.push_back(std::move(arg));
  return Term(std::move(node));
}

Term Term::rec(std::string name, Term body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Rec;
  node->name = std::move(name);
  node->args.push_back(std::move(body));
  return Term(std::move(node));
}

Term Term::case_of(Term scrutinee, std::vector<Branch> branches) {
  for (const auto& [pat, _] : branches) {
    if (!pat.is_linear()) throw std::invalid_argument("case pattern is not linear");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Case;
  node->args.push_back(std::move(scrutinee));
  node->branches = std::move(branches);
  return Term(std::move(node));
}

Term Term::prim(std::string id) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Prim;
  node->name = std::move(id);
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.args() != b.args()) return false;
  switch (a.kind()) {
    case Term::Kind::Con:
      return a.constructor() == b.constructor();
    case Term::Kind::Lam:
      return a.pattern() == b.pattern();
    case Term::Kind::Case:
      return a.branches() == b.branches();
    default:
      return true;
  }
}

namespace {

void free_vars_into(const Term& c, std::set<std::string>& bound, std::set<std::string>& out) {
  auto with = [&](const std::vector<std::string>& names, const Term& body) {
    std::vector<std::string> added;
    for (const auto& n : names) {
      if (bound.insert(n).second) added.push_back(n);
    }
    free_vars_into(body, bound, out);
    for (const auto& n : added) bound.erase(n);
  };
  switch (c.kind()) {
    case Term::Kind::Var:
      if (!bound.count(c.name())) out.insert(c.name());
      break;
    case Term::Kind::Con:
      for (const Term& a : c.args()) free_vars_into(a, bound, out);
      break;
    case Term::Kind::Lam:
      with(c.pattern().variables(), c.body());
      break;
    case Term::Kind::App:
      free_vars_into(c.fn(), bound, out);
      free_vars_into(c.arg(), bound, out);
      break;
    case Term::Kind::Rec:
      with({c.name()}, c.body());
      break;
    case Term::Kind::Case:
      free_vars_into(c.scrutinee(), bound, out);
      for (const auto& [pat, body] : c.branches()) with(pat.variables(), body);
      break;
    case Term::Kind::Prim:
      break;
  }
}

void prims_into(const Term& c, std::set<std::string>& out, std::set<const void*>& seen) {
  if (!seen.insert(c.identity()).second) return;
  if (c.kind() == Term::Kind::Prim) out.insert(c.name());
  for (const Term& a : c.args()) prims_into(a, out, seen);
  for (const auto& [_, body] : c.branches()) prims_into(body, out, seen);
}

}  // namespace

std::set<std::string> free_vars(const Term& c) {
  std::set<std::string> bound;
  std::set<std::string> out;
  free_vars_into(c, bound, out);
  return out;
}

std::set<std::string> prims_of(const Term& c) {
  std::set<std::string> out;
  std::set<const void*> seen;
  prims_into(c, out, seen);
  return out;
}

std::size_t term_size(const Term& c) {
  std::size_t n = 1;
  for (const Term& a : c.args()) n += term_size(a);
  for (const auto& [_, body] : c.branches()) n += term_size(body);
  return n;
}

// --------------------------------------------------------------------- Env

Env Env::bind(std::string name, Value value) const {
  auto frame = std::make_shared<Frame>();
  frame->name = std::move(name);
  frame->value = std::move(value);
  frame->parent = frame_;
  return Env(std::move(frame));
}

Env Env::bind_rec(std::string name, Term rec_term) const {
  auto frame = std::make_shared<Frame>();
  frame->name = std::move(name);
  frame->rec_term = std::move(rec_term);
  frame->rec_env = *this;
  frame->parent = frame_;
  return Env(std::move(frame));
}

Env Env::bind_all(const std::map<std::string, Value>& bindings) const {
  Env out = *this;
  for (const auto& [name, value] : bindings) out = out.bind(name, value);
  return out;
}

// ------------------------------------------------------------------- Value

Value Value::wrong() {
  static const Value kWrong = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Wrong;
    return Value(std::move(node));
  }();
  return kWrong;
}

Value Value::con(Constructor k, std::vector<Value> args) {
  if (args.size() != arity(k)) {
    throw std::invalid_argument("value " + std::string(constructor_name(k)) + " expects " +
                                std::to_string(arity(k)) + " arguments");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Con;
  node->k = k;
  node->args = std::move(args);
  return Value(std::move(node));
}

Value Value::atom(Symbol x) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->symbol = x;
  return Value(std::move(node));
}

Value Value::closure(Pattern pat, Term body, Env env) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Fn;
  node->pat = std::move(pat);
  node->body = std::move(body);
  node->env = std::move(env);
  return Value(std::move(node));
}

Value Value::native(Native fn) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Fn;
  node->native = std::move(fn);
  return Value(std::move(node));
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::Wrong:
      return true;
    case Value::Kind::Atom:
      return a.symbol() == b.symbol();
    case Value::Kind::Con:
      return a.constructor() == b.constructor() && a.args() == b.args();
    case Value::Kind::Fn:
      return false;
  }
  return false;
}

std::optional<std::map<std::string, Value>> match(const Value& a, const Pattern& pat) {
  std::map<std::string, Value> env;
  if (pat.kind() == Pattern::Kind::Var) {
    env.emplace(pat.name(), a);
    return env;
  }
  if (a.kind() != Value::Kind::Con || a.constructor() != pat.constructor() ||
      a.args().size() != pat.args().size()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < pat.args().size(); ++i) {
    auto sub = match(a.args()[i], pat.args()[i]);
    if (!sub) return std::nullopt;
    env.insert(sub->begin(), sub->end());
  }
  return env;
}

// ---------------------------------------------------------------- registry

void PrimRegistry::add(const std::string& id, Value::Native fn,
                       std::optional<RegularSignature> signature) {
  entries_.try_emplace(id, Entry{std::move(fn), std::move(signature)});
}

const PrimRegistry::Entry* PrimRegistry::find(const std::string& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

// --------------------------------------------------------------- evaluator

void Evaluator::tick() {
  ++steps_;
  if (fuel_ && steps_ > *fuel_) throw Diverged(steps_);
}

Value Evaluator::lookup(const std::string& name, const Env& env) {
  for (const Env::Frame* f = env.frame(); f != nullptr; f = f->parent.get()) {
    if (f->name != name) continue;
    if (f->value) return *f->value;
    return eval(*f->rec_term, f->rec_env);
  }
  return Value::wrong();
}

Value Evaluator::eval(const Term& c, const Env& env) {
  tick();
  switch (c.kind()) {
    case Term::Kind::Var:
      return lookup(c.name(), env);
    case Term::Kind::Con: {
      std::vector<Value> args;
      args.reserve(c.args().size());
      for (const Term& a : c.args()) args.push_back(eval(a, env));
      return Value::con(c.constructor(), std::move(args));
    }
    case Term::Kind::Lam:
      return Value::closure(c.pattern(), c.body(), env);
    case Term::Kind::App: {
      Value fn = eval(c.fn(), env);
      Value arg = eval(c.arg(), env);
      return apply(fn, arg);
    }
    case Term::Kind::Rec:
      return eval(c.body(), env.bind_rec(c.name(), c));
    case Term::Kind::Case: {
      Value scrutinee = eval(c.scrutinee(), env);
      for (const auto& [pat, body] : c.branches()) {
        if (auto bound = match(scrutinee, pat)) return eval(body, env.bind_all(*bound));
      }
      return Value::wrong();
    }
    case Term::Kind::Prim:
      if (const auto* entry = prims_.find(c.name())) return Value::native(entry->fn);
      return Value::wrong();
  }
  return Value::wrong();
}

Value Evaluator::apply(const Value& fn, const Value& arg) {
  if (fn.kind() != Value::Kind::Fn) return Value::wrong();
  const auto& node = *fn.node_;
  if (node.native) return node.native(arg);
  auto bound = match(arg, *node.pat);
  if (!bound) return Value::wrong();
  return eval(*node.body, node.env.bind_all(*bound));
}

Value eval(const Term& c, const PrimRegistry& prims, std::optional<std::uint64_t> fuel) {
  Evaluator evaluator(prims, fuel);
  return evaluator.eval(c, Env{});
}

// ---------------------------------------------------------------- encoding

Value encode(const ParseTree& p) {
  switch (p.kind()) {
    case ParseTree::Kind::Eps:
      return Value::con(Constructor::Eps);
    case ParseTree::Kind::Sym:
      return Value::con(Constructor::Sym, {Value::atom(p.symbol())});
    case ParseTree::Kind::Inl:
      return Value::con(Constructor::Inl, {encode(p.child())});
    case ParseTree::Kind::Inr:
      return Value::con(Constructor::Inr, {encode(p.child())});
    case ParseTree::Kind::Fold:
      return Value::con(Constructor::Fold, {encode(p.child())});
    case ParseTree::Kind::Seq:
      return Value::con(Constructor::Seq, {encode(p.left()), encode(p.right())});
  }
  return Value::wrong();
}

std::optional<ParseTree> decode_tree(const Value& v) {
  if (v.kind() != Value::Kind::Con) return std::nullopt;
  const auto& args = v.args();
  auto child = [&](std::size_t i) { return decode_tree(args[i]); };
  switch (v.constructor()) {
    case Constructor::Eps:
      return ParseTree::eps();
    case Constructor::Sym:
      if (args[0].kind() != Value::Kind::Atom) return std::nullopt;
      return ParseTree::sym(args[0].symbol());
    case Constructor::Inl:
      if (auto c = child(0)) return ParseTree::inl(*c);
      return std::nullopt;
    case Constructor::Inr:
      if (auto c = child(0)) return ParseTree::inr(*c);
      return std::nullopt;
    case Constructor::Fold:
      if (auto c = child(0)) return ParseTree::fold(*c);
      return std::nullopt;
    case Constructor::Seq: {
      auto l = child(0);
      auto r = child(1);
      if (l && r) return ParseTree::seq(*l, *r);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

Term tree_term(const ParseTree& p) {
  switch (p.kind()) {
    case ParseTree::Kind::Eps:
      return Term::con(Constructor::Eps);
    case ParseTree::Kind::Inl:
      return Term::con(Constructor::Inl, {tree_term(p.child())});
    case ParseTree::Kind::Inr:
      return Term::con(Constructor::Inr, {tree_term(p.child())});
    case ParseTree::Kind::Fold:
      return Term::con(Constructor::Fold, {tree_term(p.child())});
    case ParseTree::Kind::Seq:
      return Term::con(Constructor::Seq, {tree_term(p.left()), tree_term(p.right())});
    case ParseTree::Kind::Sym:
      break;
  }
  // The term language has no symbol literals.
  throw std::invalid_argument("tree_term: trees with symbols have no closed term");
}

std::optional<std::pair<ParseTree, ParseTree>> decode_maybe_pair(const Value& v) {
  if (v.kind() == Value::Kind::Con && v.constructor() == Constructor::Nothing) return std::nullopt;
  if (v.kind() == Value::Kind::Con && v.constructor() == Constructor::Just) {
    const Value& pair = v.args()[0];
    if (pair.kind() == Value::Kind::Con && pair.constructor() == Constructor::Pair) {
      auto p = decode_tree(pair.args()[0]);
      auto t = decode_tree(pair.args()[1]);
      if (p && t) return std::make_pair(*p, *t);
    }
  }
  throw WrongResult("expected Nothing or Just (p, t), got " + show(v));
}

std::optional<ParseTree> decode_maybe_tree(const Value& v) {
  if (v.kind() == Value::Kind::Con && v.constructor() == Constructor::Nothing) return std::nullopt;
  if (v.kind() == Value::Kind::Con && v.constructor() == Constructor::Just) {
    if (auto t = decode_tree(v.args()[0])) return t;
  }
  throw WrongResult("expected Nothing or Just t, got " + show(v));
}

Value apply_coercion(const Term& c, const std::vector<ParseTree>& args, const PrimRegistry& prims,
                     std::optional<std::uint64_t> fuel) {
  Evaluator evaluator(prims, fuel);
  Value input = args.size() == 1 ? encode(args[0])
                : args.size() == 2
                    ? Value::con(Constructor::Pair, {encode(args[0]), encode(args[1])})
                    : throw std::invalid_argument("apply_coercion expects one or two trees");
  Value result = evaluator.apply(evaluator.eval(c, Env{}), input);
  if (result.is_wrong()) throw WrongResult("coercion evaluated to Wrong");
  return result;
}

// ----------------------------------------------------------------- display

namespace {

void show_value(const Value& v, std::string& out) {
  switch (v.kind()) {
    case Value::Kind::Wrong:
      out += "W";
      return;
    case Value::Kind::Fn:
      out += "<fn>";
      return;
    case Value::Kind::Atom:
      out.push_back(v.symbol());
      return;
    case Value::Kind::Con:
      break;
  }
  if (v.constructor() == Constructor::Pair) {
    out.push_back('(');
    show_value(v.args()[0], out);
    out += ", ";
    show_value(v.args()[1], out);
    out.push_back(')');
    return;
  }
  out += constructor_name(v.constructor());
  for (const Value& a : v.args()) {
    bool atomic = a.kind() != Value::Kind::Con || a.args().empty() ||
                  a.constructor() == Constructor::Pair;
    out.push_back(' ');
    if (!atomic) out.push_back('(');
    show_value(a, out);
    if (!atomic) out.push_back(')');
  }
}

void show_pattern(const Pattern& p, std::string& out) {
  if (p.kind() == Pattern::Kind::Var) {
    out += p.name();
    return;
  }
  if (p.constructor() == Constructor::Pair) {
    out.push_back('(');
    show_pattern(p.args()[0], out);
    out += ", ";
    show_pattern(p.args()[1], out);
    out.push_back(')');
    return;
  }
  out += constructor_name(p.constructor());
  for (const Pattern& a : p.args()) {
    bool atomic = a.kind() == Pattern::Kind::Var || a.args().empty() ||
                  a.constructor() == Constructor::Pair;
    out.push_back(' ');
    if (!atomic) out.push_back('(');
    show_pattern(a, out);
    if (!atomic) out.push_back(')');
  }
}

void show_term(const Term& c, std::string& out) {
  switch (c.kind()) {
    case Term::Kind::Var:
      out += c.name();
      break;
    case Term::Kind::Prim:
      out += "<" + c.name() + ">";
      break;
    case Term::Kind::Con:
      if (c.constructor() == Constructor::Pair) {
        out.push_back('(');
        show_term(c.args()[0], out);
        out += ", ";
        show_term(c.args()[1], out);
        out.push_back(')');
        break;
      }
      out += constructor_name(c.constructor());
      for (const Term& a : c.args()) {
        out += " (";
        show_term(a, out);
        out.push_back(')');
      }
      break;
    case Term::Kind::Lam:
      out += "\\";
      show_pattern(c.pattern(), out);
      out += ". ";
      show_term(c.body(), out);
      break;
    case Term::Kind::App:
      out.push_back('(');
      show_term(c.fn(), out);
      out += ") (";
      show_term(c.arg(), out);
      out.push_back(')');
      break;
    case Term::Kind::Rec:
      out += "rec " + c.name() + ". ";
      show_term(c.body(), out);
      break;
    case Term::Kind::Case: {
      out += "case ";
      show_term(c.scrutinee(), out);
      out += " of [";
      bool first = true;
      for (const auto& [pat, body] : c.branches()) {
        if (!first) out += ", ";
        first = false;
        show_pattern(pat, out);
        out += " => ";
        show_term(body, out);
      }
      out.push_back(']');
      break;
    }
  }
}

}  // namespace

std::string show(const Value& v) {
  std::string out;
  show_value(v, out);
  return out;
}

std::string show(const Pattern& pat) {
  std::string out;
  show_pattern(pat, out);
  return out;
}

std::string show(const Term& c) {
  std::string out;
  show_term(c, out);
  return out;
}

}  // namespace cfx
