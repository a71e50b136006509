#include "cfx/cfe.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "cfx/error.hpp"

namespace cfx {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Cfe Cfe::make(Kind kind, Symbol symbol, std::string name, const Cfe* left, const Cfe* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->symbol = symbol;
  node->hash = mix(static_cast<std::size_t>(kind) + 101, static_cast<unsigned char>(symbol));
  node->hash = mix(node->hash, std::hash<std::string>{}(name));
  node->name = std::move(name);
  if (left) {
    node->left = std::make_shared<const Cfe>(*left);
    node->size += left->size();
    node->hash = mix(node->hash, left->hash());
  }
  if (right) {
    node->right = std::make_shared<const Cfe>(*right);
    node->size += right->size();
    node->hash = mix(node->hash, right->hash());
  }
  return Cfe(std::move(node));
}

Cfe Cfe::phi() {
  static const Cfe kPhi = make(Kind::Phi, 0, {}, nullptr, nullptr);
  return kPhi;
}

Cfe Cfe::eps() {
  static const Cfe kEps = make(Kind::Eps, 0, {}, nullptr, nullptr);
  return kEps;
}

Cfe Cfe::sym(Symbol x) { return make(Kind::Sym, x, {}, nullptr, nullptr); }
Cfe Cfe::var(std::string name) { return make(Kind::Var, 0, std::move(name), nullptr, nullptr); }
Cfe Cfe::alt(Cfe left, Cfe right) { return make(Kind::Alt, 0, {}, &left, &right); }
Cfe Cfe::cat(Cfe left, Cfe right) { return make(Kind::Cat, 0, {}, &left, &right); }
Cfe Cfe::mu(std::string binder, Cfe body) {
  return make(Kind::Mu, 0, std::move(binder), &body, nullptr);
}

bool operator==(const Cfe& a, const Cfe& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Cfe::Kind::Phi:
    case Cfe::Kind::Eps:
      return true;
    case Cfe::Kind::Sym:
      return a.symbol() == b.symbol();
    case Cfe::Kind::Var:
      return a.name() == b.name();
    case Cfe::Kind::Mu:
      return a.name() == b.name() && a.body() == b.body();
    case Cfe::Kind::Alt:
    case Cfe::Kind::Cat:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::strong_ordering operator<=>(const Cfe& a, const Cfe& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Cfe::Kind::Phi:
    case Cfe::Kind::Eps:
      return std::strong_ordering::equal;
    case Cfe::Kind::Sym:
      return a.symbol() <=> b.symbol();
    case Cfe::Kind::Var:
      return a.name() <=> b.name();
    case Cfe::Kind::Mu:
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return a.body() <=> b.body();
    case Cfe::Kind::Alt:
    case Cfe::Kind::Cat:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
  return std::strong_ordering::equal;
}

// -------------------------------------------------------- well-formedness

namespace {

void check_rec(const Cfe& e, std::vector<std::string>& scope, std::set<std::string>& binders) {
  switch (e.kind()) {
    case Cfe::Kind::Var:
      if (std::find(scope.begin(), scope.end(), e.name()) == scope.end()) {
        throw UnboundPlaceholder(e.name());
      }
      break;
    case Cfe::Kind::Mu:
      if (!binders.insert(e.name()).second) throw DuplicateBinder(e.name());
      scope.push_back(e.name());
      check_rec(e.body(), scope, binders);
      scope.pop_back();
      break;
    case Cfe::Kind::Alt:
    case Cfe::Kind::Cat:
      check_rec(e.left(), scope, binders);
      check_rec(e.right(), scope, binders);
      break;
    default:
      break;
  }
}

}  // namespace

void check_well_formed(const Cfe& e) {
  std::vector<std::string> scope;
  std::set<std::string> binders;
  check_rec(e, scope, binders);
}

bool is_well_formed(const Cfe& e) {
  try {
    check_well_formed(e);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ------------------------------------------------------------ substitution

namespace {

Cfe subst_rec(const Cfe& e, const Binding& binding) {
  switch (e.kind()) {
    case Cfe::Kind::Var:
      if (auto it = binding.find(e.name()); it != binding.end()) return it->second;
      return e;
    case Cfe::Kind::Alt:
    case Cfe::Kind::Cat: {
      Cfe l = subst_rec(e.left(), binding);
      Cfe r = subst_rec(e.right(), binding);
      if (l.identity() == e.left().identity() && r.identity() == e.right().identity()) return e;
      return e.is(Cfe::Kind::Alt) ? Cfe::alt(std::move(l), std::move(r))
                                  : Cfe::cat(std::move(l), std::move(r));
    }
    case Cfe::Kind::Mu: {
      if (binding.count(e.name())) {
        Binding inner = binding;
        inner.erase(e.name());
        if (inner.empty()) return e;
        Cfe b = subst_rec(e.body(), inner);
        return b.identity() == e.body().identity() ? e : Cfe::mu(e.name(), std::move(b));
      }
      Cfe b = subst_rec(e.body(), binding);
      return b.identity() == e.body().identity() ? e : Cfe::mu(e.name(), std::move(b));
    }
    default:
      return e;
  }
}

}  // namespace

Cfe substitute(const Cfe& e, const std::string& binder, const Cfe& f) {
  return subst_rec(e, Binding{{binder, f}});
}

Cfe apply_binding(const Binding& binding, const Cfe& e) {
  if (binding.empty()) return e;
  return subst_rec(e, binding);
}

Cfe unfold(const Cfe& e) {
  if (!e.is(Cfe::Kind::Mu)) throw NotAMu();
  return substitute(e.body(), e.name(), e);
}

bool cfe_nullable(const Cfe& e) {
  switch (e.kind()) {
    case Cfe::Kind::Phi:
    case Cfe::Kind::Sym:
    case Cfe::Kind::Var:
      return false;
    case Cfe::Kind::Eps:
      return true;
    case Cfe::Kind::Alt:
      return cfe_nullable(e.left()) || cfe_nullable(e.right());
    case Cfe::Kind::Cat:
      return cfe_nullable(e.left()) && cfe_nullable(e.right());
    case Cfe::Kind::Mu:
      return cfe_nullable(e.body());
  }
  return false;
}

// ------------------------------------------------------------- guardedness

namespace {

bool guarded_expr(const Cfe& e);

// g ::= x.e | 1 | x.e + g, with distinct guards.
bool guarded_body(const Cfe& g, std::set<Symbol>& guards) {
  auto guard = [&](const Cfe& c) {
    return c.is(Cfe::Kind::Cat) && c.left().is(Cfe::Kind::Sym) &&
           guards.insert(c.left().symbol()).second && guarded_expr(c.right());
  };
  if (g.is(Cfe::Kind::Eps)) return true;
  if (g.is(Cfe::Kind::Alt)) return guard(g.left()) && guarded_body(g.right(), guards);
  return guard(g);
}

bool guarded_expr(const Cfe& e) {
  switch (e.kind()) {
    case Cfe::Kind::Alt:
    case Cfe::Kind::Cat:
      return guarded_expr(e.left()) && guarded_expr(e.right());
    case Cfe::Kind::Mu: {
      std::set<Symbol> guards;
      return guarded_body(e.body(), guards);
    }
    default:
      return true;
  }
}

}  // namespace

bool is_guarded(const Cfe& e) { return guarded_expr(e); }

// ---------------------------------------------------- subterms and binders

CfeSet subterms(const Cfe& e) {
  CfeSet out;
  std::function<void(const Cfe&)> walk = [&](const Cfe& f) {
    out.insert(f);
    switch (f.kind()) {
      case Cfe::Kind::Alt:
      case Cfe::Kind::Cat:
        walk(f.left());
        walk(f.right());
        break;
      case Cfe::Kind::Mu:
        walk(f.body());
        break;
      default:
        break;
    }
  };
  walk(e);
  return out;
}

Binding binding_subst(const Cfe& e) {
  Binding out;
  std::function<void(const Cfe&, const Binding&)> walk = [&](const Cfe& f, const Binding& outer) {
    switch (f.kind()) {
      case Cfe::Kind::Alt:
      case Cfe::Kind::Cat:
        walk(f.left(), outer);
        walk(f.right(), outer);
        break;
      case Cfe::Kind::Mu: {
        Cfe closed = apply_binding(outer, f);
        out.insert_or_assign(f.name(), closed);
        Binding inner = outer;
        inner.insert_or_assign(f.name(), closed);
        walk(f.body(), inner);
        break;
      }
      default:
        break;
    }
  };
  walk(e, {});
  return out;
}

std::map<std::string, Cfe> mu_of_binder(const Cfe& e) {
  std::map<std::string, Cfe> out;
  for (const Cfe& f : subterms(e)) {
    if (f.is(Cfe::Kind::Mu)) out.insert_or_assign(f.name(), f);
  }
  return out;
}

// ---------------------------------------------------------- word oracle

std::set<Word> enumerate_words(const Cfe& e, std::size_t max_len) {
  // Least solution of the bounded language equations, one per subterm, with
  // placeholders reading the equation of their μ-subterm.
  CfeSet all = subterms(e);
  std::vector<Cfe> terms(all.begin(), all.end());
  std::sort(terms.begin(), terms.end());  // children precede parents
  std::map<Cfe, std::size_t> index;
  for (std::size_t i = 0; i < terms.size(); ++i) index.emplace(terms[i], i);
  auto binders = mu_of_binder(e);

  std::vector<std::set<Word>> lang(terms.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const Cfe& f = terms[i];
      std::set<Word> next;
      switch (f.kind()) {
        case Cfe::Kind::Phi:
          break;
        case Cfe::Kind::Eps:
          next.insert(Word{});
          break;
        case Cfe::Kind::Sym:
          if (max_len >= 1) next.insert(Word(1, f.symbol()));
          break;
        case Cfe::Kind::Var:
          next = lang[index.at(binders.at(f.name()))];
          break;
        case Cfe::Kind::Mu:
          next = lang[index.at(f.body())];
          break;
        case Cfe::Kind::Alt:
          next = lang[index.at(f.left())];
          next.insert(lang[index.at(f.right())].begin(), lang[index.at(f.right())].end());
          break;
        case Cfe::Kind::Cat:
          for (const Word& u : lang[index.at(f.left())]) {
            for (const Word& v : lang[index.at(f.right())]) {
              if (u.size() + v.size() <= max_len) next.insert(u + v);
            }
          }
          break;
      }
      if (next.size() != lang[i].size()) {
        lang[i] = std::move(next);
        changed = true;
      }
    }
  }
  return lang[index.at(e)];
}

Alphabet symbols_of(const Cfe& e) {
  std::string out;
  for (const Cfe& f : subterms(e)) {
    if (f.is(Cfe::Kind::Sym)) out.push_back(f.symbol());
  }
  return Alphabet(out);
}

Cfe from_regex(const Regex& r, const std::string& fresh_prefix) {
  std::size_t counter = 0;
  std::function<Cfe(const Regex&)> go = [&](const Regex& s) -> Cfe {
    switch (s.kind()) {
      case Regex::Kind::Phi:
        return Cfe::phi();
      case Regex::Kind::Eps:
        return Cfe::eps();
      case Regex::Kind::Sym:
        return Cfe::sym(s.symbol());
      case Regex::Kind::Alt:
        return Cfe::alt(go(s.left()), go(s.right()));
      case Regex::Kind::Cat:
        return Cfe::cat(go(s.left()), go(s.right()));
      case Regex::Kind::Star: {
        std::string binder = fresh_prefix + std::to_string(counter++);
        Cfe body = go(s.body());
        return Cfe::mu(binder, Cfe::alt(Cfe::cat(body, Cfe::var(binder)), Cfe::eps()));
      }
    }
    return Cfe::phi();
  };
  return go(r);
}

// -------------------------------------------------------------- rendering

namespace {

void render_into(const Cfe& e, std::string& out, bool top);

void render_operand(const Cfe& e, std::string& out, bool parens) {
  if (parens) out.push_back('(');
  render_into(e, out, parens);
  if (parens) out.push_back(')');
}

void render_into(const Cfe& e, std::string& out, bool top) {
  switch (e.kind()) {
    case Cfe::Kind::Phi:
      out.push_back('0');
      break;
    case Cfe::Kind::Eps:
      out.push_back('1');
      break;
    case Cfe::Kind::Sym:
      out.push_back(e.symbol());
      break;
    case Cfe::Kind::Var:
      out += e.name();
      break;
    case Cfe::Kind::Alt:
      render_operand(e.left(), out,
                     e.left().is(Cfe::Kind::Alt) || e.left().is(Cfe::Kind::Mu));
      out.push_back('+');
      render_operand(e.right(), out, e.right().is(Cfe::Kind::Mu));
      break;
    case Cfe::Kind::Cat:
      render_operand(e.left(), out,
                     e.left().is(Cfe::Kind::Alt) || e.left().is(Cfe::Kind::Cat) ||
                         e.left().is(Cfe::Kind::Mu));
      out.push_back('.');
      render_operand(e.right(), out,
                     e.right().is(Cfe::Kind::Alt) || e.right().is(Cfe::Kind::Mu));
      break;
    case Cfe::Kind::Mu:
      if (!top) out.push_back('(');
      out += "mu " + e.name() + ". ";
      render_into(e.body(), out, true);
      if (!top) out.push_back(')');
      break;
  }
}

}  // namespace

std::string render(const Cfe& e) {
  std::string out;
  render_into(e, out, true);
  return out;
}

}  // namespace cfx
