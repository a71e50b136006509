#include "cfx/tree.hpp"

#include <map>
#include <utility>

#include "cfx/cfe.hpp"
#include "cfx/error.hpp"

namespace cfx {

ParseTree ParseTree::make(Kind kind, Symbol symbol, const ParseTree* left,
                          const ParseTree* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->symbol = symbol;
  if (left) {
    node->left = std::make_shared<const ParseTree>(*left);
    node->size += left->size();
  }
  if (right) {
    node->right = std::make_shared<const ParseTree>(*right);
    node->size += right->size();
  }
  return ParseTree(std::move(node));
}

ParseTree ParseTree::eps() {
  static const ParseTree kEps = make(Kind::Eps, 0, nullptr, nullptr);
  return kEps;
}
ParseTree ParseTree::sym(Symbol x) { return make(Kind::Sym, x, nullptr, nullptr); }
ParseTree ParseTree::inl(ParseTree child) { return make(Kind::Inl, 0, &child, nullptr); }
ParseTree ParseTree::inr(ParseTree child) { return make(Kind::Inr, 0, &child, nullptr); }
ParseTree ParseTree::seq(ParseTree left, ParseTree right) {
  return make(Kind::Seq, 0, &left, &right);
}
ParseTree ParseTree::fold(ParseTree child) { return make(Kind::Fold, 0, &child, nullptr); }

bool operator==(const ParseTree& a, const ParseTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case ParseTree::Kind::Eps:
      return true;
    case ParseTree::Kind::Sym:
      return a.symbol() == b.symbol();
    case ParseTree::Kind::Seq:
      return a.left() == b.left() && a.right() == b.right();
    default:
      return a.child() == b.child();
  }
}

namespace {

void flatten_into(const ParseTree& p, Word& out) {
  switch (p.kind()) {
    case ParseTree::Kind::Eps:
      break;
    case ParseTree::Kind::Sym:
      out.push_back(p.symbol());
      break;
    case ParseTree::Kind::Seq:
      flatten_into(p.left(), out);
      flatten_into(p.right(), out);
      break;
    default:
      flatten_into(p.child(), out);
      break;
  }
}

}  // namespace

Word flatten(const ParseTree& p) {
  Word out;
  flatten_into(p, out);
  return out;
}

bool check_cfe_type(const ParseTree& p, const Cfe& e) {
  switch (p.kind()) {
    case ParseTree::Kind::Eps:
      return e.is(Cfe::Kind::Eps);
    case ParseTree::Kind::Sym:
      return e.is(Cfe::Kind::Sym) && e.symbol() == p.symbol();
    case ParseTree::Kind::Inl:
      return e.is(Cfe::Kind::Alt) && check_cfe_type(p.child(), e.left());
    case ParseTree::Kind::Inr:
      return e.is(Cfe::Kind::Alt) && check_cfe_type(p.child(), e.right());
    case ParseTree::Kind::Seq:
      return e.is(Cfe::Kind::Cat) && check_cfe_type(p.left(), e.left()) &&
             check_cfe_type(p.right(), e.right());
    case ParseTree::Kind::Fold:
      return e.is(Cfe::Kind::Mu) && check_cfe_type(p.child(), unfold(e));
  }
  return false;
}

bool check_re_type(const ParseTree& t, const Regex& r) {
  switch (t.kind()) {
    case ParseTree::Kind::Eps:
      return r.is(Regex::Kind::Eps);
    case ParseTree::Kind::Sym:
      return r.is(Regex::Kind::Sym) && r.symbol() == t.symbol();
    case ParseTree::Kind::Inl:
      return r.is(Regex::Kind::Alt) && check_re_type(t.child(), r.left());
    case ParseTree::Kind::Inr:
      return r.is(Regex::Kind::Alt) && check_re_type(t.child(), r.right());
    case ParseTree::Kind::Seq:
      return r.is(Regex::Kind::Cat) && check_re_type(t.left(), r.left()) &&
             check_re_type(t.right(), r.right());
    case ParseTree::Kind::Fold: {
      if (!r.is(Regex::Kind::Star)) return false;
      const ParseTree& c = t.child();
      if (c.is(ParseTree::Kind::Inr)) return c.child().is(ParseTree::Kind::Eps);
      if (c.is(ParseTree::Kind::Inl) && c.child().is(ParseTree::Kind::Seq)) {
        return check_re_type(c.child().left(), r.body()) && check_re_type(c.child().right(), r);
      }
      return false;
    }
  }
  return false;
}

ParseTree mk_empty(const Cfe& e) {
  if (!cfe_nullable(e)) throw NotNullable();
  switch (e.kind()) {
    case Cfe::Kind::Eps:
      return ParseTree::eps();
    case Cfe::Kind::Alt:
      if (cfe_nullable(e.left())) return ParseTree::inl(mk_empty(e.left()));
      return ParseTree::inr(mk_empty(e.right()));
    case Cfe::Kind::Cat:
      return ParseTree::seq(mk_empty(e.left()), mk_empty(e.right()));
    case Cfe::Kind::Mu:
      // ν ignores placeholders, so the nullable summands of the body never
      // reach a Var and the unfolding needs no substitution here.
      return ParseTree::fold(mk_empty(e.body()));
    default:
      throw NotNullable();
  }
}

namespace {

class TreeEnumerator {
 public:
  explicit TreeEnumerator(const Cfe& root) : binders_(mu_of_binder(root)) {}

  const std::vector<ParseTree>& trees(const Cfe& f, std::size_t budget) {
    auto key = std::make_pair(f.identity(), budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<ParseTree> out;
    if (budget >= 1) {
      switch (f.kind()) {
        case Cfe::Kind::Phi:
          break;
        case Cfe::Kind::Eps:
          out.push_back(ParseTree::eps());
          break;
        case Cfe::Kind::Sym:
          out.push_back(ParseTree::sym(f.symbol()));
          break;
        case Cfe::Kind::Var:
          out = trees(binders_.at(f.name()), budget);
          break;
        case Cfe::Kind::Mu:
          for (const ParseTree& p : trees(f.body(), budget - 1)) out.push_back(ParseTree::fold(p));
          break;
        case Cfe::Kind::Alt:
          for (const ParseTree& p : trees(f.left(), budget - 1)) out.push_back(ParseTree::inl(p));
          for (const ParseTree& p : trees(f.right(), budget - 1)) out.push_back(ParseTree::inr(p));
          break;
        case Cfe::Kind::Cat:
          if (budget >= 3) {
            for (const ParseTree& p : trees(f.left(), budget - 2)) {
              for (const ParseTree& q : trees(f.right(), budget - 1 - p.size())) {
                out.push_back(ParseTree::seq(p, q));
              }
            }
          }
          break;
      }
    }
    return memo_.insert_or_assign(key, std::move(out)).first->second;
  }

 private:
  std::map<std::string, Cfe> binders_;
  std::map<std::pair<const void*, std::size_t>, std::vector<ParseTree>> memo_;
};

}  // namespace

std::vector<ParseTree> enumerate_trees(const Cfe& e, std::size_t max_nodes) {
  TreeEnumerator enumerator(e);
  return enumerator.trees(e, max_nodes);
}

namespace {

void show_into(const ParseTree& p, std::string& out) {
  auto arg = [&](const ParseTree& c) {
    bool atomic = c.is(ParseTree::Kind::Eps);
    out.push_back(' ');
    if (!atomic) out.push_back('(');
    show_into(c, out);
    if (!atomic) out.push_back(')');
  };
  switch (p.kind()) {
    case ParseTree::Kind::Eps:
      out += "Eps";
      break;
    case ParseTree::Kind::Sym:
      out += "Sym ";
      out.push_back(p.symbol());
      break;
    case ParseTree::Kind::Inl:
      out += "Inl";
      arg(p.child());
      break;
    case ParseTree::Kind::Inr:
      out += "Inr";
      arg(p.child());
      break;
    case ParseTree::Kind::Fold:
      out += "Fold";
      arg(p.child());
      break;
    case ParseTree::Kind::Seq:
      out += "Seq";
      arg(p.left());
      arg(p.right());
      break;
  }
}

}  // namespace

std::string show(const ParseTree& p) {
  std::string out;
  show_into(p, out);
  return out;
}

}  // namespace cfx
