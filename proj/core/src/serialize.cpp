#include "cfx/serialize.hpp"

#include <json.hpp>
#include <set>

#include "cfx/error.hpp"
#include "cfx/syntax.hpp"

namespace cfx {

using json = nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw FormatError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
  return v;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
}

// ------------------------------------------------------------------- trees

json tree_json(const ParseTree& p) {
  switch (p.kind()) {
    case ParseTree::Kind::Eps:
      return {{"tag", "Eps"}};
    case ParseTree::Kind::Sym:
      return {{"tag", "Sym"}, {"sym", std::string(1, p.symbol())}};
    case ParseTree::Kind::Inl:
      return {{"tag", "Inl"}, {"child", tree_json(p.child())}};
    case ParseTree::Kind::Inr:
      return {{"tag", "Inr"}, {"child", tree_json(p.child())}};
    case ParseTree::Kind::Fold:
      return {{"tag", "Fold"}, {"child", tree_json(p.child())}};
    case ParseTree::Kind::Seq:
      return {{"tag", "Seq"}, {"left", tree_json(p.left())}, {"right", tree_json(p.right())}};
  }
  return {};
}

ParseTree tree_of(const json& j) {
  std::string tag = string_field(j, "tag");
  if (tag == "Eps") return ParseTree::eps();
  if (tag == "Sym") {
    std::string sym = string_field(j, "sym");
    if (sym.size() != 1) throw FormatError("symbol must be one character");
    return ParseTree::sym(sym[0]);
  }
  if (tag == "Inl") return ParseTree::inl(tree_of(field(j, "child")));
  if (tag == "Inr") return ParseTree::inr(tree_of(field(j, "child")));
  if (tag == "Fold") return ParseTree::fold(tree_of(field(j, "child")));
  if (tag == "Seq") return ParseTree::seq(tree_of(field(j, "left")), tree_of(field(j, "right")));
  throw FormatError("unknown tree tag '" + tag + "'");
}

// ------------------------------------------------------------------- terms

Constructor constructor_of(const json& j) {
  auto k = constructor_from_name(string_field(j, "k"));
  if (!k) throw FormatError("unknown constructor '" + string_field(j, "k") + "'");
  return *k;
}

json pattern_json(const Pattern& p) {
  if (p.kind() == Pattern::Kind::Var) return {{"tag", "PVar"}, {"name", p.name()}};
  json args = json::array();
  for (const Pattern& a : p.args()) args.push_back(pattern_json(a));
  return {{"tag", "PCon"}, {"k", std::string(constructor_name(p.constructor()))}, {"args", args}};
}

Pattern pattern_of(const json& j) {
  std::string tag = string_field(j, "tag");
  if (tag == "PVar") return Pattern::var(string_field(j, "name"));
  if (tag != "PCon") throw FormatError("unknown pattern tag '" + tag + "'");
  std::vector<Pattern> args;
  for (const json& a : array_field(j, "args")) args.push_back(pattern_of(a));
  Constructor k = constructor_of(j);
  if (args.size() != arity(k)) throw FormatError("arity mismatch for " + string_field(j, "k"));
  return Pattern::con(k, std::move(args));
}

Pattern linear(Pattern p) {
  if (!p.is_linear()) throw FormatError("pattern is not linear: " + show(p));
  return p;
}

std::string direction_name(RegularSignature::Direction d) {
  return d == RegularSignature::Direction::Up ? "up" : "down";
}

json term_json(const Term& c, const PrimRegistry& prims) {
  switch (c.kind()) {
    case Term::Kind::Var:
      return {{"tag", "Var"}, {"name", c.name()}};
    case Term::Kind::Con: {
      json args = json::array();
      for (const Term& a : c.args()) args.push_back(term_json(a, prims));
      return {{"tag", "Con"}, {"k", std::string(constructor_name(c.constructor()))}, {"args", args}};
    }
    case Term::Kind::Lam:
      return {{"tag", "Lam"}, {"pat", pattern_json(c.pattern())}, {"body", term_json(c.body(), prims)}};
    case Term::Kind::App:
      return {{"tag", "App"}, {"fn", term_json(c.fn(), prims)}, {"arg", term_json(c.arg(), prims)}};
    case Term::Kind::Rec:
      return {{"tag", "Rec"}, {"name", c.name()}, {"body", term_json(c.body(), prims)}};
    case Term::Kind::Case: {
      json branches = json::array();
      for (const auto& [pat, body] : c.branches()) {
        branches.push_back({{"pat", pattern_json(pat)}, {"body", term_json(body, prims)}});
      }
      return {{"tag", "Case"}, {"scrutinee", term_json(c.scrutinee(), prims)}, {"branches", branches}};
    }
    case Term::Kind::Prim: {
      const auto* entry = prims.find(c.name());
      if (!entry || !entry->signature) throw FormatError("primitive without signature: " + c.name());
      const RegularSignature& sig = *entry->signature;
      return {{"tag", "Prim"},
              {"id", c.name()},
              {"direction", direction_name(sig.direction)},
              {"source", render(sig.source)},
              {"target", render(sig.target)}};
    }
  }
  return {};
}

Regex regex_field(const json& j, const char* key) {
  try {
    return parse_regex(string_field(j, key));
  } catch (const SyntaxError& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

class TermReader {
 public:
  Term read(const json& j) {
    std::string tag = string_field(j, "tag");
    if (tag == "Var") return Term::var(string_field(j, "name"));
    if (tag == "Con") {
      std::vector<Term> args;
      for (const json& a : array_field(j, "args")) args.push_back(read(a));
      Constructor k = constructor_of(j);
      if (args.size() != arity(k)) throw FormatError("arity mismatch for " + string_field(j, "k"));
      return Term::con(k, std::move(args));
    }
    if (tag == "Lam") return Term::lam(linear(pattern_of(field(j, "pat"))), read(field(j, "body")));
    if (tag == "App") return Term::app(read(field(j, "fn")), read(field(j, "arg")));
    if (tag == "Rec") return Term::rec(string_field(j, "name"), read(field(j, "body")));
    if (tag == "Case") {
      std::vector<Term::Branch> branches;
      for (const json& b : array_field(j, "branches")) {
        branches.emplace_back(linear(pattern_of(field(b, "pat"))), read(field(b, "body")));
      }
      return Term::case_of(read(field(j, "scrutinee")), std::move(branches));
    }
    if (tag == "Prim") return prim(j);
    throw FormatError("unknown term tag '" + tag + "'");
  }

  const std::vector<RegularSignature>& signatures() const { return signatures_; }

 private:
  Term prim(const json& j) {
    std::string id = string_field(j, "id");
    std::string dir = string_field(j, "direction");
    if (dir != "up" && dir != "down") throw FormatError("unknown direction '" + dir + "'");
    RegularSignature sig{dir == "up" ? RegularSignature::Direction::Up
                                     : RegularSignature::Direction::Down,
                         regex_field(j, "source"), regex_field(j, "target")};
    if (prim_id(sig) != id) throw FormatError("primitive id does not match its signature: " + id);
    if (seen_.insert(id).second) signatures_.push_back(sig);
    return Term::prim(id);
  }

  std::set<std::string> seen_;
  std::vector<RegularSignature> signatures_;
};

}  // namespace

std::string tree_to_json(const ParseTree& p) { return tree_json(p).dump(); }

ParseTree tree_from_json(std::string_view text) { return tree_of(parse_json(text)); }

std::string term_to_json(const Term& c, const PrimRegistry& prims) {
  return term_json(c, prims).dump();
}

Term term_from_json(std::string_view text) {
  TermReader reader;
  return reader.read(parse_json(text));
}

std::string coercion_to_json(const Coercion& c) { return term_to_json(c.term, *c.prims); }

Coercion coercion_from_json(std::string_view text) {
  TermReader reader;
  Term term = reader.read(parse_json(text));
  return Coercion{term, std::make_shared<PrimRegistry>(registry_from(reader.signatures()))};
}

}  // namespace cfx
