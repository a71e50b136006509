#include "cfx/coerce.hpp"

#include "cfx/error.hpp"

namespace cfx {

Regex sigma_star(const Alphabet& sigma) {
  if (sigma.empty()) throw EmptyAlphabet();
  auto it = sigma.symbols().rbegin();
  Regex sum = Regex::sym(*it);
  for (++it; it != sigma.symbols().rend(); ++it) sum = Regex::alt(Regex::sym(*it), sum);
  return Regex::star(simp(sum));
}

// ------------------------------------------------------- regular coercions

std::string prim_id(const RegularSignature& signature) {
  std::string dir = signature.direction == RegularSignature::Direction::Up ? "up" : "down";
  return dir + "(" + render(signature.source) + "," + render(signature.target) + ")";
}

Value::Native regular_fn(const RegularSignature& signature) {
  if (signature.direction == RegularSignature::Direction::Up) {
    return [target = signature.target](const Value& v) {
      auto t = decode_tree(v);
      if (!t) return Value::wrong();
      auto out = re_parse(target, flatten(*t));
      return out ? encode(*out) : Value::wrong();
    };
  }
  return [source = signature.source](const Value& v) {
    auto t = decode_tree(v);
    if (!t) return Value::wrong();
    auto out = re_parse(source, flatten(*t));
    return out ? Value::con(Constructor::Just, {encode(*out)}) : Value::con(Constructor::Nothing);
  };
}

PrimRegistry registry_from(const std::vector<RegularSignature>& signatures) {
  PrimRegistry prims;
  for (const auto& sig : signatures) prims.add(prim_id(sig), regular_fn(sig), sig);
  return prims;
}

namespace {

RegCoercion make_regular(RegularSignature::Direction d, const Regex& r, const Regex& s) {
  RegularSignature sig{d, r, s};
  return RegCoercion{prim_id(sig), sig, regular_fn(sig)};
}

}  // namespace

RegCoercion re_upcast(const Regex& r, const Regex& s) {
  if (!re_contains(r, s, symbols_of(r).merged(symbols_of(s)))) {
    throw NotContained(render(r) + " <= " + render(s));
  }
  return make_regular(RegularSignature::Direction::Up, r, s);
}

RegCoercion re_downcast(const Regex& r, const Regex& s) {
  return make_regular(RegularSignature::Direction::Down, r, s);
}

// ---------------------------------------------------------------- synthesis

namespace {

Pattern pv(const char* name) { return Pattern::var(name); }
Pattern pcon(Constructor k, std::vector<Pattern> args = {}) { return Pattern::con(k, std::move(args)); }
Pattern ppair(Pattern a, Pattern b) { return pcon(Constructor::Pair, {std::move(a), std::move(b)}); }
Term v(const char* name) { return Term::var(name); }
Term con(Constructor k, std::vector<Term> args = {}) { return Term::con(k, std::move(args)); }
Term pair(Term a, Term b) { return con(Constructor::Pair, {std::move(a), std::move(b)}); }
Term just(Term a) { return con(Constructor::Just, {std::move(a)}); }
Term nothing() { return con(Constructor::Nothing); }
Term app(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }

// case s of [Nothing ⇒ Nothing, pat ⇒ body]
Term on_just(Term scrutinee, Pattern pat, Term body) {
  return Term::case_of(std::move(scrutinee),
                       {{pcon(Constructor::Nothing), nothing()},
                        {pcon(Constructor::Just, {std::move(pat)}), std::move(body)}});
}

}  // namespace

Synthesizer::Synthesizer(Cfe root, Alphabet sigma)
    : root_(std::move(root)),
      reach_(root_, std::move(sigma)),
      binders_(mu_of_binder(root_)),
      prims_(std::make_shared<PrimRegistry>()) {}

std::string Synthesizer::variable_name(const Cfe& mu, const Regex& r) {
  return "v_" + mu.name() + "[" + render(r) + "]";
}

Term Synthesizer::upcast_derive(const CoercionEnv& env, const Cfe& f, const Regex& r) {
  CoercionEnv scoped = env;
  return derive(CastDirection::Up, scoped, f, r);
}

Term Synthesizer::downcast_derive(const CoercionEnv& env, const Cfe& f, const Regex& r) {
  CoercionEnv scoped = env;
  return derive(CastDirection::Down, scoped, f, r);
}

Term Synthesizer::prim(const RegCoercion& b) {
  b.register_in(*prims_);
  return b.term();
}

Term Synthesizer::derive(CastDirection d, CoercionEnv& env, const Cfe& f, const Regex& r) {
  switch (f.kind()) {
    case Cfe::Kind::Var:
      return recursive(d, env, binders_.at(f.name()), r);
    case Cfe::Kind::Mu:
      return recursive(d, env, f, r);
    default:
      return d == CastDirection::Up ? derive_up(env, f, r) : derive_down(env, f, r);
  }
}

// Rules Rec and Hyp, shared by both directions.
Term Synthesizer::recursive(CastDirection d, CoercionEnv& env, const Cfe& mu, const Regex& r) {
  ReachKey key{mu, r};
  if (auto it = env.find(key); it != env.end()) return Term::var(it->second);
  RecCache& cache = d == CastDirection::Up ? up_ : down_;
  if (cache.terms.count(key)) return instantiate(cache, key, env);

  std::string name = variable_name(mu, r);
  ++cache.count[key];
  cache.keys.emplace(name, key);
  env.emplace(key, name);
  Term body = derive(d, env, mu.body(), r);
  env.erase(key);

  Term term = d == CastDirection::Up
                  ? Term::rec(name, Term::lam(ppair(pcon(Constructor::Fold, {pv("p")}), pv("t")),
                                              app(body, pair(v("p"), v("t")))))
                  : Term::rec(name, Term::lam(pv("t"), on_just(app(body, v("t")),
                                                               ppair(pv("p"), pv("t1")),
                                                               just(pair(con(Constructor::Fold,
                                                                             {v("p")}),
                                                                         v("t1"))))));
  cache.terms.emplace(key, term);
  return term;
}

// A cached recursive coercion may mention assumptions of the scope it was
// built in. Outside that scope each such variable is bound to the cached
// coercion of its own key.
Term Synthesizer::instantiate(RecCache& cache, const ReachKey& key, const CoercionEnv& env) {
  Term term = cache.terms.at(key);
  for (const std::string& name : free_vars(term)) {
    auto k = cache.keys.find(name);
    if (k == cache.keys.end()) continue;
    auto bound = env.find(k->second);
    if (bound != env.end() && bound->second == name) continue;
    term = app(Term::lam(Pattern::var(name), term), instantiate(cache, k->second, env));
  }
  return term;
}

Term Synthesizer::derive_up(CoercionEnv& env, const Cfe& f, const Regex& r) {
  switch (f.kind()) {
    case Cfe::Kind::Phi:
      // No parse tree of φ exists, so the coercion is never applied.
      return Term::lam(pv("x"), Term::case_of(v("x"), {}));
    case Cfe::Kind::Eps: {
      Term b = prim(re_upcast(simp(r), r));
      return Term::lam(ppair(pcon(Constructor::Eps), pv("t")), app(b, v("t")));
    }
    case Cfe::Kind::Sym: {
      Regex rest = Regex::cat(Regex::sym(f.symbol()), simp(deriv(r, f.symbol())));
      Term b = prim(re_upcast(rest, r));
      return Term::lam(ppair(pv("v"), pv("t")), app(b, con(Constructor::Seq, {v("v"), v("t")})));
    }
    case Cfe::Kind::Alt: {
      Term c1 = derive(CastDirection::Up, env, f.left(), r);
      Term c2 = derive(CastDirection::Up, env, f.right(), r);
      Regex both = reach_.plus(f, r);
      Term b1 = prim(re_downcast(reach_.plus(f.left(), r), both));
      Term b2 = prim(re_downcast(reach_.plus(f.right(), r), both));
      auto branch = [&](Constructor side, const char* p, const char* t, Term b, Term c) {
        return Term::Branch{
            pcon(side, {pv(p)}),
            Term::case_of(app(std::move(b), v("t")),
                          {{pcon(Constructor::Just, {pv(t)}), app(std::move(c), pair(v(p), v(t)))}})};
      };
      return Term::lam(ppair(pv("p"), pv("t")),
                       Term::case_of(v("p"), {branch(Constructor::Inl, "p1", "t1", b1, c1),
                                              branch(Constructor::Inr, "p2", "t2", b2, c2)}));
    }
    case Cfe::Kind::Cat: {
      Term c1 = derive(CastDirection::Up, env, f.left(), r);
      Term c2 = derive(CastDirection::Up, env, f.right(), reach_.plus(f.left(), r));
      return Term::lam(ppair(pcon(Constructor::Seq, {pv("p1"), pv("p2")}), pv("t")),
                       app(c1, pair(v("p1"), app(c2, pair(v("p2"), v("t"))))));
    }
    default:
      break;
  }
  throw std::logic_error("derive_up: unexpected expression kind");
}

Term Synthesizer::derive_down(CoercionEnv& env, const Cfe& f, const Regex& r) {
  switch (f.kind()) {
    case Cfe::Kind::Phi:
      return Term::lam(pv("t"), nothing());
    case Cfe::Kind::Eps: {
      Term b = prim(re_upcast(r, simp(r)));
      return Term::lam(pv("t"), just(pair(con(Constructor::Eps), app(b, v("t")))));
    }
    case Cfe::Kind::Sym: {
      Regex rest = Regex::cat(Regex::sym(f.symbol()), simp(deriv(r, f.symbol())));
      Term b = prim(re_downcast(rest, r));
      return Term::lam(pv("t"), on_just(app(b, v("t")),
                                        pcon(Constructor::Seq, {pv("x"), pv("t1")}),
                                        just(pair(v("x"), v("t1")))));
    }
    case Cfe::Kind::Alt: {
      Term c1 = derive(CastDirection::Down, env, f.left(), r);
      Term c2 = derive(CastDirection::Down, env, f.right(), r);
      Regex both = reach_.plus(f, r);
      Term b1 = prim(re_upcast(reach_.plus(f.left(), r), both));
      Term b2 = prim(re_upcast(reach_.plus(f.right(), r), both));
      Term right = on_just(app(c2, v("t")), ppair(pv("p2"), pv("t2")),
                           just(pair(con(Constructor::Inr, {v("p2")}), app(b2, v("t2")))));
      return Term::lam(
          pv("t"),
          Term::case_of(app(c1, v("t")),
                        {{pcon(Constructor::Nothing), right},
                         {pcon(Constructor::Just, {ppair(pv("p1"), pv("t1"))}),
                          just(pair(con(Constructor::Inl, {v("p1")}), app(b1, v("t1"))))}}));
    }
    case Cfe::Kind::Cat: {
      Term c1 = derive(CastDirection::Down, env, f.left(), r);
      Term c2 = derive(CastDirection::Down, env, f.right(), reach_.plus(f.left(), r));
      Term inner = on_just(app(c2, v("t1")), ppair(pv("p2"), pv("t2")),
                           just(pair(con(Constructor::Seq, {v("p1"), v("p2")}), v("t2"))));
      return Term::lam(pv("t"), on_just(app(c1, v("t")), ppair(pv("p1"), pv("t1")), inner));
    }
    default:
      break;
  }
  throw std::logic_error("derive_down: unexpected expression kind");
}

// ----------------------------------------------------------------- wrappers

Coercion cfe_upcast(const Cfe& e, const Regex& r, const Alphabet& sigma) {
  check_well_formed(e);
  Synthesizer syn(e, sigma.merged(symbols_of(r)));
  RegexSet reached = syn.reach().reach(e, r);
  for (const Regex& s : reached) {
    if (!re_nullable(s)) throw NotContained(render(e) + " <= " + render(r));
  }
  if (reached.empty()) throw EmptyLanguage();
  Term derived = syn.upcast_derive({}, e, r);
  ParseTree empty = *re_mk_empty(plus_set(reached));
  Term term = Term::lam(Pattern::var("x"), app(derived, pair(v("x"), tree_term(empty))));
  return Coercion{term, syn.prims()};
}

Coercion cfe_downcast(const Cfe& e, const Regex& r, const Alphabet& sigma) {
  check_well_formed(e);
  Synthesizer syn(e, sigma.merged(symbols_of(r)));
  Term term = syn.downcast_derive({}, e, r);
  return Coercion{term, syn.prims()};
}

ParseTree run_upcast(const Coercion& c, const ParseTree& p, std::optional<std::uint64_t> fuel) {
  Value out = apply_coercion(c.term, {p}, *c.prims, fuel);
  auto t = decode_tree(out);
  if (!t) throw WrongResult("expected a parse tree, got " + show(out));
  return *t;
}

std::optional<std::pair<ParseTree, ParseTree>> run_downcast(const Coercion& c, const ParseTree& t,
                                                            std::optional<std::uint64_t> fuel) {
  return decode_maybe_pair(apply_coercion(c.term, {t}, *c.prims, fuel));
}

// ------------------------------------------------------- predictive parser

namespace {

Alphabet guarded_alphabet(const Cfe& e, const Alphabet& sigma) {
  check_well_formed(e);
  if (!is_guarded(e)) throw NotGuarded();
  return sigma.merged(symbols_of(e));
}

}  // namespace

PredictiveParser::PredictiveParser(const Cfe& e, const Alphabet& sigma)
    : e_(e),
      source_(sigma_star(guarded_alphabet(e, sigma))),
      coercion_(cfe_downcast(e, source_, symbols_of(source_))) {}

std::optional<std::pair<ParseTree, ParseTree>> PredictiveParser::downcast(std::string_view w) const {
  auto t = re_parse(source_, w);
  if (!t) return std::nullopt;
  return run_downcast(coercion_, *t);
}

std::optional<ParseTree> PredictiveParser::parse(std::string_view w) const {
  auto result = downcast(w);
  if (!result || !flatten(result->second).empty()) return std::nullopt;
  return result->first;
}

}  // namespace cfx
