#include <gtest/gtest.h>

#include "cfx/coercion.hpp"
#include "cfx/error.hpp"

namespace cfx {
namespace {

using K = Constructor;
using T = Term;
using Pat = Pattern;

Value sym(Symbol x) { return Value::con(K::Sym, {Value::atom(x)}); }

TEST(Match, Examples) {
  auto m = match(Value::con(K::Inl, {sym('x')}), Pat::con(K::Inl, {Pat::var("y")}));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->size(), 1u);
  EXPECT_EQ(m->at("y"), sym('x'));

  EXPECT_FALSE(match(Value::con(K::Inr, {Value::con(K::Eps)}), Pat::con(K::Inl, {Pat::var("y")})));

  auto pair = match(Value::con(K::Pair, {Value::con(K::Eps), sym('x')}),
                    Pat::con(K::Pair, {Pat::var("a"), Pat::var("b")}));
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->at("a"), Value::con(K::Eps));
  EXPECT_EQ(pair->at("b"), sym('x'));
}

TEST(Match, WrongMatchesOnlyVariables) {
  EXPECT_TRUE(match(Value::wrong(), Pat::var("z")));
  EXPECT_FALSE(match(Value::wrong(), Pat::con(K::Eps)));
}

TEST(Match, PartialInverseOfConstruction) {
  Pat p = Pat::con(K::Seq, {Pat::var("a"), Pat::con(K::Fold, {Pat::var("b")})});
  Value a = sym('x');
  Value b = Value::con(K::Inr, {Value::con(K::Eps)});
  auto m = match(Value::con(K::Seq, {a, Value::con(K::Fold, {b})}), p);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->at("a"), a);
  EXPECT_EQ(m->at("b"), b);
}

TEST(Pattern, LinearityIsEnforced) {
  EXPECT_THROW(T::lam(Pat::con(K::Pair, {Pat::var("a"), Pat::var("a")}), T::var("a")),
               std::invalid_argument);
  EXPECT_THROW(Pat::con(K::Pair, {Pat::var("a")}), std::invalid_argument);
}

TEST(Eval, IdentityOnTree) {
  PrimRegistry none;
  ParseTree t = ParseTree::seq(ParseTree::sym('x'), ParseTree::eps());
  T id = T::lam(Pat::var("z"), T::var("z"));
  EXPECT_EQ(apply_coercion(id, {t}, none), encode(t));
}

TEST(Eval, CaseWithoutMatchIsWrong) {
  PrimRegistry none;
  T c = T::case_of(T::con(K::Inr, {T::con(K::Eps)}),
                   {{Pat::con(K::Inl, {Pat::var("y")}), T::var("y")}});
  EXPECT_TRUE(eval(c, none).is_wrong());
}

TEST(Eval, FirstMatchingBranchWins) {
  PrimRegistry none;
  T c = T::case_of(T::con(K::Eps), {{Pat::var("a"), T::con(K::Nothing)},
                                    {Pat::con(K::Eps), T::con(K::Just, {T::con(K::Eps)})}});
  EXPECT_EQ(eval(c, none), Value::con(K::Nothing));
}

TEST(Eval, ApplyingANonFunctionIsWrong) {
  PrimRegistry none;
  EXPECT_TRUE(eval(T::app(T::con(K::Eps), T::con(K::Eps)), none).is_wrong());
  EXPECT_TRUE(eval(T::app(T::lam(Pat::con(K::Eps), T::con(K::Eps)), T::con(K::Nothing)), none)
                  .is_wrong());
}

TEST(Eval, RecursionTerminates) {
  // rec f. λ(Fold z). case z of Inl (Seq a b) → Inl (f b) | Inr e → Inr e
  PrimRegistry none;
  T f = T::rec("f", T::lam(Pat::con(K::Fold, {Pat::var("z")}),
                           T::case_of(T::var("z"),
                                      {{Pat::con(K::Inl, {Pat::con(K::Seq, {Pat::var("a"), Pat::var("b")})}),
                                        T::con(K::Inl, {T::app(T::var("f"), T::var("b"))})},
                                       {Pat::con(K::Inr, {Pat::var("e")}), T::con(K::Inr, {T::var("e")})}})));
  ParseTree nil = ParseTree::fold(ParseTree::inr(ParseTree::eps()));
  ParseTree two = ParseTree::fold(ParseTree::inl(ParseTree::seq(
      ParseTree::sym('x'), ParseTree::fold(ParseTree::inl(ParseTree::seq(ParseTree::sym('x'), nil))))));
  Value v = apply_coercion(f, {two}, none);
  EXPECT_EQ(show(v), "Inl (Inl (Inr Eps))");
}

TEST(Eval, DivergenceHitsFuel) {
  PrimRegistry none;
  T loop = T::rec("f", T::lam(Pat::var("z"), T::app(T::var("f"), T::var("z"))));
  try {
    apply_coercion(loop, {ParseTree::eps()}, none, 1000);
    FAIL() << "expected divergence";
  } catch (const Diverged& e) {
    EXPECT_GT(e.steps(), 1000u);
  }
}

TEST(Eval, PrimIsLookedUp) {
  PrimRegistry prims;
  prims.add("swap", [](const Value& v) {
    return v.kind() == Value::Kind::Con && v.constructor() == K::Inl ? Value::con(K::Inr, v.args())
                                                                      : Value::wrong();
  });
  Value out = eval(T::app(T::prim("swap"), T::con(K::Inl, {T::con(K::Eps)})), prims);
  EXPECT_EQ(out, Value::con(K::Inr, {Value::con(K::Eps)}));
  EXPECT_THROW(apply_coercion(T::prim("swap"), {ParseTree::eps()}, prims), WrongResult);
}

TEST(Eval, PairsOfArguments) {
  PrimRegistry none;
  T snd = T::lam(Pat::con(K::Pair, {Pat::var("a"), Pat::var("b")}), T::var("b"));
  Value v = apply_coercion(snd, {ParseTree::eps(), ParseTree::sym('y')}, none);
  EXPECT_EQ(decode_tree(v), ParseTree::sym('y'));
}

TEST(Encode, RoundTrip) {
  ParseTree t = ParseTree::fold(ParseTree::inl(ParseTree::seq(ParseTree::sym('x'), ParseTree::eps())));
  EXPECT_EQ(decode_tree(encode(t)), t);
  // Symbol atoms have no term syntax, so only symbol-free trees are terms.
  ParseTree empty = ParseTree::seq(ParseTree::fold(ParseTree::inr(ParseTree::eps())), ParseTree::eps());
  PrimRegistry none;
  EXPECT_EQ(eval(tree_term(empty), none), encode(empty));
  EXPECT_THROW(tree_term(t), std::exception);
}

TEST(Decode, MaybeShapes) {
  Value just = Value::con(K::Just, {Value::con(K::Pair, {sym('x'), Value::con(K::Eps)})});
  auto pr = decode_maybe_pair(just);
  ASSERT_TRUE(pr);
  EXPECT_EQ(pr->first, ParseTree::sym('x'));
  EXPECT_FALSE(decode_maybe_pair(Value::con(K::Nothing)));
  EXPECT_THROW(decode_maybe_pair(Value::wrong()), WrongResult);
  EXPECT_THROW(decode_maybe_tree(sym('x')), WrongResult);
}

TEST(FreeVars, LambdaRecAndCaseBind) {
  T c = T::lam(Pat::var("a"), T::app(T::var("f"), T::rec("g", T::app(T::var("g"), T::var("a")))));
  EXPECT_EQ(free_vars(c), std::set<std::string>{"f"});
  EXPECT_EQ(prims_of(T::app(T::prim("p"), T::prim("q"))), (std::set<std::string>{"p", "q"}));
}

}  // namespace
}  // namespace cfx
