#include <gtest/gtest.h>

#include "cfx/coerce.hpp"
#include "cfx/error.hpp"
#include "cfx/syntax.hpp"
#include "support/oracle.hpp"

namespace cfx {
namespace {

using P = ParseTree;
Regex re(const char* s) { return parse_regex(s); }
Cfe cf(const std::string& s) { return parse_cfe(s); }

TEST(SigmaStar, Examples) {
  EXPECT_EQ(sigma_star(Alphabet{'x', 'y'}), re("(x+y)*"));
  EXPECT_EQ(sigma_star(Alphabet{'x'}), re("x*"));
  EXPECT_THROW(sigma_star(Alphabet{}), EmptyAlphabet);
}

TEST(RegularUpcast, ReparsesTheYield) {
  RegCoercion b = re_upcast(re("x*"), re("(x+y)*"));
  EXPECT_EQ(b.id, "up(x*,(x+y)*)");
  PrimRegistry prims;
  b.register_in(prims);
  P in = *re_parse(re("x*"), "xx");
  Value out = apply_coercion(b.term(), {in}, prims);
  auto t = decode_tree(out);
  ASSERT_TRUE(t);
  EXPECT_TRUE(check_re_type(*t, re("(x+y)*")));
  EXPECT_EQ(flatten(*t), "xx");
}

TEST(RegularUpcast, RequiresContainment) {
  EXPECT_THROW(re_upcast(re("(x+y)*"), re("x*")), NotContained);
}

TEST(RegularDowncast, JustOrNothing) {
  RegCoercion b = re_downcast(re("x*"), re("(x+y)*"));
  PrimRegistry prims;
  b.register_in(prims);
  auto yes = decode_maybe_tree(apply_coercion(b.term(), {*re_parse(re("(x+y)*"), "xx")}, prims));
  ASSERT_TRUE(yes);
  EXPECT_TRUE(check_re_type(*yes, re("x*")));
  EXPECT_FALSE(decode_maybe_tree(apply_coercion(b.term(), {*re_parse(re("(x+y)*"), "xy")}, prims)));
}

TEST(Upcast, AnBnIntoStars) {
  Cfe e = cf("mu a. x.(a.y)+1");
  Regex r = re("x*.y*");
  Coercion c = cfe_upcast(e, r);
  for (const P& p : enumerate_trees(e, 24)) {
    P t = run_upcast(c, p);
    EXPECT_TRUE(check_re_type(t, r)) << show(p);
    EXPECT_EQ(flatten(t), flatten(p));
  }
}

TEST(Upcast, Errors) {
  EXPECT_THROW(cfe_upcast(cf("mu a. x.(a.y)+1"), re("x*")), NotContained);
  EXPECT_THROW(cfe_upcast(cf("mu a. a"), re("x*")), EmptyLanguage);
}

TEST(Downcast, AnBnFromStars) {
  Cfe e = cf("mu a. x.(a.y)+1");
  Regex r = re("x*.y*");
  auto out = run_downcast(cfe_downcast(e, r), *re_parse(r, "xy"));
  ASSERT_TRUE(out);
  EXPECT_EQ(show(out->first), "Fold (Inl (Seq (Sym x) (Seq (Fold (Inr Eps)) (Sym y))))");
  EXPECT_TRUE(check_cfe_type(out->first, e));
  EXPECT_EQ(flatten(out->second), "");
}

TEST(Downcast, EpsilonFirstConsumesNothing) {
  Cfe e = cf("mu a. 1+x.(a.y)");
  Regex r = re("x*.y*");
  auto out = run_downcast(cfe_downcast(e, r), *re_parse(r, "xy"));
  ASSERT_TRUE(out);
  EXPECT_EQ(show(out->first), "Fold (Inl Eps)");
  EXPECT_EQ(flatten(out->second), "xy");
}

TEST(Downcast, LeftRecursionDiverges) {
  Cfe e = cf("mu a. a.x+1");
  Regex r = re("(x+y)*");
  EXPECT_THROW(run_downcast(cfe_downcast(e, r), *re_parse(r, "x"), 1000), Diverged);
}

TEST(Downcast, InvertsUpcastOnGuardedPairs) {
  for (const auto& pair : testing::corpus()) {
    Cfe e = cf(pair.e);
    Regex r = re(pair.r.c_str());
    if (!is_guarded(e) || !contains(e, r)) continue;
    Coercion up = cfe_upcast(e, r);
    Coercion down = cfe_downcast(e, r);
    for (const P& p : enumerate_trees(e, 16)) {
      auto back = run_downcast(down, run_upcast(up, p), 100000);
      ASSERT_TRUE(back) << pair.label << " " << show(p);
      EXPECT_EQ(flatten(back->first) + flatten(back->second), flatten(p)) << pair.label;
      EXPECT_TRUE(check_cfe_type(back->first, e)) << pair.label;
    }
  }
}

TEST(Synthesis, TermsAreClosedWithRegisteredPrims) {
  for (const auto& pair : testing::corpus()) {
    Cfe e = cf(pair.e);
    Regex r = re(pair.r.c_str());
    Coercion down = cfe_downcast(e, r);
    EXPECT_TRUE(free_vars(down.term).empty()) << pair.label;
    for (const std::string& id : prims_of(down.term)) EXPECT_TRUE(down.prims->contains(id)) << id;
    if (!contains(e, r) || reach(e, r).empty()) continue;
    Coercion up = cfe_upcast(e, r);
    EXPECT_TRUE(free_vars(up.term).empty()) << pair.label;
    for (const std::string& id : prims_of(up.term)) EXPECT_TRUE(up.prims->contains(id)) << id;
  }
}

TEST(Synthesis, EachRecursiveKeyIsDerivedOnce) {
  for (const auto& pair : testing::corpus()) {
    Cfe e = cf(pair.e);
    Regex r = simp(re(pair.r.c_str()));
    Synthesizer s(e);
    s.downcast_derive({}, e, r);
    s.upcast_derive({}, e, r);
    for (auto d : {CastDirection::Up, CastDirection::Down}) {
      for (const auto& [key, n] : s.rec_count(d)) EXPECT_EQ(n, 1u) << pair.label;
    }
  }
}

TEST(Synthesis, MuAtTopIsRec) {
  Cfe e = cf("mu a. x.(a.y)+1");
  Regex r = re("x*.y*");
  Synthesizer s(e);
  Term up = s.upcast_derive({}, e, r);
  ASSERT_EQ(up.kind(), Term::Kind::Rec);
  EXPECT_EQ(up.name(), Synthesizer::variable_name(e, r));
  EXPECT_EQ(up.name(), "v_a[x*.y*]");
}

TEST(Synthesis, HypothesisBecomesVariable) {
  Cfe e = cf("mu a. x.(a.y)+1");
  Regex r = re("x*.y*");
  Synthesizer s(e);
  CoercionEnv env{{{e, r}, "h"}};
  Term t = s.upcast_derive(env, e, r);
  EXPECT_EQ(t, Term::var("h"));
}

TEST(Parser, AnBn) {
  PredictiveParser parser(cf("mu a. x.(a.y)+1"));
  EXPECT_EQ(parser.source(), re("(x+y)*"));
  EXPECT_TRUE(parser.parse(""));
  EXPECT_TRUE(parser.parse("xxyy"));
  EXPECT_FALSE(parser.parse("xx"));
  EXPECT_FALSE(parser.parse("xyy"));
  // The raw downcast succeeds on xyy and leaves y behind.
  auto raw = parser.downcast("xyy");
  ASSERT_TRUE(raw);
  EXPECT_EQ(flatten(raw->second), "y");
}

TEST(Parser, AgreesWithEnumerationOnGuardedCorpus) {
  for (const std::string& text : testing::guarded_corpus()) {
    Cfe e = cf(text);
    PredictiveParser parser(e);
    std::set<Word> lang = enumerate_words(e, 6);
    for (const Word& w : testing::all_words(Alphabet{'x', 'y'}, 6)) {
      auto p = parser.parse(w);
      ASSERT_EQ(p.has_value(), lang.count(w) == 1) << text << " on " << w;
      if (p) {
        EXPECT_TRUE(check_cfe_type(*p, e));
        EXPECT_EQ(flatten(*p), w);
      }
    }
  }
}

TEST(Parser, RequiresGuardedInput) {
  EXPECT_THROW(PredictiveParser(cf("mu a. a.x+1")), NotGuarded);
}

}  // namespace
}  // namespace cfx
