#include <gtest/gtest.h>

#include "cfx/cfe.hpp"
#include "cfx/error.hpp"
#include "cfx/syntax.hpp"
#include "cfx/tree.hpp"
#include "support/oracle.hpp"

namespace cfx {
namespace {

using P = ParseTree;

TEST(Flatten, Examples) {
  EXPECT_EQ(flatten(P::seq(P::sym('x'), P::fold(P::inr(P::eps())))), "x");
  EXPECT_EQ(flatten(P::eps()), "");
}

TEST(CfeType, Examples) {
  Cfe e = parse_cfe("mu a. x.a+1");
  EXPECT_TRUE(check_cfe_type(P::fold(P::inr(P::eps())), e));
  EXPECT_FALSE(check_cfe_type(P::inl(P::eps()), e));
  EXPECT_TRUE(check_cfe_type(P::fold(P::inl(P::seq(P::sym('x'), P::fold(P::inr(P::eps()))))), e));
  EXPECT_FALSE(check_cfe_type(P::sym('y'), Cfe::sym('x')));
  EXPECT_FALSE(check_cfe_type(P::eps(), Cfe::phi()));
}

TEST(ReType, StarShapes) {
  Regex r = parse_regex("x*");
  EXPECT_TRUE(check_re_type(P::fold(P::inr(P::eps())), r));
  EXPECT_TRUE(check_re_type(P::fold(P::inl(P::seq(P::sym('x'), P::fold(P::inr(P::eps()))))), r));
  EXPECT_FALSE(check_re_type(P::fold(P::inl(P::sym('x'))), r));
  EXPECT_FALSE(check_re_type(P::fold(P::inr(P::eps())), parse_regex("x")));
}

TEST(MkEmpty, Examples) {
  Cfe e = parse_cfe("mu a. x.(a.y)+1");
  EXPECT_EQ(mk_empty(e), P::fold(P::inr(P::eps())));
  EXPECT_THROW(mk_empty(Cfe::sym('x')), NotNullable);
  EXPECT_THROW(mk_empty(parse_cfe("mu a. a")), NotNullable);
}

TEST(MkEmpty, ValidAndEmptyOnCorpus) {
  for (const std::string& text : testing::corpus_expressions()) {
    Cfe e = parse_cfe(text);
    if (!cfe_nullable(e)) continue;
    P p = mk_empty(e);
    EXPECT_TRUE(check_cfe_type(p, e)) << text;
    EXPECT_EQ(flatten(p), "") << text;
  }
}

TEST(EnumerateTrees, ValidUniqueAndYieldsInLanguage) {
  for (const std::string& text : testing::corpus_expressions()) {
    Cfe e = parse_cfe(text);
    auto trees = enumerate_trees(e, 12);
    std::set<Word> lang = enumerate_words(e, 12);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      EXPECT_TRUE(check_cfe_type(trees[i], e)) << text << ": " << show(trees[i]);
      EXPECT_LE(trees[i].size(), 12u);
      EXPECT_EQ(lang.count(flatten(trees[i])), 1u) << text;
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(trees[i] == trees[j]);
    }
  }
}

TEST(EnumerateTrees, CoversShortWordsOfAnBn) {
  Cfe e = parse_cfe("mu a. x.(a.y)+1");
  std::set<Word> yields;
  for (const P& p : enumerate_trees(e, 20)) yields.insert(flatten(p));
  EXPECT_EQ(yields, (std::set<Word>{"", "xy", "xxyy"}));
}

TEST(Embedding, RegexTreesAreCfeTrees) {
  for (const char* s : {"x*.y*", "(x+y)*", "(x.y)*+1", "x.(y+1)"}) {
    Regex r = parse_regex(s);
    Cfe e = from_regex(r);
    for (const Word& w : testing::all_words(Alphabet{'x', 'y'}, 4)) {
      auto t = re_parse(r, w);
      if (t) EXPECT_TRUE(check_cfe_type(*t, e)) << s << " " << w;
    }
  }
}

TEST(Show, Compact) {
  EXPECT_EQ(show(P::fold(P::inl(P::seq(P::sym('x'), P::eps())))), "Fold (Inl (Seq (Sym x) Eps))");
}

}  // namespace
}  // namespace cfx
