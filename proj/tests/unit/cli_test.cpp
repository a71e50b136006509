#include <gtest/gtest.h>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cfx/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cfx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTree = std::string(CFX_FIXTURES_DIR) + "/xy_over_xstar_ystar.json";

struct Golden {
  std::vector<std::string> args;
  int code;
  std::string out;
};

class CliGolden : public ::testing::TestWithParam<Golden> {};

TEST_P(CliGolden, OutputAndExitCode) {
  const Golden& g = GetParam();
  Result r = run(g.args);
  EXPECT_EQ(r.code, g.code) << r.err;
  EXPECT_EQ(r.out, g.out);
}

TEST_P(CliGolden, Deterministic) {
  Result a = run(GetParam().args);
  Result b = run(GetParam().args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
  EXPECT_EQ(a.code, b.code);
}

INSTANTIATE_TEST_SUITE_P(
    Commands, CliGolden,
    ::testing::Values(
        Golden{{"derive", "-r", "(x+y)*", "-x", "x"}, 0, "(x+y)*\n"},
        Golden{{"derive", "-r", "(x+y)*", "-x", "x", "--raw"}, 0, "(1+0).(x+y)*\n"},
        Golden{{"canon", "-r", "x.y+0+x.y"}, 0, "x.y\n"},
        Golden{{"reach", "-e", "mu a. x.(a.y)+1", "-r", "x*.y*"}, 0, "y*\nx*.y*\n"},
        Golden{{"contains", "-e", "mu a. x.(a.y)+1", "-r", "x*.y*"}, 0, "true\n"},
        Golden{{"contains", "-e", "mu a. x.(a.y)+1", "-r", "x*"}, 1, "false\n"},
        Golden{{"enumerate", "-e", "mu a. x.(a.y)+1", "--max-len", "4"}, 0, "ε\nxy\nxxyy\n"},
        Golden{{"parse", "-e", "mu a. x.(a.y)+1", "--word", "xx"}, 1, "Nothing\n"},
        Golden{{"parse", "-e", "mu a. x.(a.y)+1", "--word", "xy"},
               0,
               R"({"child":{"child":{"left":{"sym":"x","tag":"Sym"},"right":{"left":{"child":{"child":{"tag":"Eps"},"tag":"Inr"},"tag":"Fold"},"right":{"sym":"y","tag":"Sym"},"tag":"Seq"},"tag":"Seq"},"tag":"Inl"},"tag":"Fold"})"
               "\n"},
        Golden{{"downcast", "-e", "mu a. x.(a.y)+1", "-r", "x*.y*", "--tree", kTree},
               0,
               R"({"parse":{"child":{"child":{"left":{"sym":"x","tag":"Sym"},"right":{"left":{"child":{"child":{"tag":"Eps"},"tag":"Inr"},"tag":"Fold"},"right":{"sym":"y","tag":"Sym"},"tag":"Seq"},"tag":"Seq"},"tag":"Inl"},"tag":"Fold"},"residue":{"child":{"child":{"child":{"tag":"Eps"},"tag":"Inr"},"tag":"Fold"},"tag":"Inl"}})"
               "\n"},
        Golden{{"downcast", "-e", "mu a. a.x+1", "-r", "x*.y*", "--tree", kTree, "--fuel", "1000"},
               1,
               "Diverged after 1001 steps\n"}),
    [](const ::testing::TestParamInfo<Golden>& info) {
      std::string name = info.param.args.front() + "_" + std::to_string(info.index);
      for (char& c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
      }
      return name;
    });

TEST(CliErrors, UsageErrorsExitTwoAndNameTheFlag) {
  Result r = run({"derive", "-r", "x+", "-x", "x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("-r"), std::string::npos);

  r = run({"downcast", "-e", "mu a. a.x+1", "-r", "x*.y*", "--tree", kTree});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--fuel"), std::string::npos);

  r = run({"derive", "-r", "x"});
  EXPECT_EQ(r.code, 2);
  r = run({"parse", "-e", "mu a. a.x+1", "--word", "x"});
  EXPECT_EQ(r.code, 2);
  r = run({"upcast", "-e", "mu a. x", "-r", "x", "--tree", "/nonexistent/tree.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--tree"), std::string::npos);
}

TEST(CliErrors, NotContainedExitsOne) {
  Result r = run({"emit-coercion", "up", "-e", "mu a. x.(a.y)+1", "-r", "x*", "-o", "-"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliRoundTrip, UpcastAfterDowncastRecoversTheTree) {
  std::string path = ::testing::TempDir() + "cfx_parse.json";
  Result parsed = run({"parse", "-e", "mu a. x.(a.y)+1", "--word", "xxyy"});
  ASSERT_EQ(parsed.code, 0);
  std::ofstream(path) << parsed.out;
  Result up = run({"upcast", "-e", "mu a. x.(a.y)+1", "-r", "x*.y*", "--tree", path});
  ASSERT_EQ(up.code, 0) << up.err;
  std::string tpath = ::testing::TempDir() + "cfx_up.json";
  std::ofstream(tpath) << up.out;
  Result down = run({"downcast", "-e", "mu a. x.(a.y)+1", "-r", "x*.y*", "--tree", tpath});
  ASSERT_EQ(down.code, 0) << down.err;
  std::string expected = parsed.out.substr(0, parsed.out.size() - 1);
  EXPECT_EQ(down.out.find("{\"parse\":" + expected + ","), 0u) << down.out;
  std::remove(path.c_str());
  std::remove(tpath.c_str());
}

TEST(CliEmit, WritesIdenticalJsonTwice) {
  Result a = run({"emit-coercion", "down", "-e", "mu a. x.(a.(y.a))+1", "-r", "(x+y)*", "-o", "-"});
  Result b = run({"emit-coercion", "down", "-e", "mu a. x.(a.(y.a))+1", "-r", "(x+y)*", "-o", "-"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.front(), '{');
}

}  // namespace
