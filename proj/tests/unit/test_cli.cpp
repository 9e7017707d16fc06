#include <cstdio>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = amzeta::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string s; std::getline(in, s);) v.push_back(s);
  return v;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("amzeta_cli_test_" + name)).string();
}

}  // namespace

TEST(Cli, AnBothAgree) {
  const auto r = run({"an", "--map", "power:3,2", "--n", "1..4", "--method", "both", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], R"({"schema_version":1,"n":1,"a_n":"2","method":"both-agree"})");
  EXPECT_EQ(ls[3], R"({"schema_version":1,"n":4,"a_n":"6","method":"both-agree"})");
}

TEST(Cli, AnText) {
  const auto r = run({"an", "--map", "power:3,2", "--n", "3..4", "--exact-period"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "a_3 = 8  b_3 = 6  (both-agree)\na_4 = 6  b_4 = 4  (both-agree)\n");
}

TEST(Cli, AnResourceLimit) {
  const auto r = run({"an", "--map", "power:3,2", "--n", "40", "--method", "oracle"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("1099511627776"), std::string::npos);
  EXPECT_EQ(run({"an", "--map", "power:3,2", "--n", "40", "--method", "closed"}).code, 0);
}

TEST(Cli, InvalidArguments) {
  EXPECT_EQ(run({"an", "--map", "power:4,2"}).code, 2);
  EXPECT_EQ(run({"an", "--map", "bogus:3"}).code, 2);
  EXPECT_EQ(run({"an", "--map", "power:3,2", "--n", "5..2"}).code, 2);
  EXPECT_EQ(run({"an", "--map", "power:3,2", "--method", "guess"}).code, 2);
  EXPECT_EQ(run({"an"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"an", "--map", "additive:3,1,[0]"}).code, 2);
  EXPECT_EQ(run({"census", "--map", "general:3,1,\"x^2\"", "--field", "5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, MapSpecForms) {
  auto r = run({"an", "--map", "additive:3,1,[1]", "--n", "2", "--json"});
  EXPECT_EQ(r.out, "{\"schema_version\":1,\"n\":2,\"a_n\":\"3\",\"method\":\"both-agree\"}\n");
  r = run({"an", "--map", "additive:3,2,[0,1]", "--n", "8", "--method", "closed"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = run({"an", "--map", "pthpow:2,\"x^4+x^2\"", "--n", "3"});
  EXPECT_EQ(r.out, "a_3 = 64  (both-agree)\n");
  r = run({"an", "--map", "general:3,1,\"x^3 + x\"", "--n", "2"});
  EXPECT_EQ(r.out, "a_2 = 3  (oracle)\n");
  r = run({"an", "--map", "general:3,2,\"x^2 + [0,1]\"", "--n", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, ZetaDetectRational) {
  const auto r = run({"zeta", "--map", "pthpow:2,\"x^2\"", "--order", "8", "--detect-rational"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("c_8 = 256\n"), std::string::npos);
  EXPECT_NE(r.out.find("zeta = 1 / (1 - 2*t)\n"), std::string::npos);

  const auto j = run({"zeta", "--map", "power:3,2", "--order", "16", "--max-order", "4",
                      "--detect-rational", "--json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_NE(j.out.find("\"coeffs\":[\"1\",\"2\",\"3\",\"6\",\"10\",\"20\",\"33\",\"66\",\"122\""),
            std::string::npos);
  EXPECT_NE(j.out.find("\"recurrence\":null"), std::string::npos);
}

TEST(Cli, DfaoPipeline) {
  const std::string v2 = temp_path("v2.json"), c3 = temp_path("c3.json"),
                    prod = temp_path("prod.json"), sub = temp_path("sub.json");
  ASSERT_EQ(run({"dfao", "build", "vp-mod", "--p", "2", "--d", "2", "--out", v2}).code, 0);
  ASSERT_EQ(run({"dfao", "build", "congruence", "--p", "2", "--mod", "3", "--accept", "0", "--out", c3})
                .code,
            0);
  ASSERT_EQ(run({"dfao", "product", "--file", v2, "--file", c3, "--out", prod}).code, 0);
  auto r = run({"dfao", "run", "--file", prod, "--n", "6"});
  EXPECT_EQ(r.out, "6: [1,1]\n");
  ASSERT_EQ(run({"dfao", "subsequence", "--file", v2, "--a", "4", "--b", "2", "--out", sub}).code, 0);
  r = run({"dfao", "run", "--file", sub, "--n", "0..2", "--json"});
  EXPECT_EQ(r.out,
            "{\"schema_version\":1,\"n\":0,\"output\":[1]}\n"
            "{\"schema_version\":1,\"n\":1,\"output\":[1]}\n"
            "{\"schema_version\":1,\"n\":2,\"output\":[1]}\n");
  r = run({"dfao", "run", "--file", v2, "--n", "0"});
  EXPECT_EQ(r.code, 2);
  r = run({"periodicity", "--file", v2, "--n", "1..1024", "--max-preperiod", "256",
           "--max-period", "64", "--json"});
  EXPECT_EQ(r.out,
            "{\"schema_version\":1,\"terms\":1024,\"max_preperiod\":256,\"max_period\":64,"
            "\"preperiod\":null,\"period\":null}\n");
  EXPECT_EQ(run({"dfao", "run", "--file", temp_path("missing.json")}).code, 2);
  for (const auto& f : {v2, c3, prod, sub}) std::remove(f.c_str());
}

TEST(Cli, DfaoBuildToStdout) {
  const auto r = run({"dfao", "build", "vp-mod", "--p", "3", "--d", "1"});
  EXPECT_EQ(r.out,
            "{\"schema_version\":1,\"alphabet\":3,\"states\":2,\"initial\":0,"
            "\"transitions\":[[0,1,1],[1,1,1]],\"outputs\":[[0],[0]],\"defined_at_zero\":false}\n");
}

TEST(Cli, Periodicity) {
  auto r = run({"periodicity", "--values", "3,0,1,0,1,0,1,0,1", "--max-preperiod", "1",
                "--max-period", "2"});
  EXPECT_EQ(r.out, "eventually periodic: preperiod 1, period 2\n");
  r = run({"periodicity", "--values", "0,1", "--max-period", "2", "--max-preperiod", "1"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Witness) {
  auto r = run({"witness", "case2", "--p", "3", "--m", "2", "--range", "16", "--membership-range",
                "200", "--max-period", "1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"q\":\"5\""), std::string::npos);
  EXPECT_NE(r.out.find("{\"k\":\"1\",\"n\":\"9\",\"a\":\"5\",\"v_left\":0,\"v_right\":1}"),
            std::string::npos);
  r = run({"witness", "thm2", "--p", "3", "--m", "1", "--range", "6", "--max-period", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("  q = 29\n"), std::string::npos);
  EXPECT_NE(r.out.find("k=1 n=1 a=2 n+ak=3 v=(0,1)"), std::string::npos);
  r = run({"witness", "case1", "--m", "9", "--q", "3", "--range", "8", "--max-period", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"witness", "case1", "--m", "9", "--q", "5"}).code, 2);
}

TEST(Cli, Census) {
  auto r = run({"census", "--map", "general:5,1,\"x^2+1\"", "--json"});
  EXPECT_EQ(r.out,
            "{\"schema_version\":1,\"field\":\"5^1\",\"points\":5,\"cycle_lengths\":{\"3\":1},"
            "\"periodic_points\":3,\"tails\":2,\"components\":1}\n");
  r = run({"census", "--map", "general:3,1,\"x^2+1\"", "--field", "3^2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("field: F_3^2 (9 points)"), std::string::npos);
  EXPECT_EQ(run({"census", "--map", "general:10007,1,\"x^2+1\"", "--field", "10007^2"}).code, 3);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cmds{
      {"an", "--map", "general:3,1,\"x^2+1\"", "--n", "1..6", "--json"},
      {"zeta", "--map", "power:5,2", "--order", "12", "--detect-rational", "--json"},
      {"witness", "thm2", "--p", "3", "--m", "1", "--range", "8", "--max-period", "4", "--json"},
      {"census", "--map", "general:7,1,\"x^3+2\"", "--field", "7^2", "--json"}};
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}
