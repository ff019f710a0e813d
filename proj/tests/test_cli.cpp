#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bottcoh/cli.hpp"

namespace bottcoh {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = BOTTCOH_TEST_DATA;

TEST(Cli, CohomInline) {
  auto r = run_cli({"cohom", "--bundle", "W(1,0)xW(1,0)", "--twist", "0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0,0,1,0,0\n");
}

TEST(Cli, CohomJsonAndNegativeTwist) {
  auto r = run_cli({"cohom", "-b", "O(0,-3)", "-t", "0,-1", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"twist\":[0,-1],\"h\":[0,0,3,0,0]}\n");
}

TEST(Cli, CheckThm21FromFile) {
  auto r = run_cli({"check", "thm21", "--bundle", kData + "/omega11.json", "-p", "1", "-q", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("criterion met: yes"), std::string::npos);
}

TEST(Cli, CheckThm21Witness) {
  auto r = run_cli({"check", "thm21", "--bundle", "O(0,-3)", "-p", "1", "-q", "1", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"witnesses\""), std::string::npos);
  EXPECT_NE(r.out.find("\"criterion_met\": false"), std::string::npos);
  auto text = run_cli({"check", "thm21", "--bundle", "O(0,-3)", "-p", "1", "-q", "1"});
  EXPECT_NE(text.out.find("witness h^2(E(0,-1)) = 3"), std::string::npos);
}

TEST(Cli, CheckOthers) {
  EXPECT_EQ(run_cli({"check", "prop13", "-b", "P2:W(1,0)", "-p", "1"}).code, 0);
  EXPECT_EQ(run_cli({"check", "sv", "-b", "P3:W(1,0)+W(1,1)"}).code, 1);
  EXPECT_EQ(run_cli({"check", "sv", "-b", "P3:W(1,0)+W(2,0)"}).code, 0);
  EXPECT_EQ(run_cli({"check", "acm", "-b", "P3:O(2)+O(-1)"}).code, 0);
  EXPECT_EQ(run_cli({"check", "acm", "-b", "P3:W(1,0)"}).code, 1);
}

TEST(Cli, TableFormats) {
  auto csv = run_cli({"table", "-b", "P2:O(0)", "--range", "-3:0", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "a,h0,h1,h2\n-3,0,0,1\n-2,0,0,0\n-1,0,0,0\n0,1,0,0\n");
  auto json = run_cli({"table", "-b", "W(1,0)xW(1,0)", "--range", "0:0", "--format", "json"});
  EXPECT_EQ(json.out, "{\"twist\":[0,0],\"h\":[0,0,1,0,0]}\n");
  auto text = run_cli({"table", "-b", "P2:O(0)", "--range", "-1:1"});
  EXPECT_EQ(text.out, " a | h0 h1 h2\n-1 |  0  0  0\n 0 |  1  0  0\n 1 |  3  0  0\n");
}

TEST(Cli, OracleAndVerify) {
  auto r = run_cli({"oracle", "-n", "2", "-p", "1", "-l", "-3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "oracle: 0,0,8\nbott:   0,0,8\nagree\n");
  EXPECT_EQ(run_cli({"verify", "exactness", "--kind", "e3", "-n", "3", "-r", "1"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "exactness", "--kind", "glued-psi", "-b", "W(1,0)xW(1,0)", "-p",
                     "1", "-q", "1"})
                .code,
            0);
  EXPECT_EQ(run_cli({"verify", "exactness", "--kind", "glued-phi", "-b", "W(1,0)xW(1,0)",
                     "--skip-composite"})
                .code,
            1);
  EXPECT_EQ(run_cli({"verify", "chains", "-b", "W(1,0)xW(1,0)", "-p", "1", "-q", "1"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "chains", "-b", "O(0,-3)", "-p", "1", "-q", "1"}).code, 1);
}

TEST(Cli, Scans) {
  auto r = run_cli({"scan", "ex23", "--bound", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"W(1,0)xW(1,0)\""), std::string::npos);
  auto s = run_cli({"scan", "soundness", "--bound", "2", "--samples", "50", "--seed", "3"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, run_cli({"scan", "soundness", "--bound", "2", "--samples", "50", "--seed", "3"}).out);
  EXPECT_EQ(run_cli({"scan", "soundness", "--space", "3", "-p", "1", "--bound", "2"}).code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"cohom", "--bundle", "W(1,0", "--twist", "0,0"},
           {"cohom", "--bundle", "W(1,0)xW(1,0)", "--twist", "0"},
           {"cohom", "--bundle", "W(1,0)xW(1,0)", "--twist", "a,b"},
           {"check", "thm21", "--bundle", "W(1,0)xW(1,0)", "-p", "2", "-q", "1"},
           {"check", "thm21", "--bundle", kData + "/bad_field.json", "-p", "1", "-q", "1"},
           {"check", "prop13", "--bundle", "P2:W(1,0)"},
           {"table", "-b", "P2:O(0)", "--range", "2:1"},
           {"oracle", "-n", "2", "-p", "3", "-l", "0"},
           {"cohom", "--bundle", "P2:O(0)", "--twist", "0", "--format", "xml"},
       }) {
    auto r = run_cli(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "<none>" : args[0]);
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  std::vector<std::string> args{"check", "thm21", "-b", "P3xP2:W(2,0)xW(1,0)+O(1,-2)",
                                "-p", "2", "-q", "1", "--format", "json"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

// Every `$ bottcoh ...` line inside a ```console block of README.md is run and
// its stdout compared with the lines that follow it.
std::vector<std::string> split_command(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      any = true;
    } else if (c == ' ' && !quoted) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (any) out.push_back(cur);
  return out;
}

TEST(Cli, ReadmeExamples) {
  std::ifstream in(std::string(BOTTCOH_SOURCE_DIR) + "/README.md");
  ASSERT_TRUE(in.good());
  std::string line;
  bool in_block = false;
  std::vector<std::pair<std::string, std::string>> examples;
  while (std::getline(in, line)) {
    if (line.rfind("```console", 0) == 0) {
      in_block = true;
      continue;
    }
    if (in_block && line.rfind("```", 0) == 0) {
      in_block = false;
      continue;
    }
    if (!in_block) continue;
    if (line.rfind("$ bottcoh ", 0) == 0)
      examples.emplace_back(line.substr(10), "");
    else if (!examples.empty())
      examples.back().second += line + "\n";
  }
  ASSERT_GE(examples.size(), 5u);
  for (const auto& [command, expected] : examples) {
    auto args = split_command(command);
    for (auto& a : args)
      if (a.rfind("tests/data/", 0) == 0) a = std::string(BOTTCOH_SOURCE_DIR) + "/" + a;
    EXPECT_EQ(run_cli(args).out, expected) << command;
  }
}

}  // namespace
}  // namespace bottcoh
