// Copyright 2026 The linarr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "linarr/oracle.hpp"
#include "linarr/planar.hpp"

namespace linarr::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "linarr");
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string Fixture(const std::string& name) {
  return std::string(LINARR_FIXTURE_DIR) + "/" + name;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("linarr_cli_test_" + name)).string();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

// First line of the output.
std::string Head(const std::string& text) { return text.substr(0, text.find('\n')); }

TEST(CliSolveTest, StarPlanarMax) {
  const Result r = Invoke({"solve", "--task", "maxla", "--constraint", "planar", Fixture("star4.txt")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(Head(r.out), "D=6");
  EXPECT_NE(r.out.find("\nroot="), std::string::npos);
}

TEST(CliSolveTest, SpiderProjective) {
  const Result r = Invoke({"solve", "--constraint", "projective", "--root", "1",
                        Fixture("spider7.txt")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(Head(r.out), "D=15");
  EXPECT_EQ(r.out.find("root="), std::string::npos);
}

TEST(CliSolveTest, SingleVertex) {
  const Result r = Invoke({"solve", "--constraint", "planar", Fixture("single.txt")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "D=0\n1\nroot=1\n");
}

TEST(CliSolveTest, ReadsStdin) {
  const Result r = Invoke({"solve", "--task", "minla", "--constraint", "planar", "-"},
                       "3\n1 2\n2 3\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(Head(r.out), "D=2");
}

TEST(CliSolveTest, Json) {
  const Result r = Invoke({"solve", "--constraint", "planar", "--json", Fixture("spider7.txt")});
  ASSERT_EQ(r.code, kExitOk);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["D"], 19);
  EXPECT_EQ(doc["arrangement"]["n"], 7);
  EXPECT_EQ(doc["arrangement"]["position"].size(), 7u);
  EXPECT_TRUE(doc.contains("root"));
}

TEST(CliSolveTest, Errors) {
  EXPECT_EQ(Invoke({"solve", "--constraint", "planar", Fixture("cycle.txt")}).code, kExitInput);
  EXPECT_EQ(Invoke({"solve", "--constraint", "planar", Fixture("missing.txt")}).code, kExitInput);
  EXPECT_EQ(Invoke({"solve", "--constraint", "projective", Fixture("star4.txt")}).code, kExitUsage);
  EXPECT_EQ(Invoke({"solve", "--constraint", "planar", "--root", "1", Fixture("star4.txt")}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"solve", "--constraint", "projective", "--root", "5", Fixture("star4.txt")}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"solve", "--constraint", "projective", "--root", "0", Fixture("star4.txt")}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"solve", "--constraint", "bogus", Fixture("star4.txt")}).code, kExitUsage);
  EXPECT_EQ(Invoke({"solve", "--task", "bogus", "--constraint", "planar", Fixture("star4.txt")}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST(CliSolveTest, WritesDot) {
  const std::string path = TempPath("spider.dot");
  const Result r = Invoke({"solve", "--constraint", "planar", "--dot", path, Fixture("spider7.txt")});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream dot(path);
  std::stringstream text;
  text << dot.rdbuf();
  EXPECT_EQ(text.str().rfind("graph arrangement {", 0), 0u);
  EXPECT_NE(text.str().find("1 -- 2"), std::string::npos);
  std::remove(path.c_str());
}

TEST(CliCheckTest, PathInOrder) {
  const std::string arr = TempPath("path.arr");
  WriteFile(arr, "1 2 3\n");
  const Result r = Invoke({"check", "--constraint", "planar", Fixture("path3.txt"), arr});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "valid\nD=2\n");
  std::remove(arr.c_str());
}

TEST(CliCheckTest, CrossingIsInvalid) {
  const Result r = Invoke({"check", "--constraint", "planar", Fixture("crossing4.txt"),
                        Fixture("crossing4.arr")});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_EQ(Head(r.out), "invalid");
  const Result none = Invoke({"check", "--constraint", "none", Fixture("crossing4.txt"),
                           Fixture("crossing4.arr")});
  EXPECT_EQ(none.code, kExitOk);
  const Result js = Invoke({"check", "--constraint", "planar", "--json", Fixture("crossing4.txt"),
                         Fixture("crossing4.arr")});
  EXPECT_EQ(json::parse(js.out)["valid"], false);
}

TEST(CliCheckTest, Errors) {
  const Result mismatch = Invoke({"check", "--constraint", "planar", Fixture("path3.txt"),
                               Fixture("crossing4.arr")});
  EXPECT_EQ(mismatch.code, kExitInput);
  const Result bad = Invoke({"check", "--constraint", "planar", Fixture("path3.txt"), "-"}, "1 1 2");
  EXPECT_EQ(bad.code, kExitInput);
  const Result root = Invoke({"check", "--constraint", "projective", Fixture("path3.txt"), "-"},
                          "1 2 3");
  EXPECT_EQ(root.code, kExitUsage);
}

TEST(CliCheckTest, SolveOutputRoundTrips) {
  const std::string arr = TempPath("roundtrip.arr");
  for (const char* name : {"star4.txt", "spider7.txt", "binary7.txt", "bistar6.txt",
                           "quasistar5.txt", "caterpillar8.txt", "path3.txt", "single.txt"}) {
    for (const char* task : {"maxla", "minla"}) {
      SCOPED_TRACE(std::string(name) + " " + task);
      const Result planar = Invoke({"solve", "--task", task, "--constraint", "planar",
                                 Fixture(name)});
      ASSERT_EQ(planar.code, kExitOk);
      const std::string line2 = planar.out.substr(planar.out.find('\n') + 1);
      WriteFile(arr, Head(line2) + "\n");
      const Result checked = Invoke({"check", "--constraint", "planar", Fixture(name), arr});
      EXPECT_EQ(checked.code, kExitOk);
      EXPECT_EQ(checked.out, "valid\n" + Head(planar.out) + "\n");

      const Result proj = Invoke({"solve", "--task", task, "--constraint", "projective", "--root",
                               "1", "--json", Fixture(name)});
      ASSERT_EQ(proj.code, kExitOk);
      const json doc = json::parse(proj.out);
      WriteFile(arr, doc["arrangement"].dump());
      const Result pchecked = Invoke({"check", "--constraint", "projective", "--root", "1",
                                   "--json", Fixture(name), arr});
      EXPECT_EQ(pchecked.code, kExitOk);
      EXPECT_EQ(json::parse(pchecked.out)["D"], doc["D"]);
    }
  }
  std::remove(arr.c_str());
}

TEST(CliOracleTest, NamedCases) {
  const Result star = Invoke({"oracle", "--constraint", "planar", Fixture("star4.txt")});
  EXPECT_EQ(star.code, kExitOk);
  EXPECT_EQ(Head(star.out), "D=6 count=12");
  const Result path_min = Invoke({"oracle", "--constraint", "planar", "--objective", "min",
                               Fixture("path3.txt")});
  EXPECT_EQ(Head(path_min.out).substr(0, 4), "D=2 ");
  const Result path_max = Invoke({"oracle", "--constraint", "none", Fixture("path3.txt")});
  EXPECT_EQ(Head(path_max.out), "D=3 count=4");
  const Result js = Invoke({"oracle", "--constraint", "projective", "--root", "1", "--json",
                         Fixture("spider7.txt")});
  ASSERT_EQ(js.code, kExitOk);
  EXPECT_EQ(json::parse(js.out)["D"], 15);
  EXPECT_EQ(json::parse(js.out)["count"], 12);
}

TEST(CliOracleTest, TooLarge) {
  const Result big = Invoke({"oracle", "--constraint", "planar", "-"},
                         Invoke({"gen", "path", "11"}).out);
  EXPECT_EQ(big.code, kExitUsage);
}

TEST(CliOracleTest, AgreesWithSolveOnFixtures) {
  for (const char* name : {"star4.txt", "spider7.txt", "binary7.txt", "bistar6.txt",
                           "quasistar5.txt", "caterpillar8.txt", "path3.txt", "single.txt",
                           "crossing4.txt"}) {
    for (const char* objective : {"max", "min"}) {
      SCOPED_TRACE(std::string(name) + " " + objective);
      const std::string task = std::string(objective) + "la";
      const Result solved = Invoke({"solve", "--task", task, "--constraint", "planar",
                                 Fixture(name)});
      const Result brute = Invoke({"oracle", "--constraint", "planar", "--objective", objective,
                                Fixture(name)});
      ASSERT_EQ(solved.code, kExitOk);
      ASSERT_EQ(brute.code, kExitOk);
      EXPECT_EQ(Head(solved.out), Head(brute.out).substr(0, Head(brute.out).find(' ')));
      for (const char* root : {"1", "2"}) {
        if (std::string(name) == "single.txt" && std::string(root) == "2") continue;
        const Result ps = Invoke({"solve", "--task", task, "--constraint", "projective",
                               "--root", root, Fixture(name)});
        const Result pb = Invoke({"oracle", "--constraint", "projective", "--root", root,
                               "--objective", objective, Fixture(name)});
        EXPECT_EQ(Head(ps.out), Head(pb.out).substr(0, Head(pb.out).find(' ')));
      }
    }
  }
}

TEST(CliGenTest, Star) {
  const Result r = Invoke({"gen", "star", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "5\n1 2\n1 3\n1 4\n1 5\n");
}

TEST(CliGenTest, RandomIsByteIdentical) {
  const Result a = Invoke({"gen", "random", "50", "--seed", "42"});
  const Result b = Invoke({"gen", "random", "50", "--seed", "42"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_tree(a.out).num_vertices(), 50u);
}

TEST(CliGenTest, CaterpillarParams) {
  const Result r = Invoke({"gen", "caterpillar", "9", "--params", "2,0,1,2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(is_caterpillar(parse_tree(r.out)));
  const Result rc = Invoke({"gen", "random-caterpillar", "30", "--seed", "3"});
  EXPECT_TRUE(is_caterpillar(parse_tree(rc.out)));
}

TEST(CliGenTest, JsonAndErrors) {
  const Result r = Invoke({"gen", "path", "3", "--json"});
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["edges"], json::parse("[[1,2],[2,3]]"));
  EXPECT_EQ(Invoke({"gen", "tree", "5"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"gen", "caterpillar", "9", "--params", "1,1"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"gen", "star", "0"}).code, kExitUsage);
}

TEST(CliBenchTest, TextAndJson) {
  const Result text = Invoke({"bench", "--sizes", "1000,10000", "--trials", "3"});
  ASSERT_EQ(text.code, kExitOk);
  std::istringstream lines(text.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "size mean_ns std_ns");
  std::size_t size = 0;
  double mean = 0;
  double sd = 0;
  std::vector<double> means;
  while (lines >> size >> mean >> sd) means.push_back(mean);
  ASSERT_EQ(means.size(), 2u);
  EXPECT_LT(means[0], means[1]);

  const Result js = Invoke({"bench", "--sizes", "1000,2000", "--trials", "2", "--json"});
  const json doc = json::parse(js.out);
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[0]["size"], 1000);
  EXPECT_TRUE(doc[1]["mean_ns"].is_number());
  EXPECT_TRUE(doc[1]["std_ns"].is_number());
}

}  // namespace
}  // namespace linarr::cli
