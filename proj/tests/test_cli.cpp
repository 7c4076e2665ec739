#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fwps/classify.hpp"
#include "fwps/io.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fwps::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = fs::path(FWPS_TEST_TMP) / name;
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(CliAnalyze, FakePlane) {
  const auto r = run({"analyze", temp_file("e1.txt", "2 -1\n-1 2\n-1 -1\n")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& s : {"weights: (1,1,1)", "mult: 3", "quotient: Z/3", "reflexive: true", "canonical: true",
                        "terminal: false", "1/3(1,2)"}) {
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
  }
}

TEST(CliAnalyze, FakeSpace) {
  const auto r = run({"analyze", temp_file("e2.txt", "1 0 0\n0 1 0\n1 -3 5\n-2 2 -5\n")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& s : {"weights: (1,1,1,1)", "mult: 5", "degree: 64/5", "terminal: true"}) {
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
  }
  std::size_t cones = 0;
  for (auto pos = r.out.find("1/5(1,2,3)"); pos != std::string::npos; pos = r.out.find("1/5(1,2,3)", pos + 1)) ++cones;
  EXPECT_EQ(cones, 4u);
}

TEST(CliAnalyze, JsonOutput) {
  const auto r = run({"analyze", temp_file("e2j.txt", "1 0 0\n0 1 0\n1 -3 5\n-2 2 -5\n"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["degree"], "64/5");
  EXPECT_EQ(j["terminal"], true);
}

TEST(CliAnalyze, ExitCodes) {
  EXPECT_EQ(run({"analyze", temp_file("short.txt", "1 0\n0 1\n")}).code, 2);
  EXPECT_EQ(run({"analyze", temp_file("missing-dir/none.txt", "")}).code, 2);
  const auto invalid = run({"analyze", temp_file("outside.txt", "1 0\n0 1\n2 3\n")});
  EXPECT_EQ(invalid.code, 3);
  EXPECT_NE(invalid.err.find("origin"), std::string::npos) << invalid.err;
  EXPECT_EQ(run({"analyze", temp_file("nonprim.txt", "2 0\n0 1\n-1 -1\n")}).code, 3);
}

TEST(CliWps, ProjectivePlane) {
  const auto r = run({"wps", "1", "1", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto vs = fwps::parse_simplex(r.out);
  EXPECT_EQ(fwps::normal_form(fwps::FanoSimplex(vs)),
            fwps::normal_form(fwps::FanoSimplex({{1, 0}, {0, 1}, {-1, -1}})));
}

TEST(CliWps, AnalyzeOneTwoThree) {
  const auto r = run({"wps", "1", "2", "3", "--analyze"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("facet_volumes: (1,2,3)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("h: 6"), std::string::npos);
  EXPECT_NE(r.out.find("reflexive: true"), std::string::npos);
  // The output is still a valid simplex file.
  EXPECT_EQ(fwps::parse_simplex(r.out).size(), 3u);
}

TEST(CliWps, BadWeights) {
  EXPECT_EQ(run({"wps", "2", "2", "3"}).code, 4);
  EXPECT_EQ(run({"wps", "2", "4", "6"}).code, 4);
  EXPECT_EQ(run({"wps", "0", "1", "1"}).code, 4);
  EXPECT_EQ(run({"wps", "a", "1", "1"}).code, 4);
}

TEST(CliWps, RoundTripThroughAnalyze) {
  const auto r = run({"wps", "1", "1", "2", "4"});
  ASSERT_EQ(r.code, 0);
  const auto a = run({"analyze", temp_file("wps1124.txt", r.out)});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("mult: 1"), std::string::npos);
  const auto vs = fwps::parse_simplex(r.out);
  EXPECT_TRUE(fwps::FanoSimplex(vs).weights().same_multiset(fwps::WeightSystem{1, 1, 2, 4}));
}

TEST(CliEnumerate, ProjectivePlaneCanonical) {
  const auto r = run({"enumerate", "1", "1", "1", "--class", "canonical"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(fwps::parse_catalog(r.out).size(), 2u);
  EXPECT_NE(r.err.find("mult 1: 1; mult 3: 1"), std::string::npos) << r.err;
}

TEST(CliEnumerate, ProjectiveThreeSpaceTerminal) {
  const auto path = (fs::path(FWPS_TEST_TMP) / "p3.jsonl").string();
  const auto r = run({"enumerate", "1", "1", "1", "1", "--class", "terminal", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto target = fwps::normal_form(fwps::FanoSimplex({{1, 0, 0}, {0, 1, 0}, {1, -3, 5}, {-2, 2, -5}}));
  bool found = false;
  for (const auto& e : fwps::parse_catalog(slurp(path))) {
    if (e.mult == 5 && fwps::IntegerMatrix::from_rows(e.vertices) == target) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(CliEnumerate, ExitCodes) {
  EXPECT_EQ(run({"enumerate", "1", "1", "1", "--class", "all"}).code, 5);
  EXPECT_EQ(run({"enumerate", "2", "2", "3", "--class", "canonical"}).code, 4);
  EXPECT_EQ(run({"enumerate", "1", "1", "1", "--class", "bogus"}).code, 2);
  EXPECT_EQ(run({"enumerate", "1", "1", "1", "--class", "all", "--mult-cap", "3"}).code, 0);
}

TEST(CliEnumerate, Deterministic) {
  const auto a = (fs::path(FWPS_TEST_TMP) / "det_a.jsonl").string();
  const auto b = (fs::path(FWPS_TEST_TMP) / "det_b.jsonl").string();
  ASSERT_EQ(run({"enumerate", "1", "1", "2", "--class", "canonical", "--out", a}).code, 0);
  ASSERT_EQ(run({"enumerate", "1", "1", "2", "--class", "canonical", "--out", b, "--threads", "3"}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(CliWeights, Listings) {
  const auto g = run({"weights", "--dim", "2", "--class", "gorenstein"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "(1,1,1)\n(1,1,2)\n(1,2,3)\n");
  const auto t = run({"weights", "--dim", "2", "--class", "terminal", "--h-max", "10"});
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "(1,1,1)\n");
  EXPECT_EQ(run({"weights", "--dim", "2", "--class", "canonical"}).code, 5);
}

TEST(CliVerify, CatalogFromEnumeration) {
  const auto path = (fs::path(FWPS_TEST_TMP) / "verify.jsonl").string();
  ASSERT_EQ(run({"enumerate", "1", "1", "1", "--class", "canonical", "--out", path}).code, 0);
  const auto r = run({"verify", "--catalog", path});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("2 instances"), std::string::npos) << r.out;
  const auto j = run({"verify", "--catalog", path, "--json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["instances"], 2);
}

TEST(CliVerify, EmptyCatalog) {
  const auto r = run({"verify", "--catalog", temp_file("empty.jsonl", "")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 instances"), std::string::npos) << r.out;
}

TEST(CliVerify, CorruptedMultiplicity) {
  const auto rec = fwps::make_record(fwps::FanoSimplex({{2, -1}, {-1, 2}, {-1, -1}}));
  auto j = nlohmann::ordered_json::parse(fwps::catalog_line(rec));
  j["mult"] = 100;
  const auto r = run({"verify", "--catalog", temp_file("corrupt.jsonl", j.dump() + "\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("mult_bound"), std::string::npos) << r.out;
}

TEST(CliVerify, UnreadableCatalog) {
  EXPECT_EQ(run({"verify", "--catalog", "/nonexistent/catalog.jsonl"}).code, 2);
  EXPECT_EQ(run({"verify", "--catalog", temp_file("garbage.jsonl", "not json\n")}).code, 2);
}

TEST(CliUsage, HelpAndErrors) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}
