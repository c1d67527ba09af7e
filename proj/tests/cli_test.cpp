#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "hrr/cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hrr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

TEST(Cli, KummerCsv) {
  const Result r = run({"kummer-chern", "--n", "5", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 8u);
  EXPECT_EQ(l.front(), "monomial,value");
  EXPECT_EQ(l.back(), "c10,2592");
}

TEST(Cli, KummerJson) {
  const Result r = run({"kummer-chern", "--n", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["unique"], true);
  ASSERT_EQ(j["chern_numbers"].size(), 2u);
  EXPECT_EQ(j["chern_numbers"][0]["monomial"], "c2^2");
  EXPECT_EQ(j["chern_numbers"][0]["value"], "756");
  EXPECT_EQ(j["chern_numbers"][1]["monomial"], "c4");
  EXPECT_EQ(j["chern_numbers"][1]["value"], "108");
}

TEST(Cli, KummerRankDeficient) {
  const Result csv = run({"kummer-chern", "--n", "6", "--format", "csv"});
  EXPECT_EQ(csv.code, 2);
  EXPECT_EQ(csv.out, "monomial,value\n");
  const Result json = run({"kummer-chern", "--n", "6", "--format", "json"});
  EXPECT_EQ(json.code, 2);
  EXPECT_EQ(nlohmann::json::parse(json.out)["unique"], false);
}

TEST(Cli, ToddDeformedJson) {
  const Result r = run({"todd-deformed", "--n", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& entries = j["entries"];
  ASSERT_EQ(entries.size(), 4u);
  const auto& e = entries[1];
  EXPECT_EQ(e["degree"], 4);
  EXPECT_EQ(e["value"], nlohmann::json({{"c2", "1/12"}}));
  ASSERT_EQ(e["lambda"].size(), 1u);
  EXPECT_EQ(e["lambda"][0], nlohmann::json({{"c2", "1/24"}}));
  EXPECT_EQ(entries[2]["value"]["c4"], "-1/720");
}

TEST(Cli, GenusText) {
  const Result r = run({"genus", "--series", "todd", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "weight 0: 1\nweight 2: 1/12*c2\nweight 4: 1/240*c2^2 - 1/720*c4\n");
  EXPECT_EQ(run({"genus", "--series", "chi-y", "--n", "1"}).out,
            "y^0: 1 + 1/12*c2\ny^1: 2 - 5/6*c2\ny^2: 1 + 1/12*c2\n");
}

TEST(Cli, VerifyOmegaDegreeZero) {
  const Result r = run({"verify", "omega", "--max-degree", "0", "--no-cache"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK (0 defects)\n");
}

TEST(Cli, VerifyChecksEndWithSummary) {
  for (const char* check : {"laexp", "bernoulli-lemma", "wheels", "scp-partial", "ell-partial", "omega"}) {
    const Result r = run({"verify", check, "--max-degree", "6", "--no-cache"});
    EXPECT_EQ(r.code, 0) << check;
    EXPECT_EQ(lines(r.out).back(), "OK (0 defects)") << check;
  }
}

TEST(Cli, GraphBasisUsesCache) {
  const auto dir = std::filesystem::temp_directory_path() / "hrr-cli-test-cache";
  std::filesystem::remove_all(dir);
  const Result a = run({"graph-basis", "--legs", "2", "--trivalent", "4", "--cache", dir.string()});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "basis-u2-t4.txt"));
  const Result b = run({"graph-basis", "--legs", "2", "--trivalent", "4", "--cache", dir.string()});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("dimension 4"), std::string::npos);
  const auto j = nlohmann::json::parse(
      run({"graph-basis", "--legs", "0", "--trivalent", "4", "--no-cache", "--format", "json"}).out);
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["basis"].size(), 2u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"todd-deformed", "--n", "5", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"kummer-chern"}).code, 64);
  EXPECT_EQ(run({"kummer-chern", "--n", "7"}).code, 64);
  EXPECT_EQ(run({"kummer-chern", "--n", "3", "--format", "xml"}).code, 64);
  EXPECT_EQ(run({"kummer-chern", "--n", "3", "--bogus"}).code, 64);
  EXPECT_EQ(run({"verify", "nothing"}).code, 64);
  EXPECT_EQ(run({"graph-basis", "--legs", "1", "--trivalent", "2", "--no-cache"}).code, 64);
}

TEST(Cli, DegreeCapIsAnError) {
  const Result r = run({"graph-basis", "--legs", "0", "--trivalent", "12", "--no-cache"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) {
  const Result r = run({"kummer-chern", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--format"), std::string::npos);
}

}  // namespace
