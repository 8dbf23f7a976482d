#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "prefdist/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = prefdist::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::vector<std::string> dist(const std::string& method, const std::string& p1, const std::string& p2) {
  return {"dist", "--method", method, "--objects", "A,B,C", "--pref1", p1, "--pref2", p2};
}

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> extra) {
  base.insert(base.end(), extra);
  return base;
}

/// Writes `doc` into a fresh file under the test temp dir.
std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / ("prefdist_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kBayes = R"({"n": 2, "cells": [[{"2": 1}, {"1": 0.2, "2": 0.3, "3": 0.5}],
                                          [{"3": 0.2, "2": 0.3, "1": 0.5}, {"2": 1}]]})";
const char* kSucc = R"({"n": 2, "cells": [[{"2": 1}, {"1": 1}], [{"3": 1}, {"2": 1}]]})";

}  // namespace

TEST(CliDist, DirectPartialPair) {
  const auto j = run_json(dist("direct", "C > A", "A > B"));
  EXPECT_EQ(j["method"], "direct");
  EXPECT_EQ(j["pref1"], "C > A");
  EXPECT_NEAR(j["raw"].get<double>(), 2.8284, 5e-5);
  EXPECT_NEAR(j["normalized"].get<double>(), 0.8165, 5e-5);
  EXPECT_FALSE(j.contains("grid"));
}

TEST(CliDist, DefaultMethodIsDirect) {
  const auto j = run_json({"dist", "--objects", "A,B,C", "--pref1", "B>A>C", "--pref2", "B>C>A"});
  EXPECT_EQ(j["method"], "direct");
  EXPECT_NEAR(j["normalized"].get<double>(), 0.5774, 5e-5);
}

TEST(CliDist, IndirectMethods) {
  EXPECT_NEAR(run_json(dist("indirect-j", "C > A", "A > B"))["normalized"].get<double>(), 0.4832, 5e-5);
  EXPECT_NEAR(run_json(dist("indirect-bi", "C > A", "A > B"))["normalized"].get<double>(), 0.4419, 5e-5);
}

TEST(CliDist, BfmAllAttitudes) {
  const auto j = run_json(dist("bfm", "C > A", "A > B"));
  EXPECT_EQ(j["attitude"], "all");
  EXPECT_NEAR(j["normalized"].get<double>(), 0.6966, 5e-5);
  EXPECT_NEAR(j["aver"].get<double>(), 0.6966, 5e-5);
  EXPECT_NEAR(j["optim"].get<double>(), 0.0, 5e-5);
  EXPECT_NEAR(j["pessim"].get<double>(), 1.0, 5e-5);
  EXPECT_NEAR(j["hurwicz"].get<double>(), 0.5, 5e-5);
  EXPECT_NEAR(j["raw"].get<double>(), j["normalized"].get<double>() * j["max"].get<double>(), 1e-12);
  EXPECT_EQ(j["n_ctpo"], (json{5, 5}));
  EXPECT_EQ(j["grid"].size(), 5u);
}

TEST(CliDist, BfmSelectedAttitudeAndConvention) {
  const auto base = dist("bfm", "C > A", "A > B");
  EXPECT_NEAR(run_json(with(base, {"--attitude", "pessim"}))["normalized"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(run_json(with(base, {"--attitude", "hurwicz", "--alpha", "0.25"}))["normalized"].get<double>(), 0.75,
              1e-12);
  const auto unit = run_json(with(base, {"--psm-convention", "eq2"}));
  EXPECT_NEAR(unit["normalized"].get<double>(), 0.6966, 5e-5);
  EXPECT_NEAR(unit["max"].get<double>(), std::sqrt(6.0), 1e-12);
}

TEST(CliDist, IdenticalInputsGiveZero) {
  for (auto method : {"bfm", "direct", "indirect-j", "indirect-bi"}) {
    const auto j = run_json(dist(method, "C > (A = B)", "C>(B=A)"));
    EXPECT_EQ(j["normalized"].get<double>(), 0.0) << method;
  }
}

TEST(CliDist, SwappingPreferencesIsSymmetric) {
  for (auto method : {"bfm", "direct", "indirect-j", "indirect-bi"}) {
    const auto a = run_json(dist(method, "C > A", "A > B"));
    const auto b = run_json(dist(method, "A > B", "C > A"));
    EXPECT_NEAR(a["normalized"].get<double>(), b["normalized"].get<double>(), 1e-12) << method;
  }
}

TEST(CliDist, TableMatchesJson) {
  const auto base = dist("bfm", "C > A", "A > B");
  const auto j = run_json(base);
  const auto t = run(with(base, {"--format", "table"}));
  ASSERT_EQ(t.code, 0);
  std::istringstream lines(t.out);
  std::string line;
  std::size_t seen = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string key;
    double value;
    fields >> key;
    if (key == "normalized" || key == "aver" || key == "raw" || key == "max") {
      fields >> value;
      EXPECT_DOUBLE_EQ(value, j[key].get<double>()) << key;
      ++seen;
    }
  }
  EXPECT_EQ(seen, 4u);
}

TEST(CliDist, UsageErrorsExitTwo) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {dist("direct", "C > Z", "A > B"), "--pref1"},
      {dist("direct", "C > A", "A >"), "--pref2"},
      {dist("direct", "C > A", "(A = A)"), "--pref2"},
      {dist("direct", "", "A > B"), "--pref1"},
      {with(dist("direct", "C > A", "A > B"), {"--attitude", "optim"}), "--attitude"},
      {with(dist("bfm", "C > A", "A > B"), {"--alpha", "1.5"}), "--alpha"},
      {{"dist", "--objects", "A,A", "--pref1", "A", "--pref2", "A"}, "--objects"},
      {{"dist", "--objects", "A", "--pref1", "A", "--pref2", "A"}, "--objects"},
  };
  for (const auto& [args, field] : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << r.err;
    EXPECT_NE(r.err.find(field), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
  EXPECT_EQ(run({"dist", "--method", "kemeny", "--objects", "A,B", "--pref1", "A", "--pref2", "B"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliDist, CapExceededExitsThree) {
  const std::vector<std::string> args{"dist", "--method", "bfm", "--objects", "A,B,C,D", "--pref1", "A > B",
                                      "--pref2", "C > D", "--cap", "3"};
  const auto r = run(args);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("--cap"), std::string::npos) << r.err;
  // The closed-form methods do not enumerate.
  auto direct = args;
  direct[2] = "direct";
  direct.resize(direct.size() - 2);
  EXPECT_EQ(run(direct).code, 0);
}

TEST(CliEnumerate, ListsAndCounts) {
  const auto r = run({"enumerate", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("X1 > (X2 = X3)\n"), std::string::npos);
  EXPECT_NE(r.out.find("count: 13\n"), std::string::npos);
  const auto labelled = run({"enumerate", "--objects", "A,B"});
  EXPECT_EQ(labelled.out, "(A = B)\nA > B\nB > A\ncount: 3\n");
  EXPECT_EQ(run({"enumerate", "--n", "9"}).code, 3);
  EXPECT_EQ(run({"enumerate", "--n", "4", "--cap", "3"}).code, 3);
  EXPECT_EQ(run({"enumerate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--n", "2", "--objects", "A,B,C"}).code, 2);
}

TEST(CliEnumerate, EnvironmentCap) {
  ::setenv("PREFDIST_CAP", "2", 1);
  EXPECT_EQ(run({"enumerate", "--n", "3"}).code, 3);
  EXPECT_EQ(run({"enumerate", "--n", "3", "--cap", "3"}).code, 0);
  ::setenv("PREFDIST_CAP", "lots", 1);
  EXPECT_EQ(run({"enumerate", "--n", "3"}).code, 2);
  ::unsetenv("PREFDIST_CAP");
}

TEST(CliCompatible, PartialInputs) {
  const auto r = run({"compatible", "--objects", "A,B,C", "--pref", "C > A"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("count: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("C > (A = B)\n"), std::string::npos);
  EXPECT_NE(r.out.find("(B = C) > A\n"), std::string::npos);
  EXPECT_EQ(run({"compatible", "--objects", "A,B,C", "--pref", "C > Q"}).code, 2);
}

TEST(CliDistGeneral, Files) {
  const auto bayes = write_temp("bayes.json", kBayes);
  const auto succ = write_temp("succ.json", kSucc);
  const auto j = run_json({"dist-general", "--bba1", bayes, "--bba2", succ});
  EXPECT_EQ(j["n"], 2);
  EXPECT_NEAR(j["raw"].get<double>(), 1.4, 1e-12);
  EXPECT_NEAR(j["max"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(j["normalized"].get<double>(), 0.7, 1e-12);
  EXPECT_EQ(run_json({"dist-general", bayes, bayes})["normalized"].get<double>(), 0.0);

  const auto bad = write_temp("bad.json", R"({"n": 2, "cells": [[{"2": 1}, {"1": 0.5, "2": 0.4}],
                                                                [{"3": 0.5, "2": 0.4}, {"2": 1}]]})");
  const auto r = run({"dist-general", bayes, bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--bba2"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("cell (0, 1)"), std::string::npos) << r.err;

  const auto three = write_temp("three.json", R"({"n": 3, "cells": [[{"2": 1}, {"1|2|3": 1}, {"1|2|3": 1}],
    [{"1|2|3": 1}, {"2": 1}, {"1|2|3": 1}], [{"1|2|3": 1}, {"1|2|3": 1}, {"2": 1}]]})");
  EXPECT_EQ(run({"dist-general", bayes, three}).code, 2);
  EXPECT_EQ(run({"dist-general", bayes, write_temp("junk.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"dist-general", bayes, "/nonexistent/prefdist.json"}).code, 2);
}
