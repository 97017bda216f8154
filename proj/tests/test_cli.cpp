// Copyright 2026 The tposc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

namespace tposc::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("tposc_test_" + name + ".json");
  std::ofstream(path) << content;
  return path.string();
}

json parse_json(const std::string& s) { return json::parse(s); }

json without_elapsed(json j) {
  j.erase("elapsed_ms");
  return j;
}

TEST(Cli, MgExamples) {
  for (auto [type, m] : {std::pair{"A4", 4}, {"G2", 3}, {"D4", 3}}) {
    const CliRun r = run_cli({"mg", type, "--json"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(parse_json(r.out).at("m"), m) << type;
  }
  const CliRun text = run_cli({"mg", "a4"});
  EXPECT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("m(A4) = 4"), std::string::npos);
}

TEST(Cli, MgFormat) {
  const json j = parse_json(run_cli({"mg", "E6", "--witness", "--json", "--jobs", "2"}).out);
  EXPECT_EQ(j.at("type"), "E6");
  EXPECT_EQ(j.at("m"), 8);
  EXPECT_TRUE(j.at("witness").is_array());
  EXPECT_EQ(j.at("permutations_checked"), 720);
  EXPECT_TRUE(j.at("elapsed_ms").is_number_integer());
  EXPECT_FALSE(parse_json(run_cli({"mg", "E6", "--json"}).out).contains("witness"));
  const json per = parse_json(run_cli({"mg", "A3", "--json", "--per-permutation"}).out);
  EXPECT_EQ(per.at("per_permutation_min").size(), 6u);
}

TEST(Cli, MgErrors) {
  EXPECT_EQ(run_cli({"mg", "Q3"}).code, kUsage);
  EXPECT_EQ(run_cli({"mg", "D3"}).code, kUsage);
  EXPECT_EQ(run_cli({"mg"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST(Cli, CheckExamples) {
  const std::string id = write_temp("id", R"({"n":2,"entries":[["1","0"],["0","1"]]})");
  const std::string osc = write_temp("osc", R"({"n":2,"entries":[["1","1"],["1","2"]]})");
  const std::string swap = write_temp("swap", R"({"n":2,"entries":[["0","1"],["1","0"]]})");

  CliRun r = run_cli({"check", id, "--mode", "tnn", "--json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(parse_json(r.out).at("verdict").at("tnn"), true);

  r = run_cli({"check", osc, "--mode", "osc", "--json"});
  EXPECT_EQ(r.code, kOk);
  json v = parse_json(r.out).at("verdict");
  EXPECT_EQ(v.at("oscillatory"), true);
  EXPECT_EQ(v.at("min_tp_power"), 1);

  r = run_cli({"check", swap, "--mode", "tnn", "--json"});
  EXPECT_EQ(r.code, kFalse);
  v = parse_json(r.out).at("verdict");
  EXPECT_EQ(v.at("tnn"), false);
  EXPECT_EQ(v.at("violation").dump(), R"({"rows":[1,2],"cols":[1,2]})");

  r = run_cli({"check", osc, "--mode", "cell", "--json"});
  EXPECT_EQ(r.code, kOk);
  v = parse_json(r.out).at("verdict").at("cell");
  EXPECT_EQ(v.at("u").at("word"), json::array({1}));
  EXPECT_EQ(v.at("v").at("word"), json::array({1}));

  r = run_cli({"check", id, "--mode", "minpow", "--json"});
  EXPECT_EQ(r.code, kFalse);
  EXPECT_TRUE(parse_json(r.out).at("verdict").at("min_tp_power").is_null());

  r = run_cli({"check", osc, "--mode", "tp"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("tp: true"), std::string::npos);
}

TEST(Cli, CheckErrors) {
  const std::string singular = write_temp("singular", R"({"entries":[["1","1"],["1","1"]]})");
  const std::string garbage = write_temp("garbage", R"({"entries":[["1","x"],["1","1"]]})");
  const std::string broken = write_temp("broken", "{not json");
  EXPECT_EQ(run_cli({"check", singular, "--mode", "cell"}).code, kDomain);
  EXPECT_EQ(run_cli({"check", garbage}).code, kUsage);
  EXPECT_EQ(run_cli({"check", broken}).code, kUsage);
  EXPECT_EQ(run_cli({"check", "/nonexistent/file.json"}).code, kUsage);
  EXPECT_EQ(run_cli({"check", singular, "--mode", "nope"}).code, kUsage);
  const std::string big = write_temp("big", [] {
    json rows = json::array();
    for (int i = 0; i < 8; ++i) {
      json row = json::array();
      for (int j = 0; j < 8; ++j) row.push_back(i == j ? "1" : "0");
      rows.push_back(row);
    }
    return json{{"entries", rows}}.dump();
  }());
  EXPECT_EQ(run_cli({"check", big}).code, kUsage);
  EXPECT_EQ(run_cli({"check", big, "--max-n", "8"}).code, kOk);
}

TEST(Cli, FactorExamples) {
  CliRun r = run_cli({"factor", write_temp("f1", R"({"n":2,"word":[-1,1],"params":["1","1"]})"), "--json"});
  EXPECT_EQ(r.code, kOk);
  json v = parse_json(r.out).at("verdict");
  EXPECT_EQ(v.at("matrix").at("entries").dump(), R"([["1","1"],["1","2"]])");
  EXPECT_EQ(v.at("cell").at("u").at("word"), json::array({1}));
  EXPECT_EQ(v.at("cell").at("v").at("word"), json::array({1}));
  EXPECT_EQ(v.at("predicted_min_tp_power"), 1);

  r = run_cli({"factor", write_temp("f2", R"({"n":3})"), "--json"});
  EXPECT_EQ(r.code, kOk);
  v = parse_json(r.out).at("verdict");
  EXPECT_EQ(v.at("cell").at("u").at("length"), 0);
  EXPECT_EQ(v.at("cell").at("v").at("length"), 0);
  EXPECT_TRUE(v.at("predicted_min_tp_power").is_null());

  r = run_cli({"factor", write_temp("f3", R"({"n":3,"word":[1,2,1],"params":["2","1/3","5"]})"), "--json"});
  v = parse_json(r.out).at("verdict");
  EXPECT_EQ(v.at("cell").at("u").at("length"), 0);
  EXPECT_EQ(v.at("cell").at("v").at("word"), json::array({1, 2, 1}));

  EXPECT_EQ(run_cli({"factor", write_temp("f4", R"({"n":2,"word":[1],"params":["0"]})")}).code, kUsage);
  EXPECT_EQ(run_cli({"factor", write_temp("f5", R"({"n":2,"word":[1],"params":["-1/2"]})")}).code, kUsage);
}

TEST(Cli, VerifySuites) {
  CliRun r = run_cli({"verify", "dodgson", "--seed", "7", "--trials", "3", "--json"});
  EXPECT_EQ(r.code, kOk);
  json j = parse_json(r.out);
  EXPECT_EQ(j.at("command"), "verify");
  EXPECT_EQ(j.at("inputs").at("seed"), 7);
  EXPECT_EQ(j.at("verdict").at("passed"), true);
  EXPECT_EQ(run_cli({"verify", "coxeter"}).code, kOk);
  EXPECT_EQ(run_cli({"verify", "gk", "--seed", "1", "--trials", "2"}).code, kOk);
  EXPECT_EQ(run_cli({"verify", "unknown"}).code, kUsage);
  EXPECT_EQ(run_cli({"verify", "gp", "--seed", "x"}).code, kUsage);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"verify", "gp", "--seed", "11", "--trials", "5", "--json"};
  const json a = without_elapsed(parse_json(run_cli(args).out));
  std::vector<std::string> wide = args;
  wide.insert(wide.end(), {"--jobs", "3"});
  const json b = without_elapsed(parse_json(run_cli(wide).out));
  EXPECT_EQ(a.dump(), b.dump());
  const json c = without_elapsed(parse_json(run_cli({"mg", "D5", "--json", "--witness"}).out));
  const json d = without_elapsed(parse_json(run_cli({"mg", "D5", "--json", "--witness", "--jobs", "4"}).out));
  EXPECT_EQ(c.dump(), d.dump());
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("TPOSC_SEED", "5", 1);
  const json a = parse_json(run_cli({"verify", "gp", "--trials", "2", "--json"}).out);
  EXPECT_EQ(a.at("inputs").at("seed"), 5);
  ::setenv("TPOSC_SEED", "bad", 1);
  EXPECT_EQ(run_cli({"verify", "gp", "--trials", "2"}).code, kUsage);
  ::unsetenv("TPOSC_SEED");
}

}  // namespace
}  // namespace tposc::cli
