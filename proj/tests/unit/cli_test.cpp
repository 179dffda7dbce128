// Copyright 2026 The Parking Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json_io.hpp"

namespace parking::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("parking_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

TEST(CliPark, StartsAndFailure) {
  const auto a = call({"park", "--y", "1,3,1", "--x", "2,1,1", "--rule", "assortment"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_NE(a.out.find("[2,3,1]"), std::string::npos);
  const auto s = call({"park", "--y", "1,3,1", "--x", "2,1,1", "--rule", "sequence"});
  EXPECT_EQ(s.code, kOk);
  EXPECT_NE(s.out.find("failed at car 2"), std::string::npos);
  const auto one = call({"park", "--y", "1", "--x", "1", "--format", "json"});
  EXPECT_EQ(json::parse(one.out)["starts"], json::array({1}));
}

TEST(CliPark, CsvColumns) {
  const auto r = call({"park", "--y", "1,2,2", "--x", "2,1,1", "--format", "csv"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "car,length,preference,start\n1,1,2,2\n2,2,1,3\n3,2,1,\n");
}

TEST(CliExitCodes, Distinct) {
  EXPECT_EQ(call({"park", "--y", "1,2", "--x", "9,1"}).code, kInvalidInput);
  EXPECT_EQ(call({"park", "--y", "1,a", "--x", "1,1"}).code, kInvalidInput);
  EXPECT_EQ(call({"park", "--y", "1,2", "--x", "1,1", "--bogus"}).code, kUsage);
  EXPECT_EQ(call({"teleport"}).code, kUsage);
  EXPECT_EQ(call({"decide", "--y", "1,2", "--x", "1,1", "--format", "csv"}).code, kUsage);
  EXPECT_EQ(call({"enumerate", "--y", "3,3,3,3", "--budget", "10"}).code, kBudgetExceeded);
  EXPECT_EQ(call({"mininv", "--y", "1,2,3,4,5", "--method", "formula"}).code, kInvalidInput);
  EXPECT_EQ(call({"verify", "--n", "3", "--range", "1,2", "--checks", "Nope"}).code, kInvalidInput);
  EXPECT_EQ(call({"verify", "--n", "3", "--range", "1,2", "--checks", "MiPairVsOracle"}).code,
            kInvalidInput);
}

TEST(CliHelp, DocumentsExitCodes) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("Exit codes"), std::string::npos);
  EXPECT_NE(r.out.find("budget exceeded"), std::string::npos);
}

TEST(CliBudget, EnvironmentAndFlag) {
  ::setenv(kBudgetEnv, "5", 1);
  EXPECT_EQ(call({"enumerate", "--y", "3,3,3"}).code, kBudgetExceeded);
  EXPECT_EQ(call({"enumerate", "--y", "3,3,3", "--budget", "1000"}).code, kOk);
  ::setenv(kBudgetEnv, "lots", 1);
  EXPECT_EQ(call({"enumerate", "--y", "1,1"}).code, kUsage);
  ::unsetenv(kBudgetEnv);
  EXPECT_EQ(resolve_budget(std::nullopt), kDefaultBudget);
}

TEST(CliMininv, Methods) {
  for (const char* m : {"oracle", "alternate", "formula"}) {
    const auto r = call({"mininv", "--y", "1,2,2", "--method", m, "--format", "json"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_TRUE(json::parse(r.out)["minimally_invariant"].get<bool>()) << m;
  }
  const auto four = call({"mininv", "--y", "1,2,3,4", "--method", "formula"});
  EXPECT_EQ(four.code, kOk);
  EXPECT_NE(four.err.find("conjecture"), std::string::npos);
}

TEST(CliCount, Formulas) {
  EXPECT_NE(call({"count", "--y", "1,1,1,1", "--formula", "eq2"}).out.find("125"),
            std::string::npos);
  const auto fc = call({"count", "--formula", "fuss-catalan", "--k", "2", "--n", "3",
                        "--format", "json"});
  EXPECT_EQ(json::parse(fc.out)["value"], "12");
  EXPECT_EQ(call({"count", "--formula", "eq7"}).code, kUsage);
}

TEST(CliEnumerate, JsonRoundTrip) {
  const auto r = call({"enumerate", "--y", "1,2,1", "--rule", "assortment", "--filter",
                       "invariant", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
  const auto parsed = enumeration_from_ndjson(r.out);
  EXPECT_EQ(parsed, enumerate(CarLengths{1, 2, 1}, Rule::Assortment, Filter::Invariant));
}

TEST(CliEnumerate, CsvAndJobs) {
  const auto one = call({"enumerate", "--y", "2,1,2", "--format", "csv", "--jobs", "1"});
  const auto many = call({"enumerate", "--y", "2,1,2", "--format", "csv", "--jobs", "8"});
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(one.out.rfind("rule,filter,y,x\nassortment,all,2 1 2,", 0), 0u);
}

TEST(JsonIo, RejectsInconsistentRecords) {
  EXPECT_THROW(enumeration_from_ndjson(""), ValidationError);
  EXPECT_THROW(enumeration_from_ndjson("{nope"), ValidationError);
  EXPECT_THROW(enumeration_from_ndjson(
                   "{\"filter\":\"all\",\"rule\":\"assortment\",\"x\":[1],\"y\":[1]}\n"
                   "{\"filter\":\"all\",\"rule\":\"sequence\",\"x\":[1],\"y\":[1]}\n"),
               ValidationError);
}

TEST(CliVerify, InlineAndSpecFileAgree) {
  const auto inline_run = call({"verify", "--n", "3", "--range", "1,4", "--checks",
                                "MiTripleVsOracle,Table1VsOracle", "--format", "json"});
  const auto path = temp_file("spec.json",
                              R"({"arity":3,"lo":1,"hi":4,"checks":["MiTripleVsOracle","Table1VsOracle"]})");
  const auto file_run = call({"verify", "--spec-file", path, "--format", "json"});
  EXPECT_EQ(inline_run.code, kOk);
  EXPECT_EQ(inline_run.out, file_run.out);
  EXPECT_EQ(std::count(inline_run.out.begin(), inline_run.out.end(), '\n'), 2);
}

TEST(CliVerify, ByteIdenticalAcrossJobs) {
  const auto one = call({"verify", "--n", "3", "--range", "1,4", "--format", "json", "--jobs", "1"});
  const auto eight = call({"verify", "--n", "3", "--range", "1,4", "--format", "json", "--jobs", "8"});
  EXPECT_EQ(one.code, kOk);
  EXPECT_EQ(one.out, eight.out);
}

TEST(CliConjecture4, CompletesWithFindingsOnly) {
  const auto r = call({"conjecture4", "--range", "1,2", "--format", "csv"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("Conjecture4Audit,conjecture,16,"), std::string::npos);
}

TEST(CliReplay, SeedStaleAndEmpty) {
  const auto seed = temp_file(
      "seed.json",
      R"({"check":"MiTripleVsOracle","y":[1,3,2],"witness_kind":"w","witness":[4],"closed_form_value":"false","oracle_value":"false"})");
  const auto ok = call({"replay", "--entry-file", seed, "--format", "json"});
  ASSERT_EQ(ok.code, kOk);
  const auto trace = json::parse(ok.out);
  ASSERT_EQ(trace["blocks"].size(), 3u);
  for (const auto& b : trace["blocks"]) EXPECT_TRUE(b["parked"].get<bool>());

  const auto stale = temp_file(
      "stale.json",
      R"({"check":"MiTripleVsOracle","y":[1,2,3],"witness_kind":"w","witness":[2],"closed_form_value":"false","oracle_value":"true"})");
  EXPECT_EQ(call({"replay", "--entry-file", stale}).code, kBadWitness);

  const auto line = temp_file(
      "line.json",
      R"({"agreements":1,"check":"MiPairVsOracle","conjecture":false,"disagreements":[],"instances_checked":1,"spec":{"arity":2,"hi":1,"lo":1}})");
  EXPECT_EQ(call({"replay", "--entry-file", line}).code, kBadWitness);
  EXPECT_EQ(call({"replay", "--entry-file", "/nonexistent/entry.json"}).code, kInvalidInput);
}

TEST(CliPiInvariant, WordsAndPrecondition) {
  const auto r = call({"pi-invariant", "--y", "1,2,2", "--x", "1,1,2", "--word", "2", "--format",
                       "json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(json::parse(r.out)["invariant"].get<bool>());
  const auto bad = call({"pi-invariant", "--y", "1,2,2", "--x", "1,1,2", "--word", "1,2"});
  EXPECT_NE(bad.out.find("invariant           false"), std::string::npos);
  EXPECT_EQ(call({"pi-invariant", "--y", "1,2,2", "--x", "2,1,1", "--pi", "2,1,3"}).code,
            kInvalidInput);
  EXPECT_EQ(call({"pi-invariant", "--y", "1,2,2", "--x", "1,1,2"}).code, kUsage);
}

}  // namespace
}  // namespace parking::cli
