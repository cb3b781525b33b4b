// Copyright 2026 The Authors.
//
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

#include "equimat/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "equimat/json_io.h"
#include "gtest/gtest.h"

namespace equimat {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
  Json Doc() const { return ParseJson(out, "stdout"); }
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return std::string(EQUIMAT_TEST_DATA) + "/" + name;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::temp_directory_path() /
        ("equimat_cli_" +
         std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, PartitionK4) {
  const CliRun r = Cli({"partition", "--matroid", Data("k4.json"), "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = r.Doc();
  EXPECT_EQ(doc["command"], "partition");
  EXPECT_EQ(doc["parts"].size(), 2u);
  EXPECT_EQ(doc["oracle"]["partitions"], 6);
  EXPECT_TRUE(doc["oracle"]["member"].get<bool>());
  EXPECT_NE(r.err.find("partition: 2 bases"), std::string::npos);
}

TEST_F(CliTest, PartitionInfeasibleHasWitness) {
  const std::string m =
      Write("g.json", R"({"type":"graphic","num_vertices":4,)"
                      R"("edges":[[0,1],[1,2],[0,2],[0,1],[1,2],[2,3]]})");
  const CliRun r = Cli({"partition", "--matroid", m});
  EXPECT_EQ(r.code, kExitInfeasible);
  const Json doc = r.Doc();
  EXPECT_EQ(doc["error"], "infeasible");
  EXPECT_FALSE(doc["witness"].empty());
}

TEST_F(CliTest, WrongGroundSizeIsInfeasible) {
  const CliRun r = Cli({"partition", "--matroid", Data("bad.json")});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_EQ(r.Doc()["error"], "infeasible");
}

TEST_F(CliTest, EquitableK4) {
  const CliRun r = Cli({"equitable", "--matroid", Data("k4.json"), "--set",
                        Data("s_e0_e5.json"), "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json c = r.Doc()["conditions"];
  EXPECT_EQ(c["counts"], Json::parse("[1,1]"));
  EXPECT_TRUE(c["bounds_met"].get<bool>());
  EXPECT_TRUE(r.Doc()["oracle"]["equitable_exists"].get<bool>());
}

TEST_F(CliTest, EquitableThreeParts) {
  const std::string m =
      Write("u.json", R"({"type":"uniform","num_elements":9,"rank":3})");
  const std::string s = Write("s.json", R"({"elements":[0,1,2,3]})");
  const CliRun r =
      Cli({"equitable", "--matroid", m, "--set", s, "--k", "3", "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json c = r.Doc()["conditions"];
  EXPECT_EQ(c["floor"], 1);
  EXPECT_EQ(c["ceil"], 2);
}

TEST_F(CliTest, EquitableTwoSetsK4) {
  const CliRun r =
      Cli({"equitable2", "--matroid", Data("k4.json"), "--set1",
           Data("s_e0_e5.json"), "--set2", Data("s_e1_e4.json"), "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json c = r.Doc()["conditions"];
  EXPECT_TRUE(c["i"].get<bool>());
  EXPECT_TRUE(c["ii"].get<bool>());
  EXPECT_TRUE(c["iii"].get<bool>());
  EXPECT_EQ(c["parity_case"], "(iii) both even");
  EXPECT_EQ(c["counts1"], Json::parse("[1,1]"));
  EXPECT_NE(c["counts2"], Json::parse("[1,1]"));
}

TEST_F(CliTest, EquitableTwoSetsOverlapRejected) {
  const CliRun r = Cli({"equitable2", "--matroid", Data("k4.json"), "--set1",
                        Data("s_e0_e5.json"), "--set2", Data("s_e0_e5.json")});
  EXPECT_EQ(r.code, kExitMalformed);
  EXPECT_EQ(r.Doc()["error"], "precondition");
}

TEST_F(CliTest, ExchangeK4) {
  const std::string b1 = Write("b1.json", "[0,1,4]");
  const std::string b2 = Write("b2.json", "[2,3,5]");
  const CliRun r =
      Cli({"exchange", "--matroid", Data("k4.json"), "--set",
           Data("s_e1_e4.json"), "--basis1", b2, "--basis2", b1, "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = r.Doc();
  const Json x = doc["exchange"]["elements"];
  EXPECT_EQ(x.size(), doc["oracle"]["smallest"].size());
  EXPECT_EQ(doc["result"]["basis1"].size(), 3u);
}

TEST_F(CliTest, ExchangeNeedsBothBases) {
  const std::string b1 = Write("b1.json", "[0,1,4]");
  const CliRun r = Cli({"exchange", "--matroid", Data("k4.json"), "--set",
                        Data("s_e1_e4.json"), "--basis1", b1});
  EXPECT_EQ(r.code, kExitMalformed);
}

TEST_F(CliTest, Ef1RepairInstance) {
  const std::string inst = Write("i.json", R"({
    "matroid": {"type": "graphic", "num_vertices": 5,
                "edges": [[1,4],[0,1],[3,4],[0,2],[0,2],[2,4],[2,3],[0,3]]},
    "agents": [{"values": ["3","0","3","0","3","2","2","3"]},
               {"values": ["3","0","3","0","3","2","2","3"]}]})");
  const CliRun r = Cli({"ef1", "--instance", inst, "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = r.Doc();
  EXPECT_EQ(doc["method"], "tri_valued");
  EXPECT_TRUE(doc["report"]["ef1"].get<bool>());
  EXPECT_GE(doc["stats"]["envy_repairs"].get<int>(), 1);
  EXPECT_TRUE(doc["oracle"]["ef1_exists"].get<bool>());
}

TEST_F(CliTest, Ef1TwoAgentsDifferentValuations) {
  const std::string inst = Write("i.json", R"({
    "matroid": {"type":"uniform","num_elements":6,"rank":3},
    "agents": [{"values":[1,1,0,0,1,0]}, {"values":[5,1,2,7,0,3]}]})");
  const CliRun r = Cli({"ef1", "--instance", inst});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.Doc()["method"], "cut_and_choose");
}

TEST_F(CliTest, Ef1RejectsFourValues) {
  const std::string inst = Write("i.json", R"({
    "matroid": {"type":"uniform","num_elements":4,"rank":2},
    "agents": [{"values":[0,1,2,3]}, {"values":[0,1,2,3]}]})");
  EXPECT_EQ(Cli({"ef1", "--instance", inst}).code, kExitMalformed);
}

TEST_F(CliTest, MmsWithMatroidOverride) {
  const std::string inst = Write("i.json", R"({
    "matroid": {"type":"uniform","num_elements":6,"rank":3},
    "agents": [{"values":[1,1,0,0,0,1]}, {"values":[-1,"1/2",-1,-1,"1/2",-1]}]})");
  const CliRun r = Cli(
      {"mms", "--instance", inst, "--matroid", Data("k4.json"), "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = r.Doc();
  EXPECT_EQ(doc["report"]["mms_thresholds"], doc["oracle"]["brute_mms"]);
  EXPECT_EQ(doc["report"]["mms_thresholds"][0], "1");
}

TEST_F(CliTest, MalformedInputs) {
  const std::string broken = Write("broken.json", "{\"type\": ");
  EXPECT_EQ(Cli({"partition", "--matroid", broken}).code, kExitMalformed);
  EXPECT_EQ(Cli({"partition", "--matroid", "/nonexistent.json"}).code,
            kExitMalformed);
  EXPECT_EQ(Cli({"partition"}).code, kExitMalformed);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitMalformed);
  EXPECT_EQ(Cli({"partition", "--matroid", Data("k4.json"), "--k", "x"}).code,
            kExitMalformed);
  const std::string outside = Write("s.json", "[9]");
  const CliRun r =
      Cli({"equitable", "--matroid", Data("k4.json"), "--set", outside});
  EXPECT_EQ(r.code, kExitMalformed);
  EXPECT_EQ(r.Doc()["error"], "malformed");
}

TEST_F(CliTest, OracleBudgetExceeded) {
  const std::string m =
      Write("u.json", R"({"type":"uniform","num_elements":14,"rank":7})");
  const CliRun plain = Cli({"partition", "--matroid", m});
  EXPECT_EQ(plain.code, kExitOk);
  const CliRun checked = Cli({"partition", "--matroid", m, "--oracle"});
  EXPECT_EQ(checked.code, kExitBudget);
  EXPECT_EQ(checked.Doc()["error"], "budget");
}

TEST_F(CliTest, OutputFile) {
  const fs::path report = dir_ / "report.json";
  const CliRun r = Cli(
      {"partition", "--matroid", Data("k4.json"), "--output", report.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  const Json doc = ReadJsonFile(report.string());
  EXPECT_EQ(doc["command"], "partition");
}

TEST_F(CliTest, Deterministic) {
  const std::vector<std::string> args = {
      "equitable2",         "--matroid", Data("k4.json"),     "--set1",
      Data("s_e0_e5.json"), "--set2",    Data("s_e1_e4.json")};
  const CliRun a = Cli(args);
  const CliRun b = Cli(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

TEST_F(CliTest, Help) {
  const CliRun r = Cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("equitable2"), std::string::npos);
}

TEST_F(CliTest, VerifyAllPass) {
  const CliRun r = Cli({"verify", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = r.Doc();
  ASSERT_EQ(doc["criteria"].size(), 8u);
  for (const Json& c : doc["criteria"]) {
    EXPECT_TRUE(c["passed"].get<bool>()) << c.dump();
  }
}

}  // namespace
}  // namespace equimat
