// Copyright 2026 The tropfst Authors.
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "tropfst/cli.hpp"

namespace tropfst::cli {
namespace {

namespace fs = std::filesystem;

std::string DataPath(const std::string &name) {
  return std::string(TROPFST_TEST_DATA_DIR) + "/" + name;
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tropfst_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int RunCmd(const CommandConfig &cfg) {
    out_.str("");
    err_.str("");
    return ::tropfst::cli::Run(cfg, out_, err_);
  }

  std::string Tmp(const std::string &name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, PushWritesPushedMachine) {
  CommandConfig cfg{Command::kPush, DataPath("push_example.fst"), Tmp("out.fst")};
  ASSERT_EQ(RunCmd(cfg), kExitOk) << err_.str();
  EXPECT_EQ(ReadFile(Tmp("out.fst")),
            "I 0 5\n0 1 a A 38\n0 2 a A 0\n1 3 z Z 0\n2 4 x X 0\nF 3 0\nF 4 0\n");

  CommandConfig info{Command::kInfo, Tmp("out.fst")};
  ASSERT_EQ(RunCmd(info), kExitOk);
  EXPECT_NE(out_.str().find("pushed yes"), std::string::npos);
}

TEST_F(CliTest, RmEpsilonThenInfoReportsNoEpsilonArcs) {
  CommandConfig cfg{Command::kRmEpsilon, DataPath("eps_example.fst"), Tmp("out.fst")};
  cfg.trim = true;
  ASSERT_EQ(RunCmd(cfg), kExitOk);
  EXPECT_EQ(ReadFile(Tmp("out.fst")), "I 0 0\n0 1 a a-out 3\nF 1 0\n");
  ASSERT_EQ(RunCmd({Command::kInfo, Tmp("out.fst")}), kExitOk);
  EXPECT_NE(out_.str().find("epsilon_arcs 0\n"), std::string::npos);
}

TEST_F(CliTest, InfoOutput) {
  CommandConfig cfg{Command::kInfo, DataPath("eps_example.fst")};
  cfg.dump_matrix = true;
  ASSERT_EQ(RunCmd(cfg), kExitOk);
  EXPECT_EQ(out_.str(),
            "states 3\narcs 2\nepsilon_arcs 1\ninitial_states 1\n"
            "final_states 1\npushed no\n3 3\ninf 1 inf\ninf inf 2\ninf inf inf\n");
}

TEST_F(CliTest, ValidateReportsViolations) {
  ASSERT_EQ(RunCmd({Command::kValidate, DataPath("push_example.fst")}), kExitOk);
  EXPECT_EQ(out_.str(), "");
  std::ofstream(Tmp("dup.fst")) << "I 0 0\n0 1 a A 1\n0 1 b B 1\nF 1 0\n";
  EXPECT_EQ(RunCmd({Command::kValidate, Tmp("dup.fst")}), kExitDomain);
  EXPECT_NE(out_.str().find("more than one arc"), std::string::npos);
}

TEST_F(CliTest, DecodeWithMetrics) {
  CommandConfig cfg{Command::kDecode, DataPath("push_example.fst")};
  cfg.obs_path = DataPath("push_example.obs");
  cfg.seq_path = DataPath("push_example.seq");
  cfg.theta = 0.0;
  cfg.metrics_path = Tmp("t.csv");
  ASSERT_EQ(RunCmd(cfg), kExitOk) << err_.str();
  EXPECT_EQ(out_.str(), "cost 43\nstates 0 1 3\nilabels a z\nolabels A Z\n");
  EXPECT_EQ(ReadFile(Tmp("t.csv")),
            "step,support,eta,nu,entropy,degenerate\n"
            "0,1,0,0,0,1\n1,1,1,0,0.367879441,1\n2,1,43,0,9.09506346e-18,1\n");

  cfg.theta.reset();
  cfg.metrics_path.clear();
  ASSERT_EQ(RunCmd(cfg), kExitOk);
  EXPECT_EQ(out_.str(), "cost 5\nstates 0 2 4\nilabels a x\nolabels A X\n");
}

TEST_F(CliTest, MetricsGolden) {
  CommandConfig cfg{Command::kMetrics, DataPath("three_state.fst")};
  cfg.obs_path = DataPath("three_state.obs");
  cfg.seq_path = DataPath("three_state.seq");
  cfg.theta = 2.0;
  ASSERT_EQ(RunCmd(cfg), kExitOk);
  EXPECT_EQ(out_.str(), ReadFile(DataPath("three_state_theta2.csv")));
  cfg.theta.reset();
  EXPECT_EQ(RunCmd(cfg), kExitUsage);
}

TEST_F(CliTest, ExitStatuses) {
  EXPECT_EQ(RunCmd({Command::kInfo, Tmp("missing.fst")}), kExitUsage);
  std::ofstream(Tmp("bad.fst")) << "I 0 0\n0 1 a\n";
  EXPECT_EQ(RunCmd({Command::kPush, Tmp("bad.fst"), Tmp("o.fst")}), kExitUsage);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);

  std::ofstream(Tmp("neg.fst")) << "I 0 0\n0 1 a A 1\n1 0 b B -5\nF 1 0\n";
  EXPECT_EQ(RunCmd({Command::kPush, Tmp("neg.fst"), Tmp("o.fst")}), kExitDomain);
  EXPECT_NE(err_.str().find("negative"), std::string::npos);

  std::ofstream(Tmp("seq.txt")) << "o unknown\n";
  CommandConfig cfg{Command::kDecode, DataPath("push_example.fst")};
  cfg.obs_path = DataPath("push_example.obs");
  cfg.seq_path = Tmp("seq.txt");
  EXPECT_EQ(RunCmd(cfg), kExitDomain);
  EXPECT_NE(err_.str().find("unknown symbol"), std::string::npos);
}

}  // namespace
}  // namespace tropfst::cli
