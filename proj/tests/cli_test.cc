// Copyright 2026 The pdel Authors
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

// Runs the pdel binary end to end.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

struct Output {
  int code = -1;
  std::string out;
};

Output RunCli(const std::string& args) {
  const std::string cmd = std::string(PDEL_CLI) + " " + args + " 2>/dev/null";
  Output r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pdel_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return (dir_ / name).string();
  }

  std::string Seed(const std::string& name) const {
    return std::string(PDEL_SEEDS) + "/" + name;
  }

  fs::path dir_;
};

constexpr const char* kSegment12 =
    R"({"dim":1,"vertices":[[1],[2]],"function":{"dim":1,"gram":[["1"]],)"
    R"("lin":["-3"],"const":"2"},"bounded":true,"kernel":[]})";
constexpr const char* kSquare =
    R"({"dim":2,"vertices":[[0,0],[0,1],[1,0],[1,1]],"function":{"dim":2,)"
    R"("gram":[["1","0"],["0","1"]],"lin":["-1","-1"],"const":"0"},"bounded":true,"kernel":[]})";

TEST_F(CliTest, ValidateExitCodes) {
  EXPECT_EQ(RunCli("validate " + Seed("segment.json")).code, 0);
  const Output g = RunCli("validate " + Seed("gosset_2_21.json"));
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("27 vertices"), std::string::npos);
  EXPECT_EQ(RunCli("validate " + Write("bad.json", "{\"dim\": ")).code, 1);
  EXPECT_EQ(RunCli("validate " + Write("square.json", kSquare)).code, 2);
  EXPECT_EQ(RunCli("validate").code, 1);
}

TEST_F(CliTest, FlipGoldenAndErrors) {
  const Output r = RunCli("flip " + Write("s12.json", kSegment12) + " --ridge '[[2]]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rho_m = 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("witness = [3]\n"), std::string::npos);
  EXPECT_NE(r.out.find("vertices = [2] [3]\n"), std::string::npos);

  const Output m = RunCli("flip " + Seed("segment.json") + " --ridge '[[0]]'");
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("vertices = [-1] [0]\n"), std::string::npos);

  EXPECT_EQ(RunCli("flip " + Seed("segment.json") + " --ridge '[[0],[1]]'").code, 2);
  EXPECT_EQ(RunCli("flip " + Seed("segment.json") + " --ridge 'nope'").code, 1);
}

TEST_F(CliTest, QrankAndCvp) {
  const Output sq =
      RunCli("qrank " + Write("sq.json", R"({"dim":2,"points":[[0,0],[1,0],[0,1],[1,1]]})"));
  EXPECT_EQ(sq.out, "qrank = 2\n");
  EXPECT_EQ(RunCli("qrank " + Write("seg.json", R"({"dim":1,"points":[[0],[1]]})")).out,
            "qrank = 1\n");
  const Output c = RunCli("cvp " + Write("i2.json", R"({"gram":[["1","0"],["0","1"]]})") +
                          " 1/2,1/2");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out,
            "squared distance = 1/2\nminimizers = 4\n[0,0]\n[0,1]\n[1,0]\n[1,1]\n");
  EXPECT_EQ(RunCli("cvp " + Write("neg.json", R"({"gram":[["-1"]]})") + " 0").code, 2);
}

TEST_F(CliTest, ExploreSegmentWritesOutputs) {
  const fs::path out = dir_ / "run";
  const Output r = RunCli("explore --dim 1 --seed " + Seed("segment.json") + " --out " + out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Slurp(out / "graph.gap.txt"), "1: [1, 1]\n");
  EXPECT_TRUE(fs::exists(out / "graph.json"));
  EXPECT_TRUE(fs::exists(out / "state.json"));
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(out / "polytopes")) {
    EXPECT_EQ(e.path().extension(), ".json");
    EXPECT_EQ(e.path().stem().string().size(), 64u);
    ++files;
  }
  EXPECT_EQ(files, 1u);
}

TEST_F(CliTest, ExploreOutputsAreReproducible) {
  const fs::path a = dir_ / "a", b = dir_ / "b";
  for (const fs::path& out : {a, b})
    ASSERT_EQ(RunCli("explore --seed " + Seed("gosset_2_21.json") + " --threads 2 --out " +
                     out.string())
                  .code,
              0);
  for (const char* f : {"graph.gap.txt", "graph.full.gap.txt", "graph.json", "state.json"})
    EXPECT_EQ(Slurp(a / f), Slurp(b / f)) << f;
  const Output again = RunCli("explore --seed " + Seed("gosset_2_21.json") + " --out " +
                              (dir_ / "c").string());
  EXPECT_NE(again.out.find("bounded types: 1\n"), std::string::npos);
}

TEST_F(CliTest, ZeroFlipsThenResume) {
  const fs::path out = dir_ / "run";
  const Output r = RunCli("explore --seed " + Seed("segment.json") + " --max-flips 0 --out " +
                          out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("stopped: max-flips"), std::string::npos);
  EXPECT_EQ(Slurp(out / "graph.gap.txt"), "1:\n");
  const fs::path state = dir_ / "state.json";
  fs::copy_file(out / "state.json", state);
  EXPECT_EQ(RunCli("explore --resume " + state.string() + " --out " + out.string()).code, 0);
  EXPECT_EQ(Slurp(out / "graph.gap.txt"), "1: [1, 1]\n");
}

TEST_F(CliTest, ExploreArgumentErrors) {
  EXPECT_EQ(RunCli("explore --out " + dir_.string()).code, 1);
  EXPECT_EQ(RunCli("explore --seed " + Seed("segment.json") + " --dim 2 --out " + dir_.string()).code, 1);
  EXPECT_EQ(RunCli("explore --seed " + Seed("segment.json") + " --threads 0").code, 1);
  EXPECT_EQ(RunCli("explore --seed " + Seed("segment.json") + " --export xml").code, 1);
  EXPECT_EQ(RunCli("explore --seed " + Write("square.json", kSquare)).code, 2);
}

}  // namespace
