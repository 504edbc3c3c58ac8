// Copyright 2026 The penclose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the penclose executable and checks its output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Result {
  int exit_code = -1;
  std::string out;
};

// stdout and stderr, merged.
Result RunCli(const std::string& args) {
  std::string cmd = std::string(PENCLOSE_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("penclose_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SolvesThreeTriangles) {
  auto tri = Write("a.tri", "ref 0 0 1 0 0 1\n1 0 0 4\n2 2 2 4\n3 5 0 2\n");
  auto qry = Write("a.qry", "5/2 5/2\n2 2\n10 10\n");
  for (const char* mode : {"cascaded", "binary"}) {
    auto r = RunCli("solve " + tri + " " + qry + " --mode " + mode);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "5/2 5/2 : 2\n2 2 : 1 2\n10 10 : -\n");
  }
}

TEST_F(CliTest, EmptyTriangleFile) {
  auto tri = Write("e.tri", "ref 0 0 1 0 0 1\n");
  auto qry = Write("e.qry", "3 4\n");
  auto r = RunCli("solve " + tri + " " + qry);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "3 4 : -\n");
}

TEST_F(CliTest, StatsGoToStderr) {
  auto tri = Write("a.tri", "ref 0 0 1 0 0 1\n1 0 0 4\n");
  auto qry = Write("a.qry", "1 1\n");
  auto cmd = std::string(PENCLOSE_CLI) + " solve " + tri + " " + qry +
             " --format stats 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buf[256] = {};
  size_t n = fread(buf, 1, sizeof buf - 1, pipe);
  pclose(pipe);
  EXPECT_EQ(std::string(buf, n), "1 1 : 1\n");
  auto r = RunCli("solve " + tri + " " + qry + " --format stats");
  EXPECT_THAT(r.out, HasSubstr("key_cmp"));
}

TEST_F(CliTest, MalformedRationalExitsWithDiagnostic) {
  auto tri = Write("b.tri", "ref 0 0 1 0 0 1\n1 0 3/0 4\n");
  auto qry = Write("b.qry", "1 1\n");
  auto r = RunCli("solve " + tri + " " + qry);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_THAT(r.out, HasSubstr("line 2, column 5"));
}

TEST_F(CliTest, NotHomotheticNamesTriangle) {
  auto tri = Write("c.tri", "ref 0 0 1 0 0 1\n17 2 3 5 3 2 7\n");
  auto qry = Write("c.qry", "1 1\n");
  auto r = RunCli("solve " + tri + " " + qry);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_THAT(r.out, HasSubstr("triangle 17"));
  EXPECT_THAT(r.out, HasSubstr("not homothetic"));
}

TEST_F(CliTest, BadArgumentsAreInputErrors) {
  EXPECT_EQ(RunCli("solve /nonexistent.tri /nonexistent.qry").exit_code, 1);
  EXPECT_EQ(RunCli("frobnicate").exit_code, 1);
  auto tri = Write("a.tri", "ref 0 0 1 0 0 1\n");
  auto qry = Write("a.qry", "1 1\n");
  EXPECT_EQ(RunCli("solve " + tri + " " + qry + " --mode fast").exit_code, 1);
  EXPECT_EQ(RunCli("gen --n 5 --out /nonexistent/dir/x").exit_code, 1);
}

TEST_F(CliTest, GenRoundTripsThroughSolve) {
  auto prefix = (dir_ / "g").string();
  ASSERT_EQ(RunCli("gen --n 40 --seed 3 --profile nested --out " + prefix).exit_code, 0);
  auto first = RunCli("solve " + prefix + ".tri " + prefix + ".qry");
  EXPECT_EQ(first.exit_code, 0);
  auto prefix2 = (dir_ / "h").string();
  ASSERT_EQ(RunCli("gen --n 40 --seed 3 --profile nested --out " + prefix2).exit_code, 0);
  std::ifstream a(prefix + ".tri"), b(prefix2 + ".tri");
  std::string ta((std::istreambuf_iterator<char>(a)), {}),
      tb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(ta, tb);
  auto binary = RunCli("solve " + prefix + ".tri " + prefix + ".qry --mode binary --threads 1");
  EXPECT_EQ(first.out, binary.out);
  ASSERT_EQ(RunCli("gen --n 0 --out " + prefix).exit_code, 0);
  EXPECT_EQ(RunCli("solve " + prefix + ".tri " + prefix + ".qry").exit_code, 0);
}

TEST_F(CliTest, ValidatePasses) {
  auto r = RunCli("validate --n 0");
  EXPECT_EQ(r.exit_code, 0);
  r = RunCli("validate --n 300 --seed 1 --trials 3 --profile duplicates");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_THAT(r.out, StartsWith("PASS"));
}

TEST_F(CliTest, ValidateCatchesInjectedFault) {
  auto r = RunCli("validate --n 50 --seed 1 --trials 2 --inject-fault");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_THAT(r.out, StartsWith("FAIL"));
  EXPECT_THAT(r.out, HasSubstr("ref 0 0 1 0 0 1"));
}

TEST_F(CliTest, BenchEmitsOneRowPerSizeAndMode) {
  auto r = RunCli("bench --n 64,128 --queries 50");
  ASSERT_EQ(r.exit_code, 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 5);
  EXPECT_THAT(r.out, HasSubstr("key_minus_2k_max"));
  EXPECT_THAT(r.out, HasSubstr("\tcascaded\t"));
}

TEST_F(CliTest, Polygons) {
  auto poly = Write("p.poly", "poly 0 0 1 0 1 1 0 1\n7 0 0 4\n8 4 0 8 0 8 4 4 4\n");
  auto qry = Write("p.qry", "2 2\n5 1\n4 2\n9 9\n");
  auto r = RunCli("polygons " + poly + " " + qry);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "2 2 : 7\n5 1 : 8\n4 2 : 7 8\n9 9 : -\n");
}

}  // namespace
