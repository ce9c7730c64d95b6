// Copyright 2026 The evss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "evss/commands.hpp"
#include "evss/errors.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kSeed(64, '7');

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(EVSS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = ::pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("evss-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string file(const std::string& t) const { return (dir_ / ("share-" + t + ".evs")).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SplitJoinRoundTrip) {
  ASSERT_EQ(run("split --ell 8 --secret 0xA5 --t 1-3,17,18,65537 --seed " + kSeed + " --out " + dir_.string()).code, 0);
  for (const char* triple : {"1 2 3", "1 2 17", "1 17 18", "1 17 65537"}) {
    std::string args = "join";
    std::string t;
    for (const char* c = triple;; ++c) {
      if (*c == ' ' || *c == '\0') {
        args += " " + file(t);
        t.clear();
        if (*c == '\0') break;
      } else {
        t += *c;
      }
    }
    const CliResult r = run(args);
    EXPECT_EQ(r.code, 0) << triple;
    EXPECT_EQ(r.out, "a5\n") << triple;
  }
}

TEST_F(Cli, SeededOutputIsReproducible) {
  const fs::path a = dir_ / "a", b = dir_ / "b";
  ASSERT_EQ(run("split --ell 8 --secret 3c --t 1,17 --seed " + kSeed + " --out " + a.string()).code, 0);
  ASSERT_EQ(run("split --ell 8 --secret 3c --t 17,1 --seed " + kSeed + " --out " + b.string()).code, 0);
  for (const char* name : {"share-1.evs", "share-17.evs"}) {
    EXPECT_EQ(evss::read_file(a / name), evss::read_file(b / name)) << name;
  }
}

TEST_F(Cli, ErrorsAndExitCodes) {
  EXPECT_EQ(run("split --ell 4 --secret A5 --t 1 --out " + dir_.string()).code, 2);  // secret wider than ell
  EXPECT_EQ(run("split --ell 8 --secret zz --t 1 --out " + dir_.string()).code, 2);
  EXPECT_EQ(run("split --ell 1 --secret 1 --t 9 --layout 4,4 --out " + dir_.string()).code, 4);
  ASSERT_EQ(run("split --ell 8 --secret 01 --t 1,2 --seed " + kSeed + " --out " + dir_.string()).code, 0);
  EXPECT_EQ(run("join " + file("1") + " " + file("2")).code, 2);
  EXPECT_EQ(run("join " + file("1") + " " + file("1") + " " + file("2")).code, 2);
  {
    std::ofstream bad(file("9"), std::ios::binary);
    bad << "EVS1junk";
  }
  EXPECT_EQ(run("join " + file("1") + " " + file("2") + " " + file("9")).code, 3);
  EXPECT_EQ(run("info " + file("404")).code, 3);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, TamperedCurveShareNeverCrashes) {
  ASSERT_EQ(run("split --ell 8 --secret 5e --t 1,2,3 --seed " + kSeed + " --out " + dir_.string()).code, 0);
  const auto original = evss::read_file(file("3"));
  for (std::size_t pos = original.size() - 12; pos < original.size(); ++pos) {
    auto bytes = original;
    bytes[pos] ^= 0x40;
    evss::write_file_atomic(file("3"), bytes);
    const CliResult r = run("join " + file("1") + " " + file("2") + " " + file("3"));
    EXPECT_TRUE(r.code == 0 || r.code == 3 || r.code == 5) << "pos " << pos << " code " << r.code;
  }
}

TEST_F(Cli, InfoAndSizes) {
  ASSERT_EQ(run("split --ell 8 --secret 00 --t 17 --seed " + kSeed + " --out " + dir_.string()).code, 0);
  const CliResult info = run("info " + file("17"));
  EXPECT_EQ(info.code, 0);
  EXPECT_NE(info.out.find("generation 2"), std::string::npos);
  EXPECT_NE(info.out.find("h          1"), std::string::npos);
  EXPECT_NE(info.out.find("P3 bits    24"), std::string::npos);
  const CliResult sizes = run("sizes --ell 8 --t 17,100,65536 --csv");
  EXPECT_EQ(sizes.code, 0);
  EXPECT_NE(sizes.out.find("17,2,1,3,16,8,24,8,8,64,"), std::string::npos) << sizes.out;
  EXPECT_NE(sizes.out.find("100,2,84,3,16,8,24,8,8,64,"), std::string::npos);
}

TEST_F(Cli, AuditAndAttackDemo) {
  const CliResult a = run("audit --scheme static --ell 1 --m 2");
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("PASS"), std::string::npos);
  EXPECT_EQ(run("audit --scheme static --ell 1 --m 2 --odd").code, 5);
  EXPECT_EQ(run("audit --scheme flawed --ell 1 --layout 1,1,1 --width 2").code, 5);
  EXPECT_EQ(run("audit --scheme flawed --ell 1 --layout 4,4,8 --width 2 --pairs 5:9").code, 2);  // refusal
  const CliResult atk = run("attack-demo --secret a5 --seed " + kSeed + " --trials 3");
  EXPECT_EQ(atk.code, 0);
  EXPECT_NE(atk.out.find("secret a5  recovered a5  match"), std::string::npos) << atk.out;
  EXPECT_EQ(run("attack-demo --low 1 --high 17").code, 2);
}
