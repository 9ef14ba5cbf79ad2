// Copyright 2026 The HICODE Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace hicode::cli {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "hicode");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = CliMain(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Spit(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("hicode_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesGraphPlantedLayersAndParams) {
  const RunResult r = RunCli({"gen", "--layers", "10:0.5,4:0.2", "--nodes", "80",
                           "--seed", "2", "--out-dir", Path("gen")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "gen" / "graph.txt"));
  EXPECT_TRUE(fs::exists(dir_ / "gen" / "planted1.cmty"));
  EXPECT_TRUE(fs::exists(dir_ / "gen" / "planted2.cmty"));
  const std::string params = Slurp(dir_ / "gen" / "params.csv");
  EXPECT_EQ(params.rfind("key,value\n", 0), 0u);
  EXPECT_NE(params.find("layer2_communities,4\n"), std::string::npos);
  EXPECT_NE(r.out.find("nodes,80\n"), std::string::npos);
}

TEST_F(CliTest, GenNeedsPresetOrLayers) {
  EXPECT_EQ(RunCli({"gen", "--out-dir", Path("x")}).code, kExitUsage);
  EXPECT_EQ(RunCli({"gen", "--preset", "synl9", "--out-dir", Path("x")}).code,
            kExitUsage);
}

TEST_F(CliTest, DetectEvalAndTraceEndToEnd) {
  ASSERT_EQ(RunCli({"gen", "--layers", "12:0.5,5:0.15", "--nodes", "240",
                 "--seed", "1", "--out-dir", Path("g")})
                .code,
            kExitOk);
  const RunResult det =
      RunCli({"detect", "--input", Path("g/graph.txt"), "--out-dir", Path("d"),
           "--fixed-layers", "2", "--refine-iters", "4", "--probe-iters", "1",
           "--truth", Path("g/planted1.cmty"), Path("g/planted2.cmty")});
  ASSERT_EQ(det.code, kExitOk) << det.err;
  EXPECT_EQ(det.out.rfind("layers,2\nlayer1.cmty,", 0), 0u) << det.out;
  for (const char* f : {"layer1.cmty", "layer2.cmty", "manifest.csv",
                        "labels.csv", "timing.csv"}) {
    EXPECT_TRUE(fs::exists(dir_ / "d" / f)) << f;
  }

  const RunResult ev =
      RunCli({"eval", "--detected", Path("d/layer1.cmty"), Path("d/layer2.cmty"),
           "--truth", Path("g/planted1.cmty"), Path("g/planted2.cmty"),
           "--metric", "jcf1", "jcprecision", "jcrecall"});
  ASSERT_EQ(ev.code, kExitOk) << ev.err;
  EXPECT_EQ(ev.out.rfind("metric,value\njcf1,", 0), 0u);
  const double f1 = std::stod(ev.out.substr(ev.out.find("jcf1,") + 5));
  EXPECT_GT(f1, 0.8);

  const RunResult nmi = RunCli({"eval", "--detected", Path("d/layer1.cmty"),
                             "--truth", Path("g/planted1.cmty"), "--metric",
                             "nmi", "modularity", "--graph", Path("g/graph.txt")});
  ASSERT_EQ(nmi.code, kExitOk) << nmi.err;
  EXPECT_NE(nmi.out.find("\nmodularity,"), std::string::npos);

  const RunResult tr = RunCli({"trace", "--manifest", Path("d/manifest.csv")});
  ASSERT_EQ(tr.code, kExitOk) << tr.err;
  EXPECT_EQ(tr.out.rfind("sweep,layer,original_modularity", 0), 0u);
  ASSERT_EQ(RunCli({"trace", "--manifest", Path("d/manifest.csv"), "--out-dir",
                 Path("t")})
                .code,
            kExitOk);
  EXPECT_TRUE(fs::exists(dir_ / "t" / "trace.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "t" / "selection.csv"));
}

TEST_F(CliTest, DetectIsByteIdenticalAcrossRuns) {
  Spit(dir_ / "g.txt",
       "a b\nb c\nc a\nd e\ne f\nf d\nc d\ng h\nh i\ni g\ni a\n");
  for (const char* out : {"r1", "r2"}) {
    ASSERT_EQ(RunCli({"detect", "--input", Path("g.txt"), "--out-dir", Path(out),
                   "--max-layers", "3", "--refine-iters", "3", "--probe-iters",
                   "1", "--seed", "5"})
                  .code,
              kExitOk);
  }
  for (const char* f : {"manifest.csv", "labels.csv", "layer1.cmty"}) {
    EXPECT_EQ(Slurp(dir_ / "r1" / f), Slurp(dir_ / "r2" / f)) << f;
  }
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  Spit(dir_ / "g.txt", "a b\nb c\nc a\nc d\nd e\ne f\nf d\n");
  Spit(dir_ / "run.cfg", "refine_iters = 2\nprobe_iters = 1\nseed = 9\nfixed_layers = 2\n");
  ASSERT_EQ(RunCli({"detect", "--input", Path("g.txt"), "--out-dir", Path("o"),
                 "--config", Path("run.cfg"), "--seed", "4"})
                .code,
            kExitOk);
  const std::string manifest = Slurp(dir_ / "o" / "manifest.csv");
  EXPECT_NE(manifest.find("config,,,,refine_iters,2\n"), std::string::npos);
  EXPECT_NE(manifest.find("config,,,,seed,4\n"), std::string::npos);
  EXPECT_NE(manifest.find("config,,,,fixed_layers,2\n"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  Spit(dir_ / "g.txt", "a b\nb c\n");
  Spit(dir_ / "bad.txt", "a b\nb b\n");
  // Unknown subcommand or option.
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"detect", "--input", Path("g.txt")}).code, kExitUsage);
  // Configuration errors.
  EXPECT_EQ(RunCli({"detect", "--input", Path("g.txt"), "--out-dir", Path("o"),
                 "--base", "labelprop", "--reduction", "reduce-weight"})
                .code,
            kExitUsage);
  EXPECT_EQ(RunCli({"detect", "--input", Path("g.txt"), "--out-dir", Path("o"),
                 "--reduction", "shrink"})
                .code,
            kExitUsage);
  // Runtime errors: bad input data, missing files.
  const RunResult self_loop =
      RunCli({"detect", "--input", Path("bad.txt"), "--out-dir", Path("o")});
  EXPECT_EQ(self_loop.code, kExitRuntimeError);
  EXPECT_NE(self_loop.err.find("line 2"), std::string::npos);
  EXPECT_EQ(RunCli({"detect", "--input", Path("missing.txt"), "--out-dir",
                 Path("o")})
                .code,
            kExitRuntimeError);
  Spit(dir_ / "c.cmty", "a zz\n");
  EXPECT_EQ(RunCli({"eval", "--detected", Path("c.cmty"), "--truth",
                 Path("c.cmty"), "--graph", Path("g.txt")})
                .code,
            kExitRuntimeError);
}

}  // namespace
}  // namespace hicode::cli
